"""Machine-readable report emission and figure rendering for verification runs.

Reports stream as line-delimited JSON (one object per gap, then a summary) or
CSV.  All integers are rendered as decimal strings so 53-bit JSON consumers
never truncate.  Figures are optional matplotlib renderings written next to
the delimited output.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import IO

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .sieve import VerificationReport  # noqa: E402


def _summary_record(report: VerificationReport) -> dict:
    return {
        "type": "summary",
        "coefficients": [str(c) for c in report.coefficients],
        "bound": str(report.bound),
        "generalized": report.generalized,
        "checked": str(report.checked),
        "gap_count": str(report.gap_count),
        "max_gap": str(max(report.gaps)) if report.gaps else None,
        "elapsed_s": round(report.elapsed, 6),
        "memory_peak_bytes": str(report.memory_peak),
        "strategy": report.strategy,
        "partial": report.partial,
    }


def write_jsonl(report: VerificationReport, stream: IO[str], report_gaps: bool = True) -> None:
    """Stream per-gap records (ascending) followed by one summary record."""
    if report_gaps:
        for n in report.gaps:
            stream.write(json.dumps({"type": "gap", "n": str(n)}) + "\n")
    stream.write(json.dumps(_summary_record(report)) + "\n")


def write_csv(report: VerificationReport, stream: IO[str], report_gaps: bool = True) -> None:
    writer = csv.writer(stream)
    writer.writerow(["record", "key", "value"])
    if report_gaps:
        for n in report.gaps:
            writer.writerow(["gap", "n", str(n)])
    for key, value in _summary_record(report).items():
        if key != "type":
            writer.writerow(["summary", key, value])


def render_figures(report: VerificationReport, outdir: str | Path) -> list[Path]:
    """Render coverage/gap figures for a report; returns the written paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    tag = "c" + "-".join(str(c) for c in report.coefficients)
    written: list[Path] = []

    fig, ax = plt.subplots(figsize=(8, 4.5))
    if report.density:
        xs = [start for start, _ in report.density]
        ys = [frac for _, frac in report.density]
        ax.plot(xs, ys, lw=1.0, color="tab:blue", label="representable fraction")
        ax.set_ylim(-0.02, 1.02)
        ax.set_ylabel("representable fraction per bucket")
    if report.gaps:
        ax.plot(
            report.gaps,
            [0.0] * len(report.gaps),
            "|",
            color="tab:red",
            markersize=12,
            label=f"gaps ({report.gap_count})",
        )
    ax.set_xlabel("n")
    ax.set_title(
        f"weights {report.coefficients}, N={report.bound}, "
        f"{report.gap_count} gap(s), {report.strategy}"
    )
    ax.legend(loc="lower right")
    fig.tight_layout()
    path = outdir / f"coverage_{tag}_N{report.bound}.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    if report.gaps:
        fig, ax = plt.subplots(figsize=(8, 4.5))
        ax.hist(report.gaps, bins=min(60, max(5, report.gap_count)), color="tab:red")
        ax.set_xlabel("n")
        ax.set_ylabel("gap count")
        ax.set_title(f"gap distribution, weights {report.coefficients}, N={report.bound}")
        fig.tight_layout()
        path = outdir / f"gaps_{tag}_N{report.bound}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
