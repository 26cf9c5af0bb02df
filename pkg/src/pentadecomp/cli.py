"""Command-line surface for decomposition, certification, form queries, and sweeps.

Usage:
    pentadecomp decompose --n 9001 --triple 1,1,2
    pentadecomp verify --coeffs 1,1,1,2 --max 8891
    pentadecomp verify --sun15 --max 10000
    pentadecomp forms --form 1,2,10 --q 7
    pentadecomp certify --n 9 --triple 1,1,2 --witness 2,1,1,1

Exit codes:
    0: success (and, for verify, no unexpected gaps)
    1: failed certification / gaps where a theorem promises none
    2: unsupported triple, form, or bad usage
    3: internal predicate violation (diagnostic record on stderr)

Output is line-delimited JSON on stdout; all integers are decimal strings so
values beyond 2**53 survive lax JSON consumers.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .decompose import CONSTRUCTIVE_TRIPLES, Decomposition, certify, decompose
from .errors import (
    DomainError,
    PentadecompError,
    PredicateViolationError,
    UnsupportedTripleError,
)
from .sieve import (
    DEFAULT_MEMORY_BUDGET,
    PROVEN_TRIPLES,
    SUN_TRIPLES,
    ju_universality_check,
    verify_range,
)
from .ternary import (
    DiagonalForm,
    dickson_excluded_1_2_10,
    lemma31_hypothesis,
    lemma41_hypothesis,
    represent,
)

MEMORY_BUDGET_ENV = "PENTADECOMP_MEMORY_BUDGET"


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record) + "\n")


def _decomposition_record(d: Decomposition) -> dict:
    rec = {
        "n": str(d.n),
        "triple": [str(c) for c in d.triple],
        "w0": str(d.w0),
        "x0": str(d.x0),
        "y0": str(d.y0),
        "z0": str(d.z0),
        "method": d.method,
        "certified": True,
    }
    if d.B is not None:
        rec["B"] = str(d.B)
    if d.delta is not None:
        rec["delta"] = str(d.delta)
    return rec


def cmd_decompose(args: argparse.Namespace) -> int:
    triple = tuple(args.triple)
    try:
        d = decompose(args.n, triple, method=args.method)
    except (UnsupportedTripleError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PentadecompError as exc:
        print(json.dumps({"type": "diagnostic", "error": str(exc)}), file=sys.stderr)
        return 3
    if not certify(d):
        print(json.dumps({"type": "diagnostic", "error": "certification failed"}), file=sys.stderr)
        return 3
    _emit(_decomposition_record(d))
    return 0


def _memory_budget(args: argparse.Namespace) -> int:
    if args.memory_budget is not None:
        return args.memory_budget
    env = os.environ.get(MEMORY_BUDGET_ENV)
    return int(env) if env else DEFAULT_MEMORY_BUDGET


def cmd_verify(args: argparse.Namespace) -> int:
    from .report import render_figures, write_csv, write_jsonl

    budget = _memory_budget(args)
    if args.sun15:
        coeff_lists = [(1,) + t for t in SUN_TRIPLES]
    elif args.coeffs:
        coeff_lists = [tuple(args.coeffs)]
    else:
        print("error: need --coeffs or --sun15", file=sys.stderr)
        return 2
    status = 0
    for coeffs in coeff_lists:
        report = verify_range(
            coeffs,
            args.max,
            generalized=args.generalized,
            strategy=args.strategy,
            workers=args.workers,
            memory_budget=budget,
            with_density=args.plot_dir is not None,
        )
        if args.format == "csv":
            write_csv(report, sys.stdout, report_gaps=args.report_gaps)
        else:
            write_jsonl(report, sys.stdout, report_gaps=args.report_gaps)
        if args.plot_dir:
            for path in render_figures(report, args.plot_dir):
                print(f"figure: {path}", file=sys.stderr)
        theorem_backed = (
            len(coeffs) == 4 and coeffs[0] == 1 and tuple(coeffs[1:]) in PROVEN_TRIPLES
        )
        if report.gaps and theorem_backed:
            status = 1
    return status


def cmd_forms(args: argparse.Namespace) -> int:
    coeffs = tuple(args.form)
    if len(coeffs) != 3:
        print("error: --form needs three coefficients", file=sys.stderr)
        return 2
    form = DiagonalForm(*coeffs)
    key = tuple(sorted(coeffs))
    predicates = {
        (1, 2, 10): ("dickson_1_2_10", lambda q: not dickson_excluded_1_2_10(q)),
        (1, 1, 10): ("lemma31_hypothesis", lemma31_hypothesis),
        (1, 1, 7): ("lemma41_hypothesis", lemma41_hypothesis),
    }
    rec: dict = {"form": [str(c) for c in coeffs], "q": str(args.q)}
    if key in predicates:
        name, pred = predicates[key]
        rec["predicate"] = name
        rec["predicate_promises"] = bool(pred(args.q))
    elif args.predicate_only:
        print(f"error: no exceptional-set predicate for form {coeffs}", file=sys.stderr)
        return 2
    rep = represent(form, args.q)
    if rep is None:
        rec["representable"] = False
    else:
        rec["representable"] = True
        rec["witness"] = [str(rep.a), str(rep.b), str(rep.c)]
    _emit(rec)
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    if len(args.witness) != 4:
        print("error: --witness needs w0,x0,y0,z0", file=sys.stderr)
        return 2
    d = Decomposition(tuple(args.triple), args.n, *args.witness, method="external")
    ok = certify(d)
    _emit({"n": str(args.n), "certified": ok})
    return 0 if ok else 1


def cmd_ju(args: argparse.Namespace) -> int:
    ok, witnesses = ju_universality_check(tuple(args.coeffs))
    rec = {
        "coefficients": [str(c) for c in args.coeffs],
        "universal": ok,
        "witnesses": {
            str(t): [str(v) for v in w] if w is not None else None
            for t, w in witnesses.items()
        },
    }
    _emit(rec)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentadecomp",
        description="Constructive pentagonal-sum decompositions and range verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose n = p5(w)+b*p5(x)+c*p5(y)+d*p5(z)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--triple", type=_parse_ints, required=True, metavar="b,c,d")
    p.add_argument("--method", choices=["auto", "constructive", "search"], default="auto")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="sieve [0, N] for unrepresentable n")
    p.add_argument("--coeffs", type=_parse_ints, metavar="1,b,c,d")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.add_argument("--sun15", action="store_true", help="run all 15 conjectured triples")
    p.add_argument("--generalized", action="store_true")
    p.add_argument("--report-gaps", action="store_true")
    p.add_argument("--strategy", choices=["auto", "layered", "pairs"], default="auto")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--memory-budget", type=int, default=None, metavar="BYTES")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--plot-dir", default=None, help="render figures into this directory")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("forms", help="ternary form representation / exclusion query")
    p.add_argument("--form", type=_parse_ints, required=True, metavar="a,b,c")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--predicate-only", action="store_true")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("certify", help="re-check a decomposition witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--triple", type=_parse_ints, required=True, metavar="b,c,d")
    p.add_argument("--witness", type=_parse_ints, required=True, metavar="w0,x0,y0,z0")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("ju", help="Ju twelve-number universality check")
    p.add_argument("--coeffs", type=_parse_ints, required=True)
    p.set_defaults(func=cmd_ju)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PredicateViolationError as exc:
        print(json.dumps({"type": "diagnostic", "error": str(exc)}), file=sys.stderr)
        return 3
    except PentadecompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
