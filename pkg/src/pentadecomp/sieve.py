"""High-performance range verification of weighted pentagonal sums.

Two strategies compute the representable set over [0, N]:

* ``layered``: a packed bit array per accumulated coefficient; each further
  coefficient ORs the previous layer shifted by every scaled pentagonal
  value.  The final layer can be split into chunks that are processed
  independently (optionally by threads) and merged, bit-identically.
* ``pairs``: for four coefficients at large N, a bit table of all two-term
  sums over the two smallest coefficients, then shifted AND-NOT probing over
  the two largest; stragglers are finished off individually.  This avoids
  quadratically many full-array passes.

Bit i of word w (uint64, little-endian bit order) is integer 64*w + i.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import DomainError, MemoryBudgetError
from .polygonal import generalized_pentagonals_upto, pentagonals_upto

DEFAULT_MEMORY_BUDGET = 1 << 30  # 1 GiB

# The twelve numbers of Ju's universality criterion.
JU_NUMBERS = (1, 3, 8, 9, 11, 18, 19, 25, 27, 43, 98, 109)

# The 15 conjectured coefficient triples (b, c, d) with leading weight 1.
SUN_TRIPLES = (
    (1, 1, 2), (1, 2, 2), (1, 2, 3), (1, 2, 4), (1, 2, 5),
    (1, 2, 6), (1, 3, 6), (2, 2, 4), (2, 2, 6), (2, 3, 4),
    (2, 3, 5), (2, 3, 7), (2, 4, 6), (2, 4, 7), (2, 4, 8),
)

# Triples whose gap-freeness is proven rather than conjectured.
PROVEN_TRIPLES = ((1, 1, 2), (1, 2, 2), (1, 2, 3), (1, 2, 4), (1, 2, 6), (2, 3, 4))


def scaled_values(coeff: int, bound: int, generalized: bool) -> np.ndarray:
    """Ascending int64 array of coeff * p for pentagonal p with the product <= bound."""
    if generalized:
        vals = generalized_pentagonals_upto(bound // coeff)
    else:
        vals = pentagonals_upto(bound // coeff).values
    return np.asarray(vals, dtype=np.int64) * coeff


def _or_shifted(dst: np.ndarray, src: np.ndarray, shift: int) -> None:
    """dst |= (src << shift), arrays of uint64 words, shift in bits >= 0."""
    w, b = divmod(shift, 64)
    n = len(dst)
    if w >= n:
        return
    if b == 0:
        np.bitwise_or(dst[w:], src[: n - w], out=dst[w:])
    else:
        np.bitwise_or(dst[w:], src[: n - w] << np.uint64(b), out=dst[w:])
        if w + 1 < n:
            np.bitwise_or(
                dst[w + 1 :], src[: n - w - 1] >> np.uint64(64 - b), out=dst[w + 1 :]
            )


def _andnot_shifted(dst: np.ndarray, src: np.ndarray, shift: int) -> None:
    """dst &= ~(src << shift)."""
    w, b = divmod(shift, 64)
    n = len(dst)
    if w >= n:
        return
    if b == 0:
        dst[w:] &= ~src[: n - w]
    else:
        dst[w:] &= ~(src[: n - w] << np.uint64(b))
        if w + 1 < n:
            dst[w + 1 :] &= ~(src[: n - w - 1] >> np.uint64(64 - b))


def _window(src: np.ndarray, start_bit: int, nwords: int) -> np.ndarray:
    """Words covering bits [start_bit, start_bit + 64*nwords) of src, zero-padded."""
    out = np.zeros(nwords, dtype=np.uint64)
    if start_bit < 0:
        # bits before position 0 are zero; shift src forward instead
        _or_shifted(out, src, -start_bit)
        return out
    w, b = divmod(start_bit, 64)
    hi = min(len(src), w + nwords)
    if w < len(src):
        if b == 0:
            out[: hi - w] = src[w:hi]
        else:
            out[: hi - w] = src[w:hi] >> np.uint64(b)
            hi2 = min(len(src), w + nwords + 1)
            if w + 1 < hi2:
                out[: hi2 - w - 1] |= src[w + 1 : hi2] << np.uint64(64 - b)
    return out


def _mask_tail(words: np.ndarray, nbits: int) -> None:
    """Zero the bits at positions >= nbits in the last word."""
    extra = len(words) * 64 - nbits
    if extra:
        words[-1] &= np.uint64((1 << (64 - extra)) - 1)


def _zero_bits(words: np.ndarray, nbits: int) -> list[int]:
    """Ascending positions < nbits whose bit is 0."""
    comp = ~words
    _mask_tail(comp, nbits)  # treat padding as set (not gaps)
    # padding bits were complemented to 0 only if originally 1; force them off:
    idx = np.flatnonzero(comp)
    out: list[int] = []
    for w in idx:
        word = int(comp[w])
        base = 64 * int(w)
        while word:
            low = word & -word
            out.append(base + low.bit_length() - 1)
            word ^= low
    return [v for v in out if v < nbits]


@dataclass
class VerificationReport:
    """Outcome of a representability sweep over [0, N]."""

    coefficients: tuple[int, ...]
    bound: int
    generalized: bool
    gaps: list[int]
    checked: int
    elapsed: float
    memory_peak: int
    strategy: str
    partial: bool = False
    density: list[tuple[int, float]] | None = field(default=None, repr=False)

    @property
    def gap_count(self) -> int:
        return len(self.gaps)


def _budget_check(nbytes: int, budget: int, what: str) -> None:
    if nbytes > budget:
        raise MemoryBudgetError(f"{what} needs {nbytes} bytes, budget is {budget}")


def _density_profile(words: np.ndarray, nbits: int, buckets: int = 256) -> list[tuple[int, float]]:
    """Per-bucket fraction of representable integers, for reporting/plots."""
    if nbits == 0:
        return []
    u8 = words.view(np.uint8)
    counts = np.unpackbits(u8, bitorder="little", count=nbits)
    step = max(1, nbits // buckets)
    out = []
    for start in range(0, nbits, step):
        seg = counts[start : start + step]
        out.append((start, float(seg.mean())))
    return out


def _layered_sieve(
    coeffs: tuple[int, ...],
    N: int,
    generalized: bool,
    budget: int,
    chunk_bits: int | None,
    workers: int,
) -> tuple[np.ndarray, int]:
    nbits = N + 1
    nwords = (nbits + 63) // 64
    mem = 2 * nwords * 8
    _budget_check(mem, budget, "layered sieve masks")
    vals0 = scaled_values(coeffs[0], N, generalized)
    mask = np.zeros(nwords, dtype=np.uint64)
    np.bitwise_or.at(
        mask, vals0 // 64, np.uint64(1) << (vals0 % 64).astype(np.uint64)
    )
    for coeff in coeffs[1:-1]:
        shifts = scaled_values(coeff, N, generalized).tolist()
        nxt = np.zeros(nwords, dtype=np.uint64)
        for s in shifts:
            _or_shifted(nxt, mask, s)
        mask = nxt
    # final layer, chunked
    last = coeffs[-1]
    shifts = scaled_values(last, N, generalized).tolist()
    final = np.zeros(nwords, dtype=np.uint64)
    if chunk_bits is None:
        for s in shifts:
            _or_shifted(final, mask, s)
    else:
        cwords = max(1, chunk_bits // 64)

        def do_chunk(w0: int) -> None:
            nw = min(cwords, nwords - w0)
            dst = final[w0 : w0 + nw]
            for s in shifts:
                win = _window(mask, 64 * w0 - s, nw)
                np.bitwise_or(dst, win, out=dst)

        starts = list(range(0, nwords, cwords))
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                list(pool.map(do_chunk, starts))
        else:
            for w0 in starts:
                do_chunk(w0)
    _mask_tail(final, nbits)
    return final, mem


def naive_representable(
    coeffs: tuple[int, ...], n: int, generalized: bool = False
) -> tuple[int, ...] | None:
    """Independent per-n witness search over value lists (used for re-checks)."""
    pools = [
        scaled_values(c, n, generalized).tolist() if n >= 0 else [] for c in coeffs
    ]
    last = set(pools[-1])

    def rec(i: int, rem: int, acc: list[int]) -> tuple[int, ...] | None:
        if i == len(pools) - 1:
            if rem in last:
                return tuple(acc + [rem])
            return None
        for v in pools[i]:
            if v > rem:
                break
            got = rec(i + 1, rem - v, acc + [v])
            if got is not None:
                return got
        return None

    return rec(0, n, [])


def _pair_sieve(
    coeffs: tuple[int, ...],
    N: int,
    budget: int,
    probe_limit: int,
) -> tuple[list[int], int]:
    """Gap list for a 4-coefficient nonnegative sweep via the pair-table strategy."""
    a1, a2, a3, a4 = sorted(coeffs)
    nbits = N + 1
    nwords = (nbits + 63) // 64
    chunk = min(nbits, 1 << 27)  # byte-table chunk, 128 MiB max
    mem = chunk + 2 * nwords * 8
    _budget_check(mem, budget, "pair-table sieve")
    v1 = scaled_values(a1, N, False)
    v2 = scaled_values(a2, N, False)
    # pair table: bit n set iff n = a1*p + a2*q
    pair_words = np.empty(0, dtype=np.uint64)
    pieces = []
    for lo in range(0, nbits, chunk):
        hi = min(lo + chunk, nbits)
        table = np.zeros(((hi - lo + 63) // 64) * 64, dtype=np.uint8)
        for p in v1.tolist():
            if p >= hi:
                break
            j0 = np.searchsorted(v2, lo - p, side="left")
            j1 = np.searchsorted(v2, hi - p, side="left")
            if j1 > j0:
                table[p + v2[j0:j1] - lo] = 1
        packed = np.packbits(table, bitorder="little")
        pieces.append(packed.view(np.uint64))
    pair_words = np.concatenate(pieces)[:nwords]
    _mask_tail(pair_words, nbits)
    # probe phase: knock out survivors with the smallest a3/a4 combinations
    v3 = scaled_values(a3, N, False)
    v4 = scaled_values(a4, N, False)
    k3 = min(len(v3), 128)
    k4 = min(len(v4), 128)
    sums = (v3[:k3, None] + v4[None, :k4]).ravel()
    sums = np.unique(sums[sums <= N])
    survivors = np.full(nwords, np.uint64(0xFFFFFFFFFFFFFFFF))
    _mask_tail(survivors, nbits)
    used = 0
    for s in sums.tolist()[:probe_limit]:
        _andnot_shifted(survivors, pair_words, s)
        used += 1
        if used % 64 == 0 and not survivors.any():
            break
    # straggler phase: full per-n check of anything still unmarked
    gaps: list[int] = []
    l3 = v3.tolist()
    l4 = v4.tolist()
    for n in _zero_bits(~survivors, nbits):
        covered = False
        for s4 in l4:
            if s4 > n:
                break
            rem = n - s4
            for s3 in l3:
                if s3 > rem:
                    break
                t = rem - s3
                if int(pair_words[t // 64]) >> (t % 64) & 1:
                    covered = True
                    break
            if covered:
                break
        if not covered:
            gaps.append(n)
    return gaps, mem


def verify_range(
    coefficients,
    N: int,
    generalized: bool = False,
    *,
    strategy: str = "auto",
    chunk_bits: int | None = None,
    workers: int = 1,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
    probe_limit: int = 4096,
    recheck_sample: int = 5,
    with_density: bool = False,
) -> VerificationReport:
    """Representable-set sweep of [0, N]; gaps are the unrepresentable n."""
    coefficients = tuple(int(c) for c in coefficients)
    if N < 0:
        raise DomainError("N must be nonnegative")
    if not coefficients or min(coefficients) <= 0:
        raise DomainError("coefficients must be positive")
    if strategy == "auto":
        strategy = (
            "pairs"
            if len(coefficients) == 4 and not generalized and N > 10**7
            else "layered"
        )
    t0 = time.perf_counter()
    density = None
    if strategy == "layered":
        mask, mem = _layered_sieve(
            coefficients, N, generalized, memory_budget, chunk_bits, workers
        )
        gaps = _zero_bits(mask, N + 1)
        if with_density:
            density = _density_profile(mask, N + 1)
    elif strategy == "pairs":
        if len(coefficients) != 4 or generalized:
            raise DomainError("pairs strategy needs four coefficients, nonnegative mode")
        gaps, mem = _pair_sieve(coefficients, N, memory_budget, probe_limit)
    else:
        raise DomainError(f"unknown strategy {strategy!r}")
    elapsed = time.perf_counter() - t0
    # spot re-check a sample of reported gaps with an independent search
    for n in random.Random(0).sample(gaps, min(recheck_sample, len(gaps))):
        if naive_representable(coefficients, n, generalized) is not None:
            raise DomainError(f"sieve reported n={n} as a gap but a witness exists")
    return VerificationReport(
        coefficients=coefficients,
        bound=N,
        generalized=generalized,
        gaps=gaps,
        checked=N + 1,
        elapsed=elapsed,
        memory_peak=mem,
        strategy=strategy,
        density=density,
    )


def three_pentagonal_gaps(N: int, **kwargs) -> list[int]:
    """All n <= N not expressible as a sum of three pentagonal numbers."""
    return verify_range((1, 1, 1), N, **kwargs).gaps


def ju_universality_check(
    coefficients,
) -> tuple[bool, dict[int, tuple[int, ...] | None]]:
    """Ju's criterion over generalized pentagonal arguments.

    Returns (universal, witnesses) where witnesses maps each of the twelve
    criterion numbers to a tuple of summands (or None if unrepresentable).
    """
    coefficients = tuple(int(c) for c in coefficients)
    if not coefficients or min(coefficients) <= 0:
        raise DomainError("coefficients must be positive")
    witnesses: dict[int, tuple[int, ...] | None] = {}
    for t in JU_NUMBERS:
        witnesses[t] = naive_representable(coefficients, t, generalized=True)
    return all(w is not None for w in witnesses.values()), witnesses


def verify_sun_15(N: int, **kwargs) -> dict[tuple[int, int, int], VerificationReport]:
    """verify_range((1, b, c, d), N) for each of the 15 conjectured triples."""
    return {
        triple: verify_range((1,) + triple, N, **kwargs) for triple in SUN_TRIPLES
    }
