"""Constructive decomposition n = p5(w) + b*p5(x) + c*p5(y) + d*p5(z).

Four coefficient triples have a constructive path:

==========  ========  =====================================  ==================
triple      bridge    shift-parameter congruences            threshold
==========  ========  =====================================  ==================
(1, 1, 2)   L21       B = -n (mod 3), plus mod-5 if 5 | n    8892 / 222289
(2, 3, 4)   L31       mod 81 (n odd) or mod 8 & 9 (n even)   45325138
(1, 2, 3)   L41       mod 81, plus mod-7 square if 7 | n     808834881
(1, 2, 6)   L43       mod 9 & 8, plus mod-5 if 5 | n         897099189
==========  ========  =====================================  ==================

Below its threshold a triple falls back to exhaustive direct search.  Interval
endpoints like sqrt(2n/15) + 1/6 are compared exactly by clearing denominators
and squaring, never in floating point.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import isqrt

from .errors import (
    BoundViolationError,
    DomainError,
    IdentityViolationError,
    NoValidBError,
    NotRepresentableError,
    SearchCapExceededError,
    UnsupportedTripleError,
)
from .polygonal import is_pentagonal, max_pentagonal_index, pentagonal, pentagonal_index
from .transforms import (
    QuaternaryWitness,
    lemma21_transform,
    lemma31_transform,
    lemma41_transform,
    lemma43_transform,
)

# Verified-prefix thresholds; the constructive argument is valid only above them.
THM11_MIN = 8892           # ceil(3^2 / (sqrt(2/15) - 1/3)^2)
THM11_CASE2_MIN = 222289   # ceil(15^2 / (sqrt(2/15) - 1/3)^2), needed when 5 | n
THM12_MIN = 45325138       # ceil((81 - 1/6 + 1/16)^2 / (sqrt(1/15) - sqrt(2/33))^2)
THM13_D1_MIN = 808834881   # ceil((7*81 + 1/48 - 1/6)^2 / (sqrt(2/21) - sqrt(1/12))^2)
THM13_D2_MIN = 897099189   # ceil((360 + 1/16 - 1/6)^2 / (sqrt(1/15) - sqrt(2/33))^2)

CONSTRUCTIVE_TRIPLES = ((1, 1, 2), (2, 3, 4), (1, 2, 3), (1, 2, 6))

_TRIPLE_KIND = {(1, 1, 2): "L21", (2, 3, 4): "L31", (1, 2, 3): "L41", (1, 2, 6): "L43"}

# Interval endpoint sqrt(n * p / q) + a / b, encoded as (p, q, a, b).
_Bound = tuple[int, int, int, int]

INTERVAL_THM11: tuple[_Bound, _Bound] = ((1, 9, 1, 6), (2, 15, 1, 6))
INTERVAL_THM12: tuple[_Bound, _Bound] = ((2, 33, 1, 16), (1, 15, 1, 6))
INTERVAL_THM13_D1: tuple[_Bound, _Bound] = ((1, 12, 1, 48), (2, 21, 1, 6))
INTERVAL_THM13_D2 = INTERVAL_THM12

_INTERVALS = {
    "thm11": INTERVAL_THM11,
    "thm12": INTERVAL_THM12,
    "thm13_d1": INTERVAL_THM13_D1,
    "thm13_d2": INTERVAL_THM13_D2,
}


def at_least_bound(B: int, n: int, bound: _Bound) -> bool:
    """Exact test of B >= sqrt(n*p/q) + a/b."""
    p, q, a, b = bound
    t = b * B - a
    if t < 0:
        return False
    return q * t * t >= b * b * n * p


def at_most_bound(B: int, n: int, bound: _Bound) -> bool:
    """Exact test of B <= sqrt(n*p/q) + a/b."""
    p, q, a, b = bound
    t = b * B - a
    if t <= 0:
        return True
    return q * t * t <= b * b * n * p


def interval_b_range(n: int, interval: tuple[_Bound, _Bound]) -> tuple[int, int]:
    """Smallest and largest integers B inside [lower(n), upper(n)]."""
    lower, upper = interval
    p, q, a, b = lower
    B = max(0, (a + isqrt(n * p * b * b // q)) // b - 2)
    while not at_least_bound(B, n, lower):
        B += 1
    lo = B
    p, q, a, b = upper
    B = (a + isqrt(n * p * b * b // q)) // b + 2
    while not at_most_bound(B, n, upper) and B > lo:
        B -= 1
    return lo, B


@dataclass(frozen=True)
class BSelection:
    """A shift parameter with the interval and congruence system that chose it."""

    B: int
    b_min: int
    b_max: int
    congruences: tuple[tuple[int, frozenset[int]], ...]
    delta: int | None = None

    def __post_init__(self) -> None:
        if not (self.b_min <= self.B <= self.b_max):
            raise NoValidBError(f"B={self.B} outside [{self.b_min}, {self.b_max}]")
        for mod, residues in self.congruences:
            if self.B % mod not in residues:
                raise NoValidBError(f"B={self.B} violates mod-{mod} constraint")


def _scan_b(
    b_min: int,
    b_max: int,
    congruences: tuple[tuple[int, frozenset[int]], ...],
    delta: int | None = None,
) -> BSelection | None:
    for B in range(b_min, b_max + 1):
        if all(B % mod in residues for mod, residues in congruences):
            return BSelection(B, b_min, b_max, congruences, delta)
    return None


def select_B_thm11(n: int) -> BSelection:
    """Smallest B in [sqrt(n)/3 + 1/6, sqrt(2n/15) + 1/6] with B = -n mod 3.

    When 5 | n, additionally (B-1)^2 = delta (mod 5) for the first
    delta in (0, 1, -1) making 1 - q - delta != 0, +-2 (mod 5), n = 5q.
    """
    if n < THM11_MIN:
        raise DomainError(f"n={n} below constructive threshold {THM11_MIN}")
    if n % 5 == 0 and n < THM11_CASE2_MIN:
        raise DomainError(
            f"n={n} divisible by 5 needs n >= {THM11_CASE2_MIN} for the constructive path"
        )
    b_min, b_max = interval_b_range(n, INTERVAL_THM11)
    mod3 = (3, frozenset({(-n) % 3}))
    if n % 5 != 0:
        sel = _scan_b(b_min, b_max, (mod3,))
        if sel is not None:
            return sel
        raise NoValidBError(f"no B for n={n} (case 1)")
    q5 = n // 5
    for delta in (0, 1, -1):
        if (1 - q5 - delta) % 5 in (0, 2, 3):
            continue
        residues = frozenset(r for r in range(5) if (r - 1) ** 2 % 5 == delta % 5)
        sel = _scan_b(b_min, b_max, (mod3, (5, residues)), delta)
        if sel is not None:
            return sel
    raise NoValidBError(f"no (delta, B) for n={n} (case 2)")


def select_B_thm12(n: int) -> BSelection:
    """Smallest B in [sqrt(2n/33) + 1/16, sqrt(n/15) + 1/6] for the (2,3,4) path.

    Congruences: B = -9n^3 + 12n^2 - 38n (mod 81) for odd n; B = 3n - 1
    (mod 8) and B = 3n^2 - 2n (mod 9) for even n.  Polynomials are evaluated
    on n reduced modulo the relevant modulus.
    """
    if n < THM12_MIN:
        raise DomainError(f"n={n} below constructive threshold {THM12_MIN}")
    b_min, b_max = interval_b_range(n, INTERVAL_THM12)
    if n % 2 == 1:
        m = n % 81
        r81 = (-9 * m**3 + 12 * m**2 - 38 * m) % 81
        congs = ((81, frozenset({r81})),)
    else:
        r8 = (3 * (n % 8) - 1) % 8
        m9 = n % 9
        r9 = (3 * m9 * m9 - 2 * m9) % 9
        congs = ((8, frozenset({r8})), (9, frozenset({r9})))
    sel = _scan_b(b_min, b_max, congs)
    if sel is None:
        raise NoValidBError(f"no B for n={n} ((2,3,4) path)")
    return sel


def select_B_thm13(n: int, delta: int) -> BSelection:
    """Shift parameter for the (1,2,3) path (delta=1) or (1,2,6) path (delta=2)."""
    if delta == 1:
        if n < THM13_D1_MIN:
            raise DomainError(f"n={n} below constructive threshold {THM13_D1_MIN}")
        b_min, b_max = interval_b_range(n, INTERVAL_THM13_D1)
        m = n % 81
        congs: list[tuple[int, frozenset[int]]] = [
            (81, frozenset({(18 * m**3 + 3 * m**2 - 35 * m) % 81}))
        ]
        if n % 7 == 0:
            n0 = (n // 7) % 7
            allowed = frozenset(
                r for r in range(7) if (3 * n0 + 1 - (r + 1) ** 2) % 7 in (3, 5, 6)
            )
            congs.append((7, allowed))
    elif delta == 2:
        if n < THM13_D2_MIN:
            raise DomainError(f"n={n} below constructive threshold {THM13_D2_MIN}")
        b_min, b_max = interval_b_range(n, INTERVAL_THM13_D2)
        m9 = n % 9
        m8 = n % 8
        congs = [
            (9, frozenset({(3 * m9 * m9 - 2 * m9) % 9})),
            (8, frozenset({(m8 * m8 - m8 - 1) % 8})),
        ]
        if n % 5 == 0:
            n0 = (n // 5) % 5
            bad = {(2 * n0 + 1) % 5, (2 * n0 - 1) % 5, (2 * n0 - 2) % 5}
            allowed = frozenset(r for r in range(5) if (r - 1) ** 2 % 5 not in bad)
            congs.append((5, allowed))
    else:
        raise DomainError(f"delta must be 1 or 2, got {delta}")
    sel = _scan_b(b_min, b_max, tuple(congs), delta)
    if sel is None:
        raise NoValidBError(f"no B for n={n} (delta={delta} path)")
    return sel


@dataclass(frozen=True)
class Decomposition:
    """Witness n = p5(w0) + b*p5(x0) + c*p5(y0) + d*p5(z0)."""

    triple: tuple[int, int, int]
    n: int
    w0: int
    x0: int
    y0: int
    z0: int
    method: str
    B: int | None = None
    delta: int | None = None

    @property
    def indices(self) -> tuple[int, int, int, int]:
        return (self.w0, self.x0, self.y0, self.z0)

    @property
    def weights(self) -> tuple[int, int, int, int]:
        return (1,) + self.triple


def certify(d: Decomposition) -> bool:
    """Exact re-check of the decomposition identity from scratch."""
    if min(d.indices) < 0:
        return False
    total = sum(wt * pentagonal(i) for wt, i in zip(d.weights, d.indices))
    return total == d.n


def residual(n: int, B: int, triple: tuple[int, int, int]) -> int:
    """The quantity (2n + S*B)/3 - S*B^2 with S the weight sum 1+b+c+d."""
    S = 1 + sum(triple)
    num = 2 * n + S * B
    if num % 3 != 0:
        raise DomainError(f"2n + {S}B not divisible by 3 for n={n}, B={B}")
    return num // 3 - S * B * B


def reconstruct(
    B: int, witness: QuaternaryWitness, triple: tuple[int, int, int]
) -> Decomposition:
    """Shift a quaternary witness by B into a nonnegative decomposition."""
    kind = _TRIPLE_KIND.get(triple)
    if kind is None:
        raise UnsupportedTripleError(f"no constructive path for triple {triple}")
    if witness.kind != kind:
        raise DomainError(f"witness kind {witness.kind} does not match triple {triple}")
    if kind == "L21":
        w = -(witness.x + witness.y + witness.z) // 2
    else:
        coeffs = {"L31": (2, 3, 4), "L41": (1, 2, 3), "L43": (1, 2, 6)}[kind]
        w = -(
            coeffs[0] * witness.x + coeffs[1] * witness.y + coeffs[2] * witness.z
        )
    parts = (w, witness.x, witness.y, witness.z)
    if max(abs(v) for v in parts) > B:
        raise BoundViolationError(f"witness {parts} escapes [-B, B] for B={B}")
    if kind == "L21":
        # theorem slot order: weight-1 slots first, the doubled slot last
        shifted = (witness.x + B, witness.y + B, witness.z + B, w + B)
    else:
        shifted = (w + B, witness.x + B, witness.y + B, witness.z + B)
    if min(shifted) < 0:
        raise BoundViolationError(f"negative shifted index in {shifted}")
    weights = (1,) + triple
    n = sum(wt * pentagonal(i) for wt, i in zip(weights, shifted))
    S = sum(weights)
    if 2 * n != 3 * (witness.target + S * B * B) - S * B:
        raise IdentityViolationError(
            f"reconstruction identity failed: triple={triple}, B={B}, witness={witness}"
        )
    return Decomposition(triple, n, *shifted, method="constructive", B=B)


def direct_search(
    n: int,
    triple: tuple[int, int, int],
    probe_budget: int | None = None,
) -> Decomposition:
    """Exhaustive witness search, largest coefficient slot descending first.

    The last (weight-1) slot is resolved by the exact pentagonality test, so
    the search touches at most three nested loops and in practice returns
    after a handful of probes.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    weights = (1,) + tuple(triple)
    order = sorted(range(4), key=lambda i: weights[i], reverse=True)
    ws = [weights[i] for i in order]
    probes = 0
    indices = [0, 0, 0, 0]

    def rec(slot: int, rem: int) -> bool:
        nonlocal probes
        if slot == 3:
            probes += 1
            if probe_budget is not None and probes > probe_budget:
                raise SearchCapExceededError(f"probe budget {probe_budget} hit for n={n}")
            if rem % ws[3] != 0:
                return False
            k = pentagonal_index(rem // ws[3])
            if k is None:
                return False
            indices[3] = k
            return True
        for k in range(max_pentagonal_index(rem // ws[slot]), -1, -1):
            indices[slot] = k
            if rec(slot + 1, rem - ws[slot] * pentagonal(k)):
                return True
        return False

    if not rec(0, n):
        raise NotRepresentableError(
            f"n={n} has no representation with weights {weights}; "
            "this contradicts the covering theorems"
        )
    out = [0, 0, 0, 0]
    for pos, idx in zip(order, indices):
        out[pos] = idx
    d = Decomposition(triple, n, *out, method="direct-search")
    assert certify(d)
    return d


def _check_residual_bound(m: int, B: int, kind: str) -> None:
    """Residual bound of the matching lemma, asserted on every constructive run."""
    ok = 0 < m <= B * B if kind == "L21" else 0 < m < (B + 1) * (B + 1)
    if not ok:
        raise BoundViolationError(f"{kind} residual {m} outside bounds for B={B}")


def _constructive(n: int, triple: tuple[int, int, int]) -> Decomposition:
    accelerate = True if n > 10**8 else None
    if triple == (1, 1, 2):
        sel = select_B_thm11(n)
        m = residual(n, sel.B, triple)
        _check_residual_bound(m, sel.B, "L21")
        witness = lemma21_transform(m, accelerate=accelerate)
    elif triple == (2, 3, 4):
        sel = select_B_thm12(n)
        m = residual(n, sel.B, triple)
        _check_residual_bound(m, sel.B, "L31")
        if m % 6 != 0:
            raise IdentityViolationError(f"residual {m} not divisible by 6 for n={n}")
        witness = lemma31_transform(m // 6, accelerate=accelerate)
    elif triple == (1, 2, 3):
        sel = select_B_thm13(n, 1)
        m = residual(n, sel.B, triple)
        _check_residual_bound(m, sel.B, "L41")
        if m % 6 != 0:
            raise IdentityViolationError(f"residual {m} not divisible by 6 for n={n}")
        witness = lemma41_transform(m // 6, accelerate=accelerate)
    elif triple == (1, 2, 6):
        sel = select_B_thm13(n, 2)
        m = residual(n, sel.B, triple)
        _check_residual_bound(m, sel.B, "L43")
        if m % 6 != 0:
            raise IdentityViolationError(f"residual {m} not divisible by 6 for n={n}")
        witness = lemma43_transform(m // 6, accelerate=accelerate)
    else:
        raise UnsupportedTripleError(f"no constructive path for triple {triple}")
    d = reconstruct(sel.B, witness, triple)
    if d.n != n:
        raise IdentityViolationError(f"reconstructed {d.n}, expected {n}")
    d = Decomposition(triple, n, *d.indices, method="constructive", B=sel.B, delta=sel.delta)
    if not certify(d):
        raise IdentityViolationError(f"certification failed for n={n}, triple={triple}")
    return d


def constructive_threshold(n: int, triple: tuple[int, int, int]) -> bool:
    """True iff n is above the triple's proven constructive threshold."""
    if triple == (1, 1, 2):
        return n >= THM11_MIN and (n % 5 != 0 or n >= THM11_CASE2_MIN)
    if triple == (2, 3, 4):
        return n >= THM12_MIN
    if triple == (1, 2, 3):
        return n >= THM13_D1_MIN
    if triple == (1, 2, 6):
        return n >= THM13_D2_MIN
    return False


def decompose(
    n: int,
    triple: tuple[int, int, int],
    method: str = "auto",
    probe_budget: int | None = None,
) -> Decomposition:
    """Verified decomposition of n for one of the four constructive triples.

    ``method`` is one of ``auto`` (constructive above the proven threshold,
    direct search below), ``constructive``, or ``search``.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    triple = tuple(triple)  # type: ignore[assignment]
    if triple not in CONSTRUCTIVE_TRIPLES:
        raise UnsupportedTripleError(
            f"triple {triple} is not constructive; use the range verifier instead"
        )
    if method not in ("auto", "constructive", "search"):
        raise DomainError(f"unknown method {method!r}")
    if method == "constructive" or (method == "auto" and constructive_threshold(n, triple)):
        return _constructive(n, triple)
    return direct_search(n, triple, probe_budget=probe_budget)


def decompose_timed(
    n: int, triple: tuple[int, int, int], method: str = "auto"
) -> tuple[Decomposition, float]:
    """Decompose and report the wall-clock latency in seconds."""
    t0 = time.perf_counter()
    d = decompose(n, triple, method=method)
    return d, time.perf_counter() - t0
