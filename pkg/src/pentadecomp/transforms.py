"""Bridges from ternary representations to zero-sum-weighted quaternary witnesses.

Each transform takes a target known (or hypothesized) to be representable by
one of the supported ternary forms and emits integers (x, y, z) satisfying the
matching quaternary identity:

* L21:  n  = x^2 +  y^2 +  z^2 + (x+y+z)^2 / 2         (n even)
* L31:  6q = 2x^2 + 3y^2 + 4z^2 + (2x+3y+4z)^2
* L41:  6q =  x^2 + 2y^2 + 3z^2 + (x+2y+3z)^2
* L43:  6q =  x^2 + 2y^2 + 6z^2 + (x+2y+6z)^2

Every returned witness re-checks its identity exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisViolationError, IdentityViolationError, PredicateViolationError
from .ternary import (
    FORM_1_1_7,
    FORM_1_1_10,
    FORM_1_2_10,
    lemma21_excluded,
    lemma41_hypothesis,
    dickson_excluded_1_2_10,
    represent,
)

KINDS = ("L21", "L31", "L41", "L43")


def _kind_value(kind: str, x: int, y: int, z: int) -> int:
    if kind == "L21":
        s = x + y + z
        return x * x + y * y + z * z + s * s // 2
    if kind == "L31":
        s = 2 * x + 3 * y + 4 * z
        return 2 * x * x + 3 * y * y + 4 * z * z + s * s
    if kind == "L41":
        s = x + 2 * y + 3 * z
        return x * x + 2 * y * y + 3 * z * z + s * s
    if kind == "L43":
        s = x + 2 * y + 6 * z
        return x * x + 2 * y * y + 6 * z * z + s * s
    raise ValueError(f"unknown witness kind {kind!r}")


@dataclass(frozen=True)
class QuaternaryWitness:
    """Integers (x, y, z) certifying the kind's identity for ``target``."""

    x: int
    y: int
    z: int
    kind: str
    target: int

    def __post_init__(self) -> None:
        if self.kind == "L21" and (self.x + self.y + self.z) % 2 != 0:
            raise IdentityViolationError(f"L21 witness has odd x+y+z: {self}")
        got = _kind_value(self.kind, self.x, self.y, self.z)
        if got != self.target:
            raise IdentityViolationError(
                f"{self.kind} witness ({self.x},{self.y},{self.z}) gives {got}, "
                f"expected {self.target}"
            )


def lemma21_transform(n: int, *, accelerate: bool | None = None) -> QuaternaryWitness:
    """Witness for n = x^2+y^2+z^2+(x+y+z)^2/2, n positive and even.

    Requires n outside {5^(2k+1) m : m = +-2 mod 5}.  Works through a
    representation 8n = s^2 + 2t^2 + 10z^2, normalizing the sign of t so the
    reconstruction below stays integral.
    """
    if n == 0:
        # harmless extension: the zero witness
        return QuaternaryWitness(0, 0, 0, "L21", 0)
    if n < 0 or n % 2 != 0 or lemma21_excluded(n):
        raise HypothesisViolationError(
            f"n={n} must be positive, even, and not 5^(2k+1)*m with m=+-2 mod 5"
        )
    rep = represent(FORM_1_2_10, 8 * n, accelerate=accelerate)
    if rep is None:
        raise PredicateViolationError(
            f"8n={8 * n} should be representable by x^2+2y^2+10z^2 but is not"
        )
    s, t, z = rep.a, rep.b, rep.c
    # Normalization from the parity descent: when z is odd, force t != z mod 4.
    if z % 2 == 1 and (t - z) % 4 == 0:
        t = -t
    r = s // 2
    w = (t - z) // 2
    if not (w % 2 == z % 2 == r % 2):
        raise PredicateViolationError(
            f"parity normalization failed for n={n}: s={s}, t={t}, z={z}"
        )
    x = (r + w) // 2
    y = (w - r) // 2
    return QuaternaryWitness(x, y, z, "L21", n)


def lemma31_transform(q: int, *, accelerate: bool | None = None) -> QuaternaryWitness:
    """Witness for 6q = 2x^2+3y^2+4z^2+(2x+3y+4z)^2 via q = a^2+b^2+10c^2."""
    rep = represent(FORM_1_1_10, q, accelerate=accelerate)
    if rep is None:
        raise PredicateViolationError(f"q={q} has no x^2+y^2+10z^2 representation")
    a, b, c = rep.a, rep.b, rep.c
    return QuaternaryWitness(a + b + 2 * c, -b + 2 * c, -3 * c, "L31", 6 * q)


def lemma41_transform(q: int, *, accelerate: bool | None = None) -> QuaternaryWitness:
    """Witness for 6q = x^2+2y^2+3z^2+(x+2y+3z)^2 via q = a^2+b^2+7c^2."""
    if not lemma41_hypothesis(q):
        raise HypothesisViolationError(
            f"q={q} must be a multiple of 9 outside the 7-adic exceptional set"
        )
    rep = represent(FORM_1_1_7, q, accelerate=accelerate)
    if rep is None:
        raise PredicateViolationError(f"q={q} has no a^2+b^2+7c^2 representation")
    a, b, c = rep.a, rep.b, rep.c
    return QuaternaryWitness(6 * c, a - b - c, b - c, "L41", 6 * q)


def lemma43_transform(q: int, *, accelerate: bool | None = None) -> QuaternaryWitness:
    """Witness for 6q = x^2+2y^2+6z^2+(x+2y+6z)^2 via q = a^2+2b^2+10c^2."""
    if dickson_excluded_1_2_10(q):
        raise HypothesisViolationError(f"q={q} is in Dickson's excluded set for (1,2,10)")
    rep = represent(FORM_1_2_10, q, accelerate=accelerate)
    if rep is None:
        raise PredicateViolationError(f"q={q} has no a^2+2b^2+10c^2 representation")
    a, b, c = rep.a, rep.b, rep.c
    return QuaternaryWitness(2 * a - b + 3 * c, -a - b + 3 * c, -2 * c, "L43", 6 * q)
