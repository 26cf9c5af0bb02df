"""Representation search and exceptional-set predicates for diagonal ternary forms.

Three forms carry the constructive pipeline:

* x^2 + 2y^2 + 10z^2  (Dickson; excluded set {8m+7} u {5^(2k+1) l : l = +-1 mod 5})
* x^2 +  y^2 + 10z^2  (the Ramanujan form)
* x^2 +  y^2 +  7z^2  (Kaplansky)

Any other positive diagonal form is accepted for brute-force search only.

The canonical search order iterates the largest-coefficient variable
ascending, then the middle one ascending, and recovers the first variable by
an exact square test, so outputs are deterministic.  For large targets an
accelerated per-c solve (factorization + Cornacchia) replaces the inner scan;
it returns the same canonical representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from sympy import factorint
from sympy.solvers.diophantine.diophantine import cornacchia

from .errors import DomainError, SearchCapExceededError

# Above this target the inner scan switches to the Cornacchia-backed solve.
ACCELERATION_THRESHOLD = 10**8


@dataclass(frozen=True)
class DiagonalForm:
    """Diagonal ternary quadratic form alpha*x^2 + beta*y^2 + gamma*z^2."""

    alpha: int
    beta: int
    gamma: int

    def __post_init__(self) -> None:
        if min(self.alpha, self.beta, self.gamma) <= 0:
            raise DomainError(f"form coefficients must be positive: {self.coeffs}")

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    def value(self, a: int, b: int, c: int) -> int:
        return self.alpha * a * a + self.beta * b * b + self.gamma * c * c


FORM_1_2_10 = DiagonalForm(1, 2, 10)
FORM_1_1_10 = DiagonalForm(1, 1, 10)
FORM_1_1_7 = DiagonalForm(1, 1, 7)


@dataclass(frozen=True)
class TernaryRepresentation:
    """Nonnegative integers (a, b, c) with form.value(a, b, c) == target."""

    a: int
    b: int
    c: int
    form: DiagonalForm
    target: int

    def __post_init__(self) -> None:
        if self.form.value(self.a, self.b, self.c) != self.target:
            raise DomainError(
                f"({self.a},{self.b},{self.c}) does not represent {self.target} "
                f"in form {self.form.coeffs}"
            )


def _exact_sqrt(v: int) -> int | None:
    if v < 0:
        return None
    r = isqrt(v)
    return r if r * r == v else None


def _square_divisors(factors: dict[int, int]) -> list[int]:
    """All g such that g^2 divides the factored integer."""
    gs = [1]
    for p, e in factors.items():
        if e < 2:
            continue
        gs = [g * p**i for g in gs for i in range(e // 2 + 1)]
    return gs


def _solve_binary_min_b(alpha: int, beta: int, r: int) -> tuple[int, int] | None:
    """Smallest-b nonnegative solution of alpha*a^2 + beta*b^2 = r, else None.

    Requires alpha == 1 (all supported forms have unit leading coefficient).
    Enumerates every solution via square divisors and Cornacchia on the
    primitive parts, so the returned b equals the one the ascending scan
    would find.
    """
    if r == 0:
        return (0, 0)
    best: tuple[int, int] | None = None
    a0 = _exact_sqrt(r)
    if a0 is not None:
        best = (a0, 0)
        if beta > 1:
            return best  # b = 0 cannot be beaten
    if beta == 1 and best is not None:
        return best
    factors = factorint(r)
    for g in _square_divisors(factors):
        m = r // (g * g)
        if m % beta == 0:
            b0 = _exact_sqrt(m // beta)
            if b0 is not None:
                cand = (0, g * b0)
                if best is None or cand[1] < best[1]:
                    best = cand
        sols = cornacchia(1, beta, m) or set()
        for x, y in sols:
            for a, b in ((x, y), (y, x)) if beta == 1 else ((x, y),):
                if a * a + beta * b * b == m:
                    cand = (g * a, g * b)
                    if best is None or cand[1] < best[1]:
                        best = cand
    return best


def represent(
    form: DiagonalForm,
    q: int,
    *,
    accelerate: bool | None = None,
    work_budget: int | None = None,
) -> TernaryRepresentation | None:
    """Canonical representation of q by the form, or None if none exists.

    Exhaustive over c (largest coefficient) ascending, then b ascending, with
    a recovered by exact square test; the first hit is returned.  When
    ``accelerate`` (default: automatic for q > 10**8), the inner (a, b) scan
    is replaced by a factorization-based solve that yields the same answer.
    """
    if q < 0:
        raise DomainError("target must be nonnegative")
    alpha, beta, gamma = sorted(form.coeffs)
    if alpha != 1:
        accelerate = False
    if accelerate is None:
        accelerate = q > ACCELERATION_THRESHOLD
    # Map canonical (smallest..largest) variable order back to (a, b, c) slots.
    order = sorted(range(3), key=lambda i: form.coeffs[i])
    steps = 0
    c = 0
    while gamma * c * c <= q:
        r = q - gamma * c * c
        hit: tuple[int, int] | None = None
        if accelerate:
            hit = _solve_binary_min_b(alpha, beta, r)
            steps += 1
        else:
            b = 0
            while beta * b * b <= r:
                steps += 1
                if work_budget is not None and steps > work_budget:
                    raise SearchCapExceededError(
                        f"work budget {work_budget} hit for {form.coeffs}, q={q}"
                    )
                rem = r - beta * b * b
                if alpha == 1:
                    a = _exact_sqrt(rem)
                elif rem % alpha == 0:
                    a = _exact_sqrt(rem // alpha)
                else:
                    a = None
                if a is not None:
                    hit = (a, b)
                    break
                b += 1
        if hit is not None:
            vals = [0, 0, 0]
            vals[order[0]], vals[order[1]], vals[order[2]] = hit[0], hit[1], c
            return TernaryRepresentation(vals[0], vals[1], vals[2], form, q)
        c += 1
    return None


def _odd_power_of(q: int, p: int) -> tuple[bool, int]:
    """(True, cofactor) if p divides q to an odd power, else (False, q/p^v)."""
    v = 0
    while q % p == 0:
        q //= p
        v += 1
    return v % 2 == 1, q


def dickson_excluded_1_2_10(q: int) -> bool:
    """True iff q is NOT representable as x^2 + 2y^2 + 10z^2.

    Dickson's excluded set: {8m+7} together with {5^(2k+1) l : l = +-1 mod 5}.
    """
    if q < 0:
        raise DomainError("q must be nonnegative")
    if q % 8 == 7:
        return True
    if q == 0:
        return False
    odd, l = _odd_power_of(q, 5)
    return odd and l % 5 in (1, 4)


def lemma21_excluded(n: int) -> bool:
    """True iff n is in {5^(2k+1) m : m = +-2 mod 5}.

    Positive even n outside this set are exactly those covered by the
    x^2+y^2+z^2+(x+y+z)^2/2 bridge (equivalent to 8n avoiding Dickson's set).
    """
    if n <= 0:
        return False
    odd, m = _odd_power_of(n, 5)
    return odd and m % 5 in (2, 3)


def _is_squarefree(q: int) -> bool:
    """Squarefree test by trial division up to cube root, square-checking the cofactor."""
    if q == 0:
        return False
    d = 2
    while d * d * d <= q:
        if q % d == 0:
            q //= d
            if q % d == 0:
                return False
        d += 1
    # remaining cofactor has at most two prime factors, both > q^(1/3)
    return _exact_sqrt(q) is None or q == 1


def lemma31_hypothesis(q: int) -> bool:
    """Hypothesis under which x^2+y^2+10z^2 is known to represent q.

    True iff q is odd and not squarefree, or q is even and not of the form
    4^k(16l+6).
    """
    if q < 0:
        raise DomainError("q must be nonnegative")
    if q % 2 == 1:
        return not _is_squarefree(q)
    r = q
    while r and r % 4 == 0:
        r //= 4
    return r % 16 != 6


def lemma41_hypothesis(q: int) -> bool:
    """True iff 9 | q and q is not 7^(2k+1) l with l = 3, 5, 6 mod 7.

    Under this hypothesis q is representable as a^2 + b^2 + 7c^2.
    """
    if q < 0:
        raise DomainError("q must be nonnegative")
    if q % 9 != 0:
        return False
    if q == 0:
        return True
    odd, l = _odd_power_of(q, 7)
    return not (odd and l % 7 in (3, 5, 6))


# lemma43 hypothesis: q is representable by x^2+2y^2+10z^2, i.e. exactly
# the negation of dickson_excluded_1_2_10.  Documented alias, no new code.
def lemma43_hypothesis(q: int) -> bool:
    return not dickson_excluded_1_2_10(q)
