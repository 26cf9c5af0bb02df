from __future__ import annotations

import pytest

from pentadecomp.errors import HypothesisViolationError, IdentityViolationError
from pentadecomp.transforms import (
    QuaternaryWitness,
    lemma21_transform,
    lemma31_transform,
    lemma41_transform,
    lemma43_transform,
)
from pentadecomp.ternary import lemma21_excluded


def test_witness_identity_enforced():
    QuaternaryWitness(1, -1, 0, "L21", 2)
    with pytest.raises(IdentityViolationError):
        QuaternaryWitness(1, -1, 0, "L21", 4)
    with pytest.raises(IdentityViolationError):
        QuaternaryWitness(1, 0, 0, "L21", 2)  # odd x+y+z


def test_lemma21_small_cases():
    for n in (2, 4, 934, 8):
        w = lemma21_transform(n)
        s = w.x + w.y + w.z
        assert w.x**2 + w.y**2 + w.z**2 + s * s // 2 == n
        assert s % 2 == 0
    assert lemma21_transform(0).target == 0


def test_lemma21_rejects_bad_inputs():
    with pytest.raises(HypothesisViolationError):
        lemma21_transform(3)  # odd
    with pytest.raises(HypothesisViolationError):
        lemma21_transform(10)  # 5 * 2


def test_lemma21_qualifying_prefix():
    for n in range(2, 4000, 2):
        if lemma21_excluded(n):
            continue
        w = lemma21_transform(n)
        assert w.target == n and (w.x + w.y + w.z) % 2 == 0


def test_lemma31_transform():
    w = lemma31_transform(0)
    assert (w.x, w.y, w.z) == (0, 0, 0)
    w = lemma31_transform(9)  # 9 = 3^2 + 0 + 0
    assert (w.x, w.y, w.z) == (3, 0, 0) and w.target == 54
    w = lemma31_transform(11)  # 11 = 1 + 0 + 10
    assert w.target == 66


def test_lemma41_transform():
    w = lemma41_transform(0)
    assert (w.x, w.y, w.z) == (0, 0, 0)
    w = lemma41_transform(9)  # canonical rep (3, 0, 0)
    assert w.target == 54
    w = lemma41_transform(63)
    assert w.target == 378
    with pytest.raises(HypothesisViolationError):
        lemma41_transform(10)


def test_lemma43_transform():
    w = lemma43_transform(1)  # 1 = (1, 0, 0) -> (2, -1, 0)
    assert (w.x, w.y, w.z) == (2, -1, 0) and w.target == 6
    w = lemma43_transform(3)  # 3 = (1, 1, 0) -> (1, -2, 0)
    assert (w.x, w.y, w.z) == (1, -2, 0) and w.target == 18
    assert lemma43_transform(0).target == 0
    with pytest.raises(HypothesisViolationError):
        lemma43_transform(7)


@pytest.mark.parametrize(
    "sub,form_coeffs,quad",
    [
        # (a,b,c) -> (x,y,z), source form, quadratic weights (w1,w2,w3, sum-weights)
        (lambda a, b, c: (a + b + 2 * c, -b + 2 * c, -3 * c), (1, 1, 10), (2, 3, 4)),
        (lambda a, b, c: (6 * c, a - b - c, b - c), (1, 1, 7), (1, 2, 3)),
        (lambda a, b, c: (2 * a - b + 3 * c, -a - b + 3 * c, -2 * c), (1, 2, 10), (1, 2, 6)),
    ],
)
def test_substitution_identities_small_cube(sub, form_coeffs, quad):
    # exhaustive on a smaller cube here; the full [-20, 20]^3 sweep is in acceptance
    f1, f2, f3 = form_coeffs
    q1, q2, q3 = quad
    for a in range(-6, 7):
        for b in range(-6, 7):
            for c in range(-6, 7):
                x, y, z = sub(a, b, c)
                s = q1 * x + q2 * y + q3 * z
                lhs = q1 * x * x + q2 * y * y + q3 * z * z + s * s
                rhs = 6 * (f1 * a * a + f2 * b * b + f3 * c * c)
                assert lhs == rhs, (a, b, c)
