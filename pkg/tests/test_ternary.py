from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pentadecomp.errors import DomainError
from pentadecomp.ternary import (
    FORM_1_1_7,
    FORM_1_1_10,
    FORM_1_2_10,
    DiagonalForm,
    TernaryRepresentation,
    dickson_excluded_1_2_10,
    lemma21_excluded,
    lemma31_hypothesis,
    lemma41_hypothesis,
    lemma43_hypothesis,
    represent,
)


def representable_set(alpha: int, beta: int, gamma: int, bound: int) -> set[int]:
    """Independent brute-force enumeration of all form values <= bound."""
    a = np.arange(0, int(bound**0.5) + 1, dtype=np.int64)
    b = np.arange(0, int((bound // beta) ** 0.5) + 1, dtype=np.int64)
    c = np.arange(0, int((bound // gamma) ** 0.5) + 1, dtype=np.int64)
    sums = (
        alpha * (a * a)[:, None, None]
        + beta * (b * b)[None, :, None]
        + gamma * (c * c)[None, None, :]
    ).ravel()
    return set(sums[sums <= bound].tolist())


def test_represent_examples():
    assert represent(FORM_1_2_10, 7) is None
    rep = represent(FORM_1_1_10, 0)
    assert (rep.a, rep.b, rep.c) == (0, 0, 0)
    rep = represent(FORM_1_1_7, 9)
    assert (rep.a, rep.b, rep.c) == (3, 0, 0)
    rep = represent(FORM_1_2_10, 25)
    assert (rep.a, rep.b, rep.c) == (5, 0, 0)


def test_representation_checked_on_construction():
    with pytest.raises(DomainError):
        TernaryRepresentation(1, 1, 1, FORM_1_2_10, 14)


def test_dickson_examples():
    assert dickson_excluded_1_2_10(7)
    assert dickson_excluded_1_2_10(45)  # 5 * 9, 9 = -1 mod 5
    assert not dickson_excluded_1_2_10(1)
    assert not dickson_excluded_1_2_10(0)
    assert not dickson_excluded_1_2_10(25)  # even power of 5
    assert lemma43_hypothesis(1) and not lemma43_hypothesis(7)


def test_lemma21_excluded():
    assert lemma21_excluded(10)  # 5 * 2, 2 = +2 mod 5
    assert lemma21_excluded(5 * 13)  # 13 = 3 = -2 mod 5
    assert not lemma21_excluded(25 * 2)  # even power of 5
    assert not lemma21_excluded(6)
    assert not lemma21_excluded(0)


def test_lemma31_hypothesis_examples():
    assert lemma31_hypothesis(9)
    assert not lemma31_hypothesis(6)  # 4^0 * (16*0 + 6)
    assert not lemma31_hypothesis(54)  # 16*3 + 6
    assert lemma31_hypothesis(50)  # even, not of the form 4^k(16l + 6)
    assert not lemma31_hypothesis(24)  # 4 * 6
    assert not lemma31_hypothesis(15)  # odd squarefree
    assert lemma31_hypothesis(0) and lemma31_hypothesis(4)


def test_lemma41_hypothesis_examples():
    assert lemma41_hypothesis(9)
    assert lemma41_hypothesis(63)
    assert not lemma41_hypothesis(189)  # 7 * 27, 27 = 6 mod 7
    assert not lemma41_hypothesis(10)  # not a multiple of 9
    assert lemma41_hypothesis(0)


@pytest.mark.parametrize(
    "form,pred",
    [
        (FORM_1_2_10, lambda q: not dickson_excluded_1_2_10(q)),
        (FORM_1_1_10, lemma31_hypothesis),
        (FORM_1_1_7, lemma41_hypothesis),
    ],
)
def test_predicates_against_enumeration(form, pred):
    bound = 3000
    rep = representable_set(*form.coeffs, bound)
    for q in range(bound + 1):
        if form is FORM_1_2_10:
            # exact characterization: excluded iff not representable
            assert pred(q) == (q in rep), q
        else:
            # hypothesis is sufficient, not necessary
            if pred(q):
                assert q in rep, q


def test_search_matches_enumeration():
    bound = 2000
    rep = representable_set(1, 2, 10, bound)
    for q in range(bound + 1):
        got = represent(FORM_1_2_10, q)
        assert (got is not None) == (q in rep), q


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_accelerated_matches_exhaustive(q):
    for form in (FORM_1_2_10, FORM_1_1_10, FORM_1_1_7):
        slow = represent(form, q, accelerate=False)
        fast = represent(form, q, accelerate=True)
        if slow is None:
            assert fast is None
        else:
            assert fast is not None
            assert (slow.a, slow.b, slow.c) == (fast.a, fast.b, fast.c)


def test_unsupported_form_brute_force_only():
    form = DiagonalForm(1, 3, 5)
    rep = represent(form, 9)
    assert rep is not None and rep.form.value(rep.a, rep.b, rep.c) == 9
