from __future__ import annotations

import random

import pytest

from pentadecomp.decompose import (
    CONSTRUCTIVE_TRIPLES,
    THM11_CASE2_MIN,
    THM11_MIN,
    THM12_MIN,
    THM13_D1_MIN,
    THM13_D2_MIN,
    Decomposition,
    at_least_bound,
    at_most_bound,
    certify,
    decompose,
    direct_search,
    interval_b_range,
    INTERVAL_THM11,
    reconstruct,
    residual,
    select_B_thm11,
    select_B_thm12,
    select_B_thm13,
)
from pentadecomp.errors import DomainError, UnsupportedTripleError
from pentadecomp.polygonal import pentagonal
from pentadecomp.transforms import QuaternaryWitness


def test_interval_exactness_vs_float():
    # B >= sqrt(n)/3 + 1/6 tested as (6B-1)^2 >= 4n
    for n in (9001, 8892, 10**12, 10**12 + 1):
        lo, hi = interval_b_range(n, INTERVAL_THM11)
        assert at_least_bound(lo, n, INTERVAL_THM11[0])
        assert not at_least_bound(lo - 1, n, INTERVAL_THM11[0])
        assert at_most_bound(hi, n, INTERVAL_THM11[1])
        assert not at_most_bound(hi + 1, n, INTERVAL_THM11[1])


def test_select_b_thm11_examples():
    sel = select_B_thm11(9001)
    assert sel.B == 32 and sel.delta is None
    assert residual(9001, 32, (1, 1, 2)) == 934
    sel = select_B_thm11(8892)
    assert sel.B % 3 == (-8892) % 3 and sel.b_min <= sel.B <= sel.b_max
    with pytest.raises(DomainError):
        select_B_thm11(8891)
    with pytest.raises(DomainError):
        select_B_thm11(10000)  # divisible by 5, below the case-2 threshold


def test_select_b_thm11_case2():
    sel = select_B_thm11(222290)
    assert sel.delta in (0, 1, -1)
    assert (sel.B - 1) ** 2 % 5 == sel.delta % 5
    m = residual(222290, sel.B, (1, 1, 2))
    assert m % 2 == 0 and 0 < m <= sel.B**2
    # residual is 5 * u with u = +-1 mod 5, outside the L21 exceptional set
    assert m % 5 == 0 and (m // 5) % 5 in (1, 4)


def test_select_b_thm12_postconditions():
    for n in (45325138, 45325139, 45325140, 99999999999):
        sel = select_B_thm12(n)
        B = sel.B
        q9 = n + 5 * B - 15 * B * B
        assert q9 % 9 == 0
        q = q9 // 9
        if n % 2 == 1:
            assert q % 2 == 1 and q % 9 == 0
        else:
            assert q % 8 == 4
        assert 0 < 6 * q < (B + 1) ** 2


def test_select_b_thm13_postconditions():
    sel = select_B_thm13(808834881, 1)
    B = sel.B
    m = residual(808834881, B, (1, 2, 3))
    assert m % 6 == 0 and (m // 6) % 9 == 0 and 0 < m < (B + 1) ** 2
    n = 808834881 + (7 - 808834881 % 7) % 7  # smallest multiple of 7 above
    sel = select_B_thm13(n, 1)
    q = residual(n, sel.B, (1, 2, 3)) // 6
    assert q % 7 == 0 and (q // 7) % 7 in (1, 2, 4)

    sel = select_B_thm13(897099189, 2)
    q = residual(897099189, sel.B, (1, 2, 6)) // 6
    assert q % 8 != 7
    with pytest.raises(DomainError):
        select_B_thm13(100, 3)


def test_reconstruct_example():
    w = QuaternaryWitness(1, -1, 0, "L21", 2)
    d = reconstruct(1, w, (1, 1, 2))
    assert d.n == 8 and d.indices == (2, 0, 1, 1)
    assert certify(d)
    z = QuaternaryWitness(0, 0, 0, "L21", 0)
    d = reconstruct(0, z, (1, 1, 2))
    assert d.n == 0 and d.indices == (0, 0, 0, 0)


def test_reconstruct_kind_mismatch():
    w = QuaternaryWitness(0, 0, 0, "L31", 0)
    with pytest.raises(DomainError):
        reconstruct(0, w, (1, 1, 2))
    with pytest.raises(UnsupportedTripleError):
        reconstruct(0, w, (9, 9, 9))


def test_decompose_examples():
    d = decompose(9, (1, 1, 2))
    assert d.n == 9 and certify(d) and d.method == "direct-search"
    assert d.indices == (2, 1, 1, 1)
    for triple in CONSTRUCTIVE_TRIPLES:
        d = decompose(0, triple)
        assert d.indices == (0, 0, 0, 0)
    d = decompose(9001, (1, 1, 2), method="constructive")
    assert d.B == 32 and certify(d)


def test_decompose_thresholds_switch_method():
    assert decompose(THM11_MIN - 1, (1, 1, 2)).method == "direct-search"
    assert decompose(THM11_MIN, (1, 1, 2)).method == "constructive"
    # multiples of 5 stay on search until the case-2 threshold
    n5 = THM11_MIN + (5 - THM11_MIN % 5) % 5
    assert decompose(n5, (1, 1, 2)).method == "direct-search"
    assert decompose(THM11_CASE2_MIN + 1, (1, 1, 2)).method == "constructive"


def test_decompose_unsupported_triple():
    with pytest.raises(UnsupportedTripleError):
        decompose(10, (2, 4, 8))


def test_certify_tamper():
    d = decompose(9001, (1, 1, 2))
    assert certify(d)
    bad = Decomposition(d.triple, d.n, d.w0 + 1, d.x0, d.y0, d.z0, d.method)
    assert not certify(bad)


def test_direct_search_agrees_with_constructive():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randrange(THM11_MIN, 50000)
        if n % 5 == 0:
            continue
        dc = decompose(n, (1, 1, 2), method="constructive")
        ds = decompose(n, (1, 1, 2), method="search")
        assert certify(dc) and certify(ds) and dc.n == ds.n == n


def test_direct_search_prefix_1_1_2():
    for n in list(range(0, 300)) + [8891]:
        d = direct_search(n, (1, 1, 2))
        assert certify(d)


def test_large_thresholds_constructive():
    cases = [
        (THM12_MIN, (2, 3, 4)),
        (THM13_D1_MIN, (1, 2, 3)),
        (THM13_D2_MIN, (1, 2, 6)),
    ]
    for n, triple in cases:
        d = decompose(n, triple)
        assert d.method == "constructive" and certify(d)
        total = sum(w * pentagonal(i) for w, i in zip(d.weights, d.indices))
        assert total == n
