from __future__ import annotations

import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from anspaces.gauge import (
    INFINITY, Verdict, an_triviality_order, census, class_representative,
    count_su2_classes, gcd_equivalent, is_ad_p_trivial, p_adic_valuation,
    su2_an_equivalent, su2_cap, su2_invariant,
)


@pytest.mark.parametrize("k, p, v", [(12, 2, 2), (0, 3, INFINITY), (-45, 3, 2), (7, 7, 1), (1, 5, 0)])
def test_valuation(k, p, v):
    assert p_adic_valuation(k, p) == v


def test_valuation_rejects_composite():
    with pytest.raises(ValueError):
        p_adic_valuation(12, 4)


@pytest.mark.parametrize("p, n, cap", [(2, 1, 2), (3, 1, 1), (7, 2, 0), (3, 3, 3), (5, 3, 1), (7, 3, 1)])
def test_caps(p, n, cap):
    assert su2_cap(p, n) == cap


def test_invariant_examples():
    assert su2_invariant(24, 1).as_dict() == {2: 2, 3: 1}
    assert su2_invariant(0, 1).as_dict() == {2: 2, 3: 1}
    assert su2_invariant(5, 1).as_dict() == {2: 0, 3: 0}
    assert [p for p, _, _ in su2_invariant(1, 3).entries] == [2, 3, 5, 7]


def test_verdict_examples():
    assert su2_an_equivalent(5, 7, 1) is Verdict.EQUIVALENT
    assert su2_an_equivalent(2, 4, 1) is Verdict.NOT_EQUIVALENT
    assert su2_an_equivalent(4, 8, 1) is Verdict.EQUIVALENT
    # v_2 = 2 on both sides, v_3 capped values 1 vs 0
    assert su2_invariant(12, 3).as_dict()[3] == 1 and su2_invariant(20, 3).as_dict()[3] == 0
    assert su2_an_equivalent(12, 20, 3) is Verdict.INCONCLUSIVE


def test_gcd_examples():
    assert gcd_equivalent(12, 5, 7)
    assert not gcd_equivalent(12, 2, 4)
    assert gcd_equivalent(12, 0, 12)
    assert {math.gcd(12, k) for k in range(-200, 201)} == {1, 2, 3, 4, 6, 12}


def test_triviality_orders():
    o1, o2, o3 = (an_triviality_order(n) for n in (1, 2, 3))
    assert (o1.odd_part, o1.v2_lower, o1.v2_upper) == (3, 1, 2)
    assert (o2.odd_part, o2.v2_lower, o2.v2_upper) == (45, 2, 4)
    assert o3.odd_part == 3 ** 3 * 5 * 7 == 945
    assert o1.admits(12) and o2.admits(180)
    assert not o1.admits(6 * 8) and not o2.admits(90 * 3)


def test_ad_p_triviality_examples():
    assert is_ad_p_trivial(0, 5, 4)
    assert is_ad_p_trivial(3, 3, 1)
    assert not is_ad_p_trivial(3, 3, 2)
    with pytest.raises(ValueError):
        is_ad_p_trivial(4, 2, 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_odd_part_is_sharp(n):
    a = an_triviality_order(n).odd_part
    for p in (3, 5, 7, 11, 13):
        if a % p == 0:
            assert is_ad_p_trivial(a, p, n)
            assert not is_ad_p_trivial(a // p, p, n)


def test_class_counts():
    assert count_su2_classes(1) == 6
    assert count_su2_classes(2) == 5 * 3 * 2 == 30


@pytest.mark.parametrize("n, modulus", [(1, 12), (2, 720)])
def test_class_count_by_scan(n, modulus):
    # every residue class modulo 2^{2n} * odd primes^caps, plus k = 0
    seen = {su2_invariant(k, n) for k in [0, *range(1, modulus + 1)]}
    assert len(seen) == count_su2_classes(n)


def test_scan_n1_six_classes():
    assert len({su2_invariant(k, 1) for k in range(-1000, 1001)}) == 6


@pytest.mark.parametrize("n", [1, 2])
def test_invariant_periodic(n):
    m = 2 ** (2 * n) * an_triviality_order(n).odd_part
    for k in range(-m, 2 * m):
        assert su2_invariant(k, n) == su2_invariant(k + m, n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_representatives_realize_every_class(n):
    caps = {p: c for p, c, _ in su2_invariant(1, n).entries}
    for values in itertools.product(*(range(c + 1) for c in caps.values())):
        want = dict(zip(caps, values))
        assert su2_invariant(class_representative(want, n), n).as_dict() == want


def test_census_rows():
    rows = census(1, 1000)
    assert len(rows) == 6
    assert sum(r["count"] for r in rows) == 2001
    assert {r["representative"] for r in rows} == {1, 2, 3, 4, 6, 0}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gcd_agreement_matches_capped_valuations(n):
    for p, cap, _ in su2_invariant(1, n).entries:
        if p == 2:
            continue
        for k in range(-300, 301):
            # v_p(gcd(p^c, k)) = min(c, v_p(k))
            assert p_adic_valuation(math.gcd(p ** cap, k), p) == min(cap, p_adic_valuation(k, p))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gcd_equivalence_implies_equal_odd_entries(n):
    N = an_triviality_order(n).odd_part * 2 ** (2 * n)
    rng = random.Random(n)
    for _ in range(3000):
        k, k2 = rng.randint(-300, 300), rng.randint(-300, 300)
        if gcd_equivalent(N, k, k2):
            a, b = su2_invariant(k, n).as_dict(), su2_invariant(k2, n).as_dict()
            assert all(a[p] == b[p] for p in a if p != 2)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(1, 4))
def test_verdict_reflexive_symmetric(k, k2, n):
    assert su2_an_equivalent(k, k, n) is Verdict.EQUIVALENT
    v = su2_an_equivalent(k, k2, n)
    assert v is su2_an_equivalent(k2, k, n)
    if v is Verdict.NOT_EQUIVALENT:
        assert min(p_adic_valuation(k, 2), p_adic_valuation(k2, 2)) <= 1
