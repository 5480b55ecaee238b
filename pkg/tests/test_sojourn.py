from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chungfeller.combinatorics import a_coeff
from chungfeller.conditioning import Conditioning, all_conditionings
from chungfeller.exceptions import DomainError
from chungfeller.sojourn import (
    alpha,
    chung_feller_symmetric,
    endpoint_mass,
    limit_masses,
    limit_r0,
    mass_table,
    product_law_check,
    r_boundary,
    r_bridge,
    r_free,
    r_pinned,
    r_recursive,
    r_signed,
    stitch_check,
)
from chungfeller.walk_laws import WalkParams, prob_S

from conftest import TEST_PS, walk_params

F = Fraction
HALF = WalkParams(F(1, 2))
THIRD = WalkParams(F(1, 3))
walks = st.integers(0, 16).flatmap(lambda n: st.tuples(st.integers(0, n), st.just(n)))


@pytest.mark.parametrize("p", [F(1, 3), F(1, 2), F(2, 3)])
def test_free_examples(p):
    P = WalkParams(p)
    q = P.q
    assert r_free(P, 2, 5) == p * q**3 * (2 * p + 1)
    assert r_free(P, 1, 4) == 0


def test_free_half():
    assert r_free(HALF, 2, 4) == F(1, 4)
    assert r_free(HALF, 0, 0) == 1


def test_k_above_n_rejected():
    for f in (r_free, r_bridge):
        with pytest.raises(DomainError):
            f(THIRD, 3, 2)
    with pytest.raises(DomainError):
        r_signed(THIRD, 3, 2, "+")
    with pytest.raises(DomainError):
        r_pinned(THIRD, 3, 2, 1)
    with pytest.raises(DomainError):
        r_pinned(THIRD, 1, 2, 0)


@pytest.mark.parametrize("p", TEST_PS)
def test_boundary_examples(p):
    P = WalkParams(p)
    q = P.q
    assert r_boundary(P, 3, "first") == q**2 * (p + 1)
    assert r_boundary(P, 0, "first") == 1
    assert r_boundary(P, 5, "second") == 2 * p**3 * q**2
    assert r_boundary(P, 4, "second") == 0
    for n in range(20):
        assert r_boundary(P, n, "first") == r_free(P, 0, n)
        assert r_boundary(P, n, "last") == r_free(P, n, n)
    for n in range(1, 20):
        assert r_boundary(P, n, "second") == r_free(P, 1, n)
        assert r_boundary(P, n, "second_last") == r_free(P, n - 1, n)


def test_bridge_examples():
    for p in TEST_PS:
        P = WalkParams(p)
        for k in (0, 2, 4):
            assert r_bridge(P, k, 4) == 2 * P.pq**2
        assert r_bridge(P, 1, 4) == 0
        for k in (0, 2, 4, 6):
            assert r_bridge(P, k, 6) / prob_S(P, 6, 0) == F(1, 4)


def test_signed_examples():
    for p in TEST_PS:
        P = WalkParams(p)
        assert r_signed(P, 2, 6, "+") == 2 * p**4 * P.q**2
        assert r_signed(P, 0, 2, "+") == 0
        for n in range(2, 20):
            assert r_signed(P, 2, n, "+") == p**2 * r_bridge(P, 0, n - 2)
            assert r_signed(P, 0, n, "+") == 0
            if n % 2 == 0:
                assert r_signed(P, 1, n, "+") == 0


def test_pinned_examples():
    P = THIRD
    assert sum(r_pinned(P, 2, 4, j) for j in range(-4, 5) if j) + r_bridge(P, 2, 4) == r_free(P, 2, 4)
    for p in TEST_PS:
        Q = WalkParams(p)
        assert r_pinned(Q, 1, 3, 1) == p**2 * Q.q
        assert r_pinned(Q, 0, 2, 1) == 0


def test_recursive_examples():
    assert r_recursive(THIRD, 0, 1, Conditioning.FREE) == F(2, 3)
    for n in range(13):
        for k in range(n + 1):
            assert r_recursive(THIRD, k, n, Conditioning.FREE) == r_free(THIRD, k, n)
            assert r_recursive(THIRD, k, n, Conditioning.BRIDGE) == r_bridge(THIRD, k, n)


@given(walk_params(), walks)
@settings(max_examples=60)
def test_conditioning_decomposition(P, kn):
    k, n = kn
    free = r_free(P, k, n)
    assert r_signed(P, k, n, "+") + r_signed(P, k, n, "-") + r_bridge(P, k, n) == free
    assert sum((r_pinned(P, k, n, j) for j in range(-n, n + 1) if j), r_bridge(P, k, n)) == free


@given(walk_params(), walks, st.integers(1, 16))
@settings(max_examples=60)
def test_duality(P, kn, j):
    k, n = kn
    D = P.dual()
    assert r_free(P, k, n) == r_free(D, n - k, n)
    assert r_signed(P, k, n, "+") == r_signed(D, n - k, n, "-")
    assert r_pinned(P, k, n, j) == r_pinned(D, n - k, n, -j)


@given(walk_params(max_den=10), st.integers(0, 14), st.sampled_from(["free", "bridge", "positive", "negative", "pinned"]), st.integers(-14, 14))
@settings(max_examples=30, deadline=None)
def test_tables_are_consistent(P, n, kind, j):
    cond = Conditioning.pinned(j or 1) if kind == "pinned" else Conditioning(kind)
    table = mass_table(P, n, cond)
    assert table.is_consistent()
    assert table.total_target == endpoint_mass(P, n, cond)
    assert table.masses == mass_table(P, n, cond, method="recursive").masses


def test_parity_vanishing():
    for n in range(0, 16):
        t = mass_table(THIRD, n, Conditioning.BRIDGE)
        assert all(m == 0 for k, m in enumerate(t) if k % 2 or n % 2)
        if n % 2 == 0:
            assert all(m == 0 for m in mass_table(THIRD, n, Conditioning.FREE).masses[1::2])


def test_product_law_examples():
    assert product_law_check(HALF, 2, 4) == (F(1, 4), F(1, 4))
    lhs, rhs = product_law_check(THIRD, 4, 8)
    assert lhs == rhs
    assert product_law_check(THIRD, 0, 0) == (1, 1)
    with pytest.raises(DomainError):
        product_law_check(THIRD, 1, 4)


def test_stitch_examples():
    lhs, rhs = stitch_check(HALF, 1, 3)
    assert lhs == rhs == F(1, 4)
    lhs, rhs = stitch_check(WalkParams(F(2, 3)), 3, 5)
    assert lhs == rhs
    with pytest.raises(DomainError):
        stitch_check(THIRD, 1, 1)
    with pytest.raises(DomainError):
        stitch_check(THIRD, 2, 5)


def test_symmetric_examples():
    assert chung_feller_symmetric(2, 4) == F(1, 4)
    assert chung_feller_symmetric(0, 0) == 1
    assert chung_feller_symmetric(4, 8) == F(9, 64) == r_free(HALF, 4, 8)
    assert chung_feller_symmetric(1, 4) == 0


def test_limit_masses():
    assert all(limit_masses(HALF, k) == 0 for k in range(20))
    assert limit_masses(THIRD, 0) == F(1, 2)
    assert limit_masses(THIRD, 3) == 0
    # alternative form: r_{k,k} = (2 - 1/p)^+ + 2q sum_{i >= k} alpha_i, with the
    # full sum (1 - |p - q|)/(4pq)
    P = THIRD
    full = (1 - abs(P.p - P.q)) / (4 * P.pq)
    for k in range(0, 30, 2):
        head = sum((alpha(P.pq, i) for i in range(0, k, 2)), F(0))
        rkk = max(F(0), 2 - 1 / P.p) + 2 * P.q * (full - head)
        assert limit_masses(P, k) == rkk * limit_r0(P)


@pytest.mark.parametrize("p", [F(1, 4), F(1, 3)])
def test_boundary_limit_approached_from_above(p):
    P = WalkParams(p)
    lim = float(limit_r0(P))
    gaps = [float(r_boundary(P, n, "first")) - lim for n in (50, 100, 200)]
    assert all(g > 0 for g in gaps)
    assert gaps[0] > gaps[1] > gaps[2]
    vals = [r_boundary(P, n, "first") for n in range(40)]
    assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_alpha_definition():
    assert alpha(THIRD.pq, 4) == a_coeff(4) * THIRD.pq**2
