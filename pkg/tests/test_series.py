import io
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chungfeller.combinatorics import a_coeff
from chungfeller.conditioning import Conditioning, all_conditionings
from chungfeller.exceptions import DomainError
from chungfeller.series import (
    BiSeries,
    UniSeries,
    even_part_boundary_residuals,
    even_part_residual,
    gf_even_part,
    gf_general,
    gf_H,
    gf_H_algebraic,
    gf_K,
    gf_K_algebraic,
    gf_master,
    inv_A_sum,
    series_A,
    series_inv_A,
)
from chungfeller.sojourn import r_boundary, r_closed
from chungfeller.walk_laws import WalkParams

from conftest import TEST_PS, walk_params

HALF = WalkParams(Fraction(1, 2))
THIRD = WalkParams(Fraction(1, 3))
F = Fraction


def test_uni_arithmetic():
    a = UniSeries([1, 1], 2)
    b = UniSeries([1, -1], 2)
    assert a * b == UniSeries([1, 0, -1], 2)
    assert series_A(HALF, 6).scale(0).is_zero()
    assert (a + 1) == UniSeries([2, 1, 0])
    assert (a - a).is_zero()
    assert a**3 == UniSeries([1, 3, 3], 2)
    with pytest.raises(TypeError):
        UniSeries([0.5])
    with pytest.raises(IndexError):
        a[3]


def test_mismatched_orders_take_min():
    assert (UniSeries([1, 2, 3]) + UniSeries([1, 1])).order == 1
    assert (BiSeries.one(5) * BiSeries.one(3)).order == 3


def test_series_A_examples():
    assert series_A(HALF, 4).coeffs == (1, 0, F(-1, 2), 0, F(-1, 8))
    assert series_inv_A(HALF, 4).coeffs == (1, 0, F(1, 2), 0, F(3, 8))


@given(walk_params(), st.integers(0, 30))
@settings(max_examples=40)
def test_A_square_and_inverse(P, order):
    A = series_A(P, order)
    expected = UniSeries.monomial(2, order, -4 * P.pq) + 1
    assert A * A == expected
    assert A * series_inv_A(P, order) == UniSeries.one(order)
    assert all(c == 0 for c in series_inv_A(P, order).coeffs[1::2])


def test_inv_A_sum_examples():
    assert inv_A_sum(THIRD, 8).coeff(0, 0) == F(1, 2)
    assert inv_A_sum(HALF, 8).coeff(2, 2) == F(1, 16)
    assert inv_A_sum(HALF, 8).coeff(2, 2) == a_coeff(4) / 16


@pytest.mark.parametrize("p", TEST_PS)
def test_inv_A_sum_is_inverse(p):
    P = WalkParams(p)
    inv = inv_A_sum(P, 20)
    A = series_A(P, 20)
    assert inv * (BiSeries.from_x(A) + BiSeries.from_y(A)) == BiSeries.one(20)
    assert inv.mul_x(A) + inv.mul_y(A) == BiSeries.one(20)


def test_mul_x_agrees_with_lift():
    inv = inv_A_sum(THIRD, 12)
    u = UniSeries([F(k, 7) for k in range(13)])
    assert inv.mul_x(u) == inv * BiSeries.from_x(u)
    assert inv.mul_y(u) == inv * BiSeries.from_y(u)


def test_gf_examples():
    assert gf_K(HALF, 0, 6).coeffs == (0, 0, F(1, 2), 0, F(1, 8), 0, F(1, 16))
    assert gf_H(THIRD, 0, 4)[0] == 1
    assert gf_H(THIRD, 1, 4)[1] == F(1, 3)


@pytest.mark.parametrize("p", TEST_PS)
def test_definitional_and_algebraic_gfs_agree(p):
    P = WalkParams(p)
    for a in range(-6, 7):
        assert gf_K(P, a, 20) == gf_K_algebraic(P, a, 20)
        assert gf_H(P, a, 20) == gf_H_algebraic(P, a, 20)


def test_master_examples():
    G0 = gf_master(THIRD, Conditioning.BRIDGE, 12)
    for k in range(0, 13, 2):
        for m in range(0, 13 - k, 2):
            assert G0.coeff(k, m) == 2 * a_coeff(k + m) * THIRD.pq ** ((k + m) // 2)
    assert gf_master(THIRD, Conditioning.FREE, 6).coeff(0, 0) == 1
    assert gf_master(HALF, Conditioning.FREE, 6).coeff(2, 2) == F(1, 4)


def test_pinned_zero_rejected():
    with pytest.raises(DomainError):
        gf_master(THIRD, Conditioning("pinned", 0), 4)


@pytest.mark.parametrize("p", [F(1, 4), F(1, 2), F(2, 3)])
def test_master_matches_closed_forms(p):
    P = WalkParams(p)
    order = 14
    for c in all_conditionings(order):
        G = gf_master(P, c, order)
        assert G == gf_general(P, c, order)
        for n in range(order + 1):
            for k in range(n + 1):
                assert G.coeff(k, n - k) == r_closed(P, k, n, c)


@pytest.mark.parametrize("p", TEST_PS)
def test_boundary_slices(p):
    P = WalkParams(p)
    G = gf_master(P, Conditioning.FREE, 16)
    assert G.slice_x().coeffs == tuple(r_boundary(P, n, "last") for n in range(17))
    assert G.slice_y().coeffs == tuple(r_boundary(P, n, "first") for n in range(17))


@pytest.mark.parametrize("p", TEST_PS)
def test_sum_identity(p):
    P = WalkParams(p)
    parts = [gf_master(P, c, 16) for c in (Conditioning.POSITIVE, Conditioning.NEGATIVE, Conditioning.BRIDGE)]
    assert parts[0] + parts[1] + parts[2] == gf_master(P, Conditioning.FREE, 16)


@pytest.mark.parametrize("p", TEST_PS)
def test_even_part(p):
    P = WalkParams(p)
    G = gf_master(P, Conditioning.FREE, 16)
    Ge = gf_even_part(P, 16)
    assert Ge == (G + G.reflect()).scale(F(1, 2))
    assert even_part_residual(P, 16).is_zero()
    assert all(r.is_zero() for r in even_part_boundary_residuals(P, 16))


def test_even_part_example():
    assert gf_even_part(HALF, 8).coeff(2, 2) == F(1, 4)


def test_csv_dump():
    buf = io.StringIO()
    inv_A_sum(HALF, 2).write_csv(buf)
    assert buf.getvalue() == "k,m,numerator,denominator\n0,0,1,2\n0,2,1,8\n2,0,1,8\n"
