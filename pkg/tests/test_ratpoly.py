"""Exact rational polynomial arithmetic, univariate and bivariate."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from curvezeta import BiPoly, RationalPoly
from curvezeta.errors import NotDivisibleError
from curvezeta.ratpoly import (bivariate_divmod, bivariate_exact_divide,
                               format_poly, poly_gcd, series_expand_rational,
                               squarefree_decomposition)

fracs = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def rpolys(max_deg=4):
    return st.lists(fracs, min_size=0, max_size=max_deg + 1).map(RationalPoly)


@given(rpolys(), rpolys(), rpolys())
def test_univariate_ring_identities(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RationalPoly()
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree


@given(rpolys(6), rpolys(3))
def test_univariate_divmod_invariant(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(rpolys(4), rpolys(4))
def test_poly_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    if g.is_zero():
        assert a.is_zero() and b.is_zero()
        return
    assert g.coeffs[-1] == 1  # monic
    assert (a % g).is_zero()
    assert (b % g).is_zero()


def test_gcd_of_constructed_common_factor():
    common = RationalPoly((1, 2, 1))  # (x+1)^2
    a = common * RationalPoly((3, 1))
    b = common * RationalPoly((-1, 1))
    assert poly_gcd(a, b) == common


def test_squarefree_decomposition_reconstructs():
    x = RationalPoly.x()
    poly = (x + 1) ** 2 * (x - 2) ** 3 * (x + 3)
    parts = squarefree_decomposition(poly)
    product = RationalPoly.const(1)
    for factor, mult in parts:
        product = product * factor ** mult
    assert product == poly.monic()
    assert sorted(m for _, m in parts) == [1, 2, 3]


def test_squarefree_decomposition_flat_for_squarefree_input():
    x = RationalPoly.x()
    poly = (x + 1) * (x - 1) * (x + 2)
    assert all(m == 1 for _, m in squarefree_decomposition(poly))


def test_evaluate_and_derivative():
    p = RationalPoly((1, -2, 3))  # 3x^2 - 2x + 1
    assert p.evaluate(2) == Fraction(9)
    assert p.derivative() == RationalPoly((-2, 6))
    assert p.shift(2) == RationalPoly((0, 0, 1, -2, 3))


def bipolys():
    return st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 3)), fracs,
        max_size=6).map(BiPoly.from_terms)


@settings(max_examples=50)
@given(bipolys(), bipolys(), bipolys())
def test_bivariate_ring_identities(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(bipolys())
def test_terms_round_trip(a):
    assert BiPoly.from_terms(a.terms()) == a


@given(bipolys(), st.integers(0, 4), st.integers(0, 4))
def test_coefficient_views_agree(a, i, j):
    assert a.coeff_of_t(i).coeff(j) == a.coeff(i, j)
    assert a.coeff_of_u(j).coeff(i) == a.coeff(i, j)


@given(bipolys(), fracs)
def test_evaluation_views_agree(a, x):
    # substituting u then T must equal substituting T then u
    assert a.eval_u(x).evaluate(x) == a.eval_t(x).evaluate(x)


def test_derivatives():
    t, u = BiPoly.t(), BiPoly.u()
    p = t ** 2 * u + 3 * u ** 2
    assert p.derivative_t() == 2 * t * u
    assert p.derivative_u() == t ** 2 + 6 * u


@given(bipolys(), bipolys())
def test_bivariate_divmod_invariant(num, den):
    if den.is_zero():
        return
    q, r = bivariate_divmod(num, den)
    assert q * den + r == num


def test_bivariate_exact_division():
    t, u = BiPoly.t(), BiPoly.u()
    prod = (u - 1) * (t ** 2 + u * t + 3)
    assert bivariate_exact_divide(prod, u - 1) == t ** 2 + u * t + 3
    with pytest.raises(NotDivisibleError) as info:
        bivariate_exact_divide(prod + 1, u - 1)
    assert not info.value.remainder.is_zero()


def test_series_expansion_geometric():
    one = RationalPoly.const(1)
    t = RationalPoly.x()
    assert series_expand_rational(one, [one - t], 5) == [1] * 6
    # 1 / ((1-T)(1-2T)) has coefficients 2^(n+1) - 1
    got = series_expand_rational(one, [one - t, one - 2 * t], 6)
    assert got == [2 ** (n + 1) - 1 for n in range(7)]


def test_series_expansion_rejects_zero_constant_term():
    with pytest.raises(ZeroDivisionError):
        series_expand_rational(RationalPoly.const(1), [RationalPoly.x()], 3)


def test_format_poly_rendering():
    assert format_poly((), "T") == "0"
    assert format_poly((1,), "T") == "1"
    assert format_poly((0, 1), "T") == "T"
    assert format_poly((1, -1), "T") == "1 - T"
    assert format_poly((Fraction(1, 2), 0, 3), "u") == "1/2 + 3*u^2"


def test_bipoly_text():
    t, u = BiPoly.t(), BiPoly.u()
    p = 1 + (3 - u) * t + u * t ** 2
    assert str(p) == "1 + (3 - u)*T + u*T^2"
