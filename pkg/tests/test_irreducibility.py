"""Absolute factor counting: differential-equation route versus the
closed-form reference, on inputs whose true count is known by construction."""

from fractions import Fraction

import pytest

from curvezeta import (BiPoly, absolute_factor_count, analyze_irreducibility,
                       is_squarefree, reference_factor_count, reversal)
from curvezeta.errors import OracleUnsupportedError
from conftest import random_products

T, U = BiPoly.t(), BiPoly.u()

G1_NUMERATOR = 1 + (3 - U) * T + U * T ** 2
G2_NUMERATOR = (1 + (3 - U) * T + (6 - 2 * U) * T ** 2
                + (3 * U - U ** 2) * T ** 3 + U ** 2 * T ** 4)

KNOWN_CASES = [
    (G1_NUMERATOR, 1),
    (G2_NUMERATOR, 1),
    ((1 - T) * G1_NUMERATOR, 2),
    (T ** 2 - 2 * U ** 2, 2),     # conjugate factors T = +-sqrt(2) u
    ((1 + U * T) * (1 - T), 2),
    (T ** 2 + U ** 2, 2),
    (U ** 2 - 5 * T, 1),
    ((T ** 2 + U) * (T + U ** 2), 2),
    (T * U + 1, 1),
]


@pytest.mark.parametrize("poly,count", KNOWN_CASES)
def test_known_counts_both_routes(poly, count):
    assert absolute_factor_count(poly) == count
    assert reference_factor_count(poly) == count


def test_is_squarefree():
    assert is_squarefree((1 - T) * (1 - U * T))
    assert is_squarefree(G1_NUMERATOR)
    assert not is_squarefree((1 - T) ** 2 * (1 + U))
    assert not is_squarefree((1 + U) ** 2 * (T + U))  # square in the content
    assert not is_squarefree(BiPoly.from_terms({}))
    assert is_squarefree(BiPoly.const(3))
    assert is_squarefree(1 + U + U ** 2)  # T-free but squarefree in u


def test_factor_count_input_guards():
    with pytest.raises(ValueError):
        absolute_factor_count(1 + T)  # u is absent
    with pytest.raises(ValueError):
        absolute_factor_count(1 + U)  # T is absent
    with pytest.raises(ValueError):
        absolute_factor_count((T + U) ** 2)  # not squarefree


def test_reference_oracle_refuses_what_it_cannot_classify():
    with pytest.raises(OracleUnsupportedError):
        reference_factor_count((T + U) ** 2)  # repeated factor
    # irreducible, inhomogeneous, cubic in both variables: no closed form
    with pytest.raises(OracleUnsupportedError):
        reference_factor_count(T ** 3 + U ** 3 + 1)


def test_quadratic_discriminant_classification():
    # u^2 = T^2 (T + 1) has a non-square discriminant: one absolute factor
    assert reference_factor_count(U ** 2 - T ** 2 * (T + 1)) == 1
    # u^2 = T^2 (T + 1)^2 splits: two absolute factors
    assert reference_factor_count(U ** 2 - T ** 2 * (T + 1) ** 2) == 2
    assert absolute_factor_count(U ** 2 - T ** 2 * (T + 1)) == 1
    assert absolute_factor_count(U ** 2 - T ** 2 * (T + 1) ** 2) == 2


def test_reversal():
    assert reversal(G1_NUMERATOR) == T ** 2 + (3 - U) * T + U
    assert reversal(reversal(G1_NUMERATOR)) == G1_NUMERATOR
    assert reversal(BiPoly.const(5)) == BiPoly.const(5)


def test_random_products_three_way_agreement():
    for product, truth in random_products(seed=20240817, how_many=55):
        assert is_squarefree(product)
        assert absolute_factor_count(product) == truth
        assert reference_factor_count(product) == truth


def test_analyze_genus_zero():
    report = analyze_irreducibility(BiPoly.const(1), 0, Fraction(1))
    assert not report.applicable
    assert report.factor_count is None
    assert len(report.clauses) == 1 and report.clauses[0].passed


def test_analyze_worked_elliptic():
    report = analyze_irreducibility(G1_NUMERATOR, 1, Fraction(4))
    assert report.applicable and report.squarefree
    assert report.factor_count == 1
    assert report.reference_count == 1
    names = [c.name for c in report.clauses]
    assert names == ["reversal leading coefficient", "reversal value at T = 1",
                     "factor count cross-check", "absolutely irreducible"]
    assert all(c.passed for c in report.clauses)


def test_analyze_zero_class_mass():
    euler = (1 - T) * (1 - U * T)
    report = analyze_irreducibility(euler, 1, Fraction(0))
    assert report.factor_count == 2
    by_name = {c.name: c for c in report.clauses}
    assert by_name["factor 1 - T at zero class mass"].passed
    assert by_name["reversal value at T = 1"].passed
    assert "absolutely irreducible" not in by_name


def test_analyze_flags_wrong_class_mass():
    # a reducible polynomial presented with nonzero mass must fail
    report = analyze_irreducibility((1 - T) * (1 - U * T), 1, Fraction(4))
    by_name = {c.name: c for c in report.clauses}
    assert not by_name["absolutely irreducible"].passed
    assert not by_name["reversal value at T = 1"].passed
    assert by_name["factor count cross-check"].passed  # both routes say 2


def test_analyze_zero_mass_without_the_factor():
    # genus-1 shaped polynomial with P(1, u) != 0 but claimed mass zero
    bad = 1 + (3 - U) * T + U * T ** 2
    report = analyze_irreducibility(bad, 1, Fraction(0))
    by_name = {c.name: c for c in report.clauses}
    assert not by_name["factor 1 - T at zero class mass"].passed
