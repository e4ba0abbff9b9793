"""Absolute irreducibility of the two-variable numerator.

Primary route: the dimension of the solution space of the partial
differential equation g_u * P - g * P_u = h_T * P - h * P_T, with the Gao
degree bounds on g and h, equals the number of irreducible factors of a
squarefree P over the algebraic closure.  Everything is exact rational
linear algebra.

Reference route: factor over the rationals with sympy, then classify each
rational factor by a closed form (univariate, homogeneous, linear or
quadratic in one variable).  Shapes outside that list raise
OracleUnsupportedError rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import OracleUnsupportedError
from .ratpoly import (BiPoly, RationalPoly, bivariate_divmod, format_poly,
                      poly_gcd, squarefree_decomposition)
from .zetatwo import ClauseResult

_ZERO = RationalPoly(())


def _tp(P: BiPoly) -> list:
    """BiPoly as a T-polynomial with coefficients in Q[u]."""
    return [P.coeff_of_t(i) for i in range(P.t_degree + 1)]


def _tp_trim(A: list) -> list:
    while A and A[-1].is_zero():
        A.pop()
    return A


def _tp_content(A: list) -> RationalPoly:
    c = _ZERO
    for a in A:
        c = poly_gcd(c, a)
    return c


def _tp_primitive(A: list) -> list:
    A = _tp_trim(list(A))
    if not A:
        return A
    c = _tp_content(A)
    return [divmod(a, c)[0] for a in A]


def _tp_prem(A: list, B: list) -> list:
    """Pseudo-remainder of A by B in Q[u][T]."""
    R = _tp_trim(list(A))
    db = len(B) - 1
    lead = B[-1]
    while R and len(R) - 1 >= db:
        shift = len(R) - 1 - db
        top = R[-1]
        R = [c * lead for c in R]
        for i, b in enumerate(B):
            R[i + shift] = R[i + shift] - top * b
        R = _tp_trim(R)
    return R


def _tp_gcd(A: list, B: list) -> list:
    """Primitive gcd in Q[u][T] via the primitive polynomial remainder
    sequence; only the T-degree structure is meaningful to callers."""
    A = _tp_primitive(A)
    B = _tp_primitive(B)
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _tp_prem(A, B)
        A, B = B, _tp_primitive(R)
    return A


def is_squarefree(P: BiPoly) -> bool:
    """Squarefree as a bivariate rational polynomial."""
    if P.is_zero():
        return False
    coeffs = _tp(P)
    content = _tp_content(coeffs)
    if any(mult > 1 for _, mult in squarefree_decomposition(content)):
        return False
    if P.t_degree == 0:
        return True
    gcd = _tp_gcd(coeffs, _tp(P.derivative_t()))
    return len(gcd) - 1 == 0


def absolute_factor_count(P: BiPoly) -> int:
    """Number of distinct irreducible factors over the algebraic closure.

    Input must be squarefree and involve both variables.  The count is the
    nullity of the exact linear system behind the logarithmic-derivative
    equation; no factor is ever constructed.
    """
    m, n = P.t_degree, P.u_degree
    if m < 1 or n < 1:
        raise ValueError("factor counting needs both variables present")
    if not is_squarefree(P):
        raise ValueError("factor counting needs a squarefree polynomial")
    p_u = P.derivative_u()
    p_t = P.derivative_t()
    t = BiPoly.t()
    u = BiPoly.u()

    columns = []
    for i in range(m):
        for j in range(n + 1):
            mono = t ** i * u ** j
            deriv = (BiPoly.const(j) * t ** i * u ** (j - 1)
                     if j else BiPoly.from_terms({}))
            columns.append(deriv * P - mono * p_u)
    for i in range(m + 1):
        for j in range(n):
            mono = t ** i * u ** j
            deriv = (BiPoly.const(i) * t ** (i - 1) * u ** j
                     if i else BiPoly.from_terms({}))
            columns.append(-(deriv * P) + mono * p_t)

    row_index: dict = {}
    rows: list = []
    width = len(columns)
    for k, contrib in enumerate(columns):
        for key, val in contrib.terms().items():
            if key not in row_index:
                row_index[key] = len(rows)
                rows.append([Fraction(0)] * width)
            rows[row_index[key]][k] = val
    return width - _rank(rows)


def _rank(rows: list) -> int:
    mat = [row[:] for row in rows]
    rank = 0
    for col in range(len(mat[0]) if mat else 0):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                factor = mat[i][col] / lead
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _sympy_expr(P: BiPoly, T, u):
    expr = sympy.Integer(0)
    for (i, j), c in P.terms().items():
        expr += sympy.Rational(c.numerator, c.denominator) * T ** i * u ** j
    return expr


def _square_in_closure(disc, var) -> bool:
    """Is a nonzero univariate rational polynomial a square over the
    algebraic closure, i.e. are all its root multiplicities even?"""
    _, parts = sympy.sqf_list(disc, var)
    return all(mult % 2 == 0 for _, mult in parts)


def _factor_count_closed_form(fac, T, u) -> int:
    """Absolute factor count of one Q-irreducible polynomial, by shape."""
    d_t = sympy.degree(fac, gen=T)
    d_u = sympy.degree(fac, gen=u)
    if d_t == 0 or d_u == 0:
        return max(int(d_t), int(d_u))
    poly = sympy.Poly(fac, T, u)
    if poly.is_homogeneous:
        return int(poly.total_degree())
    if d_t == 1 or d_u == 1:
        return 1
    if d_u == 2:
        a = fac.coeff(u, 2)
        b = fac.coeff(u, 1)
        c = fac.coeff(u, 0)
        return 2 if _square_in_closure(sympy.expand(b * b - 4 * a * c), T) else 1
    if d_t == 2:
        a = fac.coeff(T, 2)
        b = fac.coeff(T, 1)
        c = fac.coeff(T, 0)
        return 2 if _square_in_closure(sympy.expand(b * b - 4 * a * c), u) else 1
    raise OracleUnsupportedError(
        f"no closed form for a factor of bidegree ({d_t}, {d_u})")


def reference_factor_count(P: BiPoly) -> int:
    """Independent count of absolute irreducible factors: rational
    factorization plus per-factor closed forms."""
    T, u = sympy.symbols("T u")
    _, factors = sympy.factor_list(_sympy_expr(P, T, u))
    total = 0
    for fac, mult in factors:
        if mult != 1:
            raise OracleUnsupportedError("repeated factor; count is ambiguous")
        total += _factor_count_closed_form(fac, T, u)
    return total


def reversal(P: BiPoly) -> BiPoly:
    """T^(deg_T P) * P(1/T, u)."""
    m = P.t_degree
    return BiPoly.from_terms({(m - i, j): c for (i, j), c in P.terms().items()})


@dataclass(frozen=True)
class IrreducibilityReport:
    applicable: bool
    squarefree: bool | None
    factor_count: int | None
    reference_count: int | None
    clauses: tuple


def analyze_irreducibility(P: BiPoly, genus: int,
                           pic0: Fraction) -> IrreducibilityReport:
    """The dichotomy for the numerator: a nonzero class mass forces absolute
    irreducibility, a zero class mass forces the factor 1 - T."""
    if genus == 0:
        clause = ClauseResult("absolute irreducibility", True,
                              "not applicable: the genus-zero numerator is 1")
        return IrreducibilityReport(False, None, None, None, (clause,))

    clauses = []
    rev = reversal(P)
    lead = rev.coeff_of_u(genus)
    lead_ok = lead == RationalPoly((Fraction(1), Fraction(-1)))
    clauses.append(ClauseResult(
        "reversal leading coefficient", lead_ok,
        f"u^{genus} coefficient of T^{2 * genus} P(1/T, u) is {lead}"))
    at_one = rev.eval_t(Fraction(1))
    one_ok = at_one == RationalPoly.const(pic0)
    clauses.append(ClauseResult(
        "reversal value at T = 1", one_ok,
        f"got {format_poly(at_one.coeffs, 'u')}, expected {pic0}"))

    squarefree = is_squarefree(P)
    count = absolute_factor_count(P) if squarefree else None
    try:
        reference = reference_factor_count(P) if squarefree else None
    except OracleUnsupportedError:
        reference = None
    if count is not None and reference is not None:
        clauses.append(ClauseResult(
            "factor count cross-check", count == reference,
            f"differential equation: {count}, closed form: {reference}"))

    if pic0 != 0:
        passed = squarefree and count == 1
        clauses.append(ClauseResult(
            "absolutely irreducible", passed,
            f"squarefree: {squarefree}, absolute factor count: {count}"))
    else:
        _, remainder = bivariate_divmod(
            P, BiPoly.const(1) - BiPoly.t())
        divisible = remainder.is_zero()
        clauses.append(ClauseResult(
            "factor 1 - T at zero class mass", divisible,
            "P(1, u) vanishes identically" if divisible
            else "1 - T does not divide P"))
    return IrreducibilityReport(True, squarefree, count, reference,
                                tuple(clauses))
