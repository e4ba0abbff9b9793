"""Shared fixtures and independent oracles for the test suite.

The oracle helpers here deliberately avoid the library under test: point
counts come from double loops over small prime fields, irreducible-polynomial
tallies from the Mobius formula, and extension fields (where a test needs
one) from throwaway coefficient-list arithmetic written inline.
"""

import random

import pytest

from curvezeta import BiPoly, extension_field, parse_curve_spec, validate_model


def brute_affine_count(p, f, h):
    """Solutions of y^2 + h(x) y = f(x) over the prime field F_p, counted by
    the obvious double loop.  f and h are integer coefficient tuples,
    constant term first."""
    def ev(coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        return acc

    total = 0
    for x in range(p):
        fx = ev(f, x)
        hx = ev(h, x)
        for y in range(p):
            if (y * y + hx * y - fx) % p == 0:
                total += 1
    return total


def brute_point_count(p, f, h=(0,)):
    """Projective count: affine solutions plus the one point at infinity of
    an odd-degree model."""
    return brute_affine_count(p, f, h) + 1


def mobius(n):
    count = 0
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            count += 1
        d += 1
    if m > 1:
        count += 1
    return (-1) ** count


def irreducible_tally(q, d):
    """Number of monic irreducible degree-d polynomials over F_q, by the
    Mobius count (1/d) sum_{e | d} mu(e) q^(d/e)."""
    total = sum(mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d


ELLIPTIC_F2 = [
    f"p=2; f=x^3+{a}*x+{b}; h={h}"
    for h in ("1", "x", "x+1")
    for a in (0, 1)
    for b in (0, 1)
]

ELLIPTIC_F3 = [
    f"p=3; f=x^3+{a}*x+{b}"
    for a in (1, 2)
    for b in (0, 1, 2)
]

ELLIPTIC_F5 = [
    f"p=5; f=x^3+{a}*x+{b}"
    for a in range(5)
    for b in range(5)
    if (4 * a ** 3 + 27 * b ** 2) % 5 != 0
]

GENUS2 = [
    "p=3; f=x^5+1",
    "p=3; f=x^5+x",
    "p=3; f=x^5+2*x+1",
    "p=5; f=x^5+x+1",
    "p=5; f=x^5+2*x+1",
    "p=5; f=x^5+x^2+1",
    "p=2; f=x^5; h=1",
]


def _nonsingular(spec_text):
    from curvezeta.errors import ModelShapeError, SingularCurveError
    spec = parse_curve_spec(spec_text)
    field = extension_field(spec.p, spec.k)
    try:
        validate_model(field, spec.f, spec.h)
    except (ModelShapeError, SingularCurveError):
        return False
    return True


def corpus_specs():
    """Every curve in the standing test corpus, as spec strings.

    The characteristic-2 family is filtered down to its nonsingular members;
    the odd-characteristic lists are nonsingular by construction.
    """
    specs = [s for s in ELLIPTIC_F2 if _nonsingular(s)]
    specs += ELLIPTIC_F3
    specs += ELLIPTIC_F5
    specs += GENUS2
    return specs


@pytest.fixture(scope="session")
def corpus():
    return corpus_specs()


@pytest.fixture
def worked_elliptic():
    """The standing worked example: y^2 = x^3 + x over F_3."""
    spec = parse_curve_spec("p=3; f=x^3+x")
    field = extension_field(3)
    return validate_model(field, spec.f, spec.h)


def _factor_pool():
    T, U = BiPoly.t(), BiPoly.u()
    # Q-irreducible polynomials with known absolute factor counts;
    # (polynomial, absolute count, total degree)
    return [
        (1 - T, 1, 1),
        (1 + T + U, 1, 1),
        (1 - U * T, 1, 2),
        (1 + U * T, 1, 2),
        (T + U ** 2, 1, 2),
        (T ** 2 + U, 1, 2),
        (U ** 2 - 5 * T, 1, 2),
        (T ** 2 + U * T + 1, 1, 2),
        (T ** 2 - 2 * U ** 2, 2, 2),
        (T ** 2 + U ** 2, 2, 2),
        (U ** 2 + 2 * T ** 2, 2, 2),
    ]


FACTOR_POOL = _factor_pool()


def random_products(seed, how_many, max_total_degree=6):
    """Random squarefree products of distinct FACTOR_POOL entries, paired
    with their absolute factor count, which is known by construction."""
    rng = random.Random(seed)
    out = []
    while len(out) < how_many:
        picks = rng.sample(FACTOR_POOL, rng.randint(2, 3))
        if sum(d for _, _, d in picks) > max_total_degree:
            continue
        product = BiPoly.const(1)
        truth = 0
        for poly, count, _ in picks:
            product = product * poly
            truth += count
        if product.t_degree < 1 or product.u_degree < 1:
            continue
        out.append((product, truth))
    return out
