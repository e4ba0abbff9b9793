"""Exact rational polynomial arithmetic.

Two representations, both over fractions.Fraction:

  RationalPoly -- dense univariate, coefficient tuple, constant term first.
  BiPoly       -- dense bivariate, rows[i][j] = coefficient of T^i * u^j,
                  rectangular with trailing zero rows and columns trimmed.

Everything is immutable and hashable; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotDivisibleError


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class RationalPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def const(cls, c) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RationalPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        prod = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return RationalPoly(prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = RationalPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dcs = other.coeffs
        while len(rem) >= len(dcs):
            c = rem[-1] / dcs[-1]
            shift = len(rem) - len(dcs)
            if c:
                quot[shift] = c
                for j in range(len(dcs)):
                    rem[shift + j] -= c * dcs[j]
            rem.pop()
        return RationalPoly(quot), RationalPoly(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def evaluate(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * _frac(x) + c
        return acc

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(i * self.coeffs[i]
                                  for i in range(1, len(self.coeffs))))

    def monic(self) -> "RationalPoly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        lead = self.coeffs[-1]
        return RationalPoly(tuple(c / lead for c in self.coeffs))

    def shift(self, n: int) -> "RationalPoly":
        """Multiply by x^n."""
        if not self.coeffs:
            return self
        return RationalPoly((Fraction(0),) * n + self.coeffs)

    def __str__(self):
        return format_poly(self.coeffs, "T")

    def __repr__(self):
        return f"RationalPoly({self})"


def _coerce(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalPoly.const(x)
    raise TypeError(f"cannot treat {x!r} as a rational polynomial")


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(a: RationalPoly) -> list[tuple[RationalPoly, int]]:
    """Yun's algorithm: [(factor_i, i)] with a = lead * prod(factor_i^i)."""
    out = []
    a = a.monic()
    if a.degree < 1:
        return out
    g = poly_gcd(a, a.derivative())
    b, _ = divmod(a, g)
    c, _ = divmod(a.derivative(), g)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        y = poly_gcd(b, d)
        if y.degree > 0:
            out.append((y, i))
        b, _ = divmod(b, y)
        c, _ = divmod(d, y)
        d = c - b.derivative()
        i += 1
    return out


class BiPoly:
    """Dense bivariate polynomial; rows[i][j] is the T^i u^j coefficient."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        grid = [[_frac(c) for c in row] for row in rows]
        height = len(grid)
        while height and not any(grid[height - 1]):
            height -= 1
        grid = grid[:height]
        width = max((len(r) for r in grid), default=0)
        while width and not any(r[width - 1] if width <= len(r) else 0 for r in grid):
            width -= 1
        norm = tuple(tuple((r[j] if j < len(r) else Fraction(0)) for j in range(width))
                     for r in grid)
        object.__setattr__(self, "rows", norm)

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls(((c,),))

    @classmethod
    def t(cls) -> "BiPoly":
        return cls(((0,), (1,)))

    @classmethod
    def u(cls) -> "BiPoly":
        return cls(((0, 1),))

    @classmethod
    def from_terms(cls, terms: dict) -> "BiPoly":
        if not terms:
            return cls()
        h = max(i for i, _ in terms) + 1
        w = max(j for _, j in terms) + 1
        grid = [[Fraction(0)] * w for _ in range(h)]
        for (i, j), c in terms.items():
            grid[i][j] = _frac(c)
        return cls(grid)

    @classmethod
    def from_u_poly(cls, poly: RationalPoly) -> "BiPoly":
        return cls((poly.coeffs,))

    @classmethod
    def from_t_poly(cls, poly: RationalPoly) -> "BiPoly":
        return cls(tuple((c,) for c in poly.coeffs))

    def terms(self) -> dict:
        return {(i, j): c for i, row in enumerate(self.rows)
                for j, c in enumerate(row) if c}

    @property
    def t_degree(self) -> int:
        return len(self.rows) - 1

    @property
    def u_degree(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else -1

    def is_zero(self) -> bool:
        return not self.rows

    def __bool__(self):
        return bool(self.rows)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.rows == other.rows
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def coeff(self, i: int, j: int) -> Fraction:
        if 0 <= i < len(self.rows) and 0 <= j < len(self.rows[i]):
            return self.rows[i][j]
        return Fraction(0)

    def coeff_of_t(self, i: int) -> RationalPoly:
        """The T^i coefficient, as a polynomial in u."""
        if 0 <= i < len(self.rows):
            return RationalPoly(self.rows[i])
        return RationalPoly()

    def coeff_of_u(self, j: int) -> RationalPoly:
        """The u^j coefficient, as a polynomial in T."""
        return RationalPoly(tuple(self.coeff(i, j) for i in range(len(self.rows))))

    def __add__(self, other):
        other = _coerce_bi(other)
        h = max(len(self.rows), len(other.rows))
        return BiPoly(tuple(
            tuple(self.coeff(i, j) + other.coeff(i, j)
                  for j in range(max(self.u_degree, other.u_degree) + 1))
            for i in range(h)))

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(tuple(tuple(-c for c in row) for row in self.rows))

    def __sub__(self, other):
        return self + (-_coerce_bi(other))

    def __rsub__(self, other):
        return _coerce_bi(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly(tuple(tuple(c * other for c in row) for row in self.rows))
        if isinstance(other, RationalPoly):
            raise TypeError("ambiguous variable; lift the univariate factor first")
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiPoly()
        h = len(self.rows) + len(other.rows) - 1
        w = len(self.rows[0]) + len(other.rows[0]) - 1
        grid = [[Fraction(0)] * w for _ in range(h)]
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if a:
                    for k, orow in enumerate(other.rows):
                        for l, b in enumerate(orow):
                            if b:
                                grid[i + k][j + l] += a * b
        return BiPoly(grid)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def eval_u(self, value) -> RationalPoly:
        """Substitute u = value, leaving a polynomial in T."""
        v = _frac(value)
        return RationalPoly(tuple(RationalPoly(row).evaluate(v) for row in self.rows))

    def eval_t(self, value) -> RationalPoly:
        """Substitute T = value, leaving a polynomial in u."""
        v = _frac(value)
        out = RationalPoly()
        power = Fraction(1)
        for row in self.rows:
            out = out + RationalPoly(row) * power
            power *= v
        return out

    def derivative_t(self) -> "BiPoly":
        return BiPoly(tuple(tuple(i * c for c in self.rows[i])
                            for i in range(1, len(self.rows))))

    def derivative_u(self) -> "BiPoly":
        return BiPoly(tuple(tuple(j * row[j] for j in range(1, len(row)))
                            for row in self.rows))

    def __str__(self):
        if not self.rows:
            return "0"
        parts = []
        for i, row in enumerate(self.rows):
            upoly = format_poly(row, "u")
            if upoly == "0":
                continue
            if i == 0:
                parts.append(upoly)
            else:
                tpow = "T" if i == 1 else f"T^{i}"
                coeff = "" if upoly == "1" else (
                    f"({upoly})*" if any(s in upoly for s in " +-") else f"{upoly}*")
                parts.append(f"{coeff}{tpow}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"BiPoly({self})"


def _coerce_bi(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return BiPoly.const(x)
    raise TypeError(f"cannot treat {x!r} as a bivariate polynomial")


def bivariate_divmod(num: BiPoly, den: BiPoly) -> tuple[BiPoly, BiPoly]:
    """Single-divisor multivariate division, lex order with T before u.

    num = quotient * den + remainder, and no term of the remainder is
    divisible by the leading term of den.  The remainder is zero exactly
    when den divides num.
    """
    if den.is_zero():
        raise ZeroDivisionError("bivariate division by zero")
    dterms = den.terms()
    lt_den = max(dterms)
    lc_den = dterms[lt_den]
    work = num.terms()
    quot: dict = {}
    rem: dict = {}
    while work:
        lt = max(work)
        if lt[0] >= lt_den[0] and lt[1] >= lt_den[1]:
            shift = (lt[0] - lt_den[0], lt[1] - lt_den[1])
            c = work[lt] / lc_den
            quot[shift] = quot.get(shift, Fraction(0)) + c
            for (i, j), d in dterms.items():
                key = (i + shift[0], j + shift[1])
                val = work.get(key, Fraction(0)) - c * d
                if val:
                    work[key] = val
                else:
                    work.pop(key, None)
        else:
            rem[lt] = work.pop(lt)
    return BiPoly.from_terms(quot), BiPoly.from_terms(rem)


def bivariate_exact_divide(num: BiPoly, den: BiPoly) -> BiPoly:
    """num / den when the division is exact; otherwise NotDivisibleError
    carrying the nonzero remainder."""
    quot, rem = bivariate_divmod(num, den)
    if not rem.is_zero():
        raise NotDivisibleError(
            f"exact division failed; remainder {rem}", remainder=rem)
    return quot


def series_expand_rational(num: RationalPoly, den_factors, order: int) -> list[Fraction]:
    """First order+1 coefficients of num / prod(den_factors) as a power series.

    Every factor must have a nonzero constant term (the series otherwise
    does not exist); factors are arbitrary polynomials, e.g. 1 - 3T.
    """
    if order < 0:
        raise ValueError("series order must be nonnegative")
    coeffs = [num.coeff(i) for i in range(order + 1)]
    for factor in den_factors:
        f = _coerce(factor)
        if f.coeff(0) == 0:
            raise ZeroDivisionError(
                f"denominator factor {f} has zero constant term")
        d0 = f.coeff(0)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            acc = coeffs[i]
            for j in range(1, min(i, f.degree) + 1):
                acc -= f.coeff(j) * out[i - j]
            out[i] = acc / d0
        coeffs = out
    return coeffs


def format_poly(coeffs, var: str) -> str:
    """Human-readable polynomial text, constant term first in the input."""
    parts = []
    for i, c in enumerate(coeffs):
        c = _frac(c)
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        power = var if i == 1 else f"{var}^{i}"
        if c == 1:
            parts.append(power)
        elif c == -1:
            parts.append(f"-{power}")
        else:
            parts.append(f"{c}*{power}")
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            text += f" - {part[1:]}"
        else:
            text += f" + {part}"
    return text
