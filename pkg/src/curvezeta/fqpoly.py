"""Univariate polynomial arithmetic over a finite field.

Polynomials are tuples of int-encoded field elements, constant term first,
with no trailing zeros; the zero polynomial is the empty tuple.  Every
function takes the field as its first argument, so the same code serves the
base field of a curve and the big fields used for point counting.
"""

from __future__ import annotations

from .errors import CapacityError
from .finitefield import DEFAULT_CAPACITY, tonelli_sqrt

X = (0, 1)


def trim(coeffs) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def deg(a) -> int:
    """Degree with deg(0) = -1."""
    return len(a) - 1


def constant(c: int) -> tuple:
    return (c,) if c else ()


def add(F, a, b):
    n = max(len(a), len(b))
    return trim(tuple(F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                      for i in range(n)))


def neg(F, a):
    return tuple(F.neg(c) for c in a)


def sub(F, a, b):
    return add(F, a, neg(F, b))


def scale(F, c, a):
    if c == 0:
        return ()
    return trim(tuple(F.mul(c, x) for x in a))


def mul(F, a, b):
    if not a or not b:
        return ()
    prod = [0] * (len(a) + len(b) - 1)
    if F.degree == 1:
        # prime field: elements are least residues, so integer convolution
        # followed by one reduction pass is exact
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    prod[i + j] += ca * cb
        p = F.p
        return trim([c % p for c in prod])
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    prod[i + j] = F.add(prod[i + j], F.mul(ca, cb))
    return trim(prod)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    quot = [0] * max(0, len(a) - len(b) + 1)
    if F.degree == 1:
        p = F.p
        lead = b[-1]
        inv_lead = 1 if lead == 1 else pow(lead, -1, p)
        nb = len(b)
        while len(a) >= nb:
            c = a[-1] if inv_lead == 1 else (a[-1] * inv_lead) % p
            shift = len(a) - nb
            if c:
                quot[shift] = c
                for j in range(nb - 1):
                    a[shift + j] = (a[shift + j] - c * b[j]) % p
            del a[-1]
        return trim(quot), trim(a)
    inv_lead = F.inv(b[-1])
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        if c:
            quot[shift] = c
            for j in range(len(b)):
                a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]))
        del a[-1]
    return trim(quot), trim(a)


def mod(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F, a):
    if not a or a[-1] == 1:
        return tuple(a)
    return scale(F, F.inv(a[-1]), a)


def gcd(F, a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def xgcd(F, a, b):
    """(g, s, t) with g = s*a + t*b and g monic (or zero)."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if r0 and r0[-1] != 1:
        c = F.inv(r0[-1])
        r0, s0, t0 = scale(F, c, r0), scale(F, c, s0), scale(F, c, t0)
    return r0, s0, t0


def pow_mod(F, a, e, m):
    r = (1,)
    a = mod(F, a, m)
    while e:
        if e & 1:
            r = mod(F, mul(F, r, a), m)
        a = mod(F, mul(F, a, a), m)
        e >>= 1
    return r


def evaluate(F, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def derivative(F, a):
    # The scalar i lands in the prime subfield, whose elements are the ints
    # 0..p-1 under the field encoding.
    return trim(tuple(F.mul(i % F.p, a[i]) for i in range(1, len(a))))


def map_coeffs(phi, a):
    return trim(tuple(phi(c) for c in a))


def encode(F, a) -> int:
    """Base-q integer key of a coefficient tuple (little-endian)."""
    t = 0
    for c in reversed(a):
        t = t * F.order + c
    return t


def decode_monic(F, value: int, degree: int) -> tuple:
    cs = []
    for _ in range(degree):
        cs.append(value % F.order)
        value //= F.order
    cs.append(1)
    return tuple(cs)


def is_irreducible(F, poly) -> bool:
    """Certificate: poly | x^(q^d) - x, and gcd(poly, x^(q^j) - x) = 1 for
    every proper divisor j of d."""
    d = deg(poly)
    if d < 1:
        return False
    q = F.order
    x_red = mod(F, X, poly)
    t = x_red
    for j in range(1, d + 1):
        t = pow_mod(F, t, q, poly)
        if j < d and d % j == 0:
            if deg(gcd(F, sub(F, t, X), poly)) != 0:
                return False
    return t == x_red


def monic_irreducibles(F, degree: int, *, capacity: int = DEFAULT_CAPACITY) -> tuple:
    """All monic irreducibles of the given degree, sorted by coefficient key.

    Candidates of a degree are sieved by the products of lower-degree
    irreducibles, and each survivor is then certified with is_irreducible.
    Lists are cached on the field, so repeated calls are cheap.
    """
    if degree < 1:
        raise ValueError("irreducible polynomials have degree >= 1")
    q = F.order
    if q ** degree > capacity:
        raise CapacityError(
            f"enumerating degree-{degree} polynomials over order-{q} field "
            f"needs {q ** degree} candidates, above the work bound {capacity}")
    for d in range(1, degree + 1):
        if d in F._irreducibles:
            continue
        if d == 1:
            polys = tuple((F.neg(r), 1) for r in range(q))
            F._irreducibles[1] = tuple(sorted(polys, key=lambda t: encode(F, t)))
            continue
        composite = bytearray(q ** d)
        for a in range(1, d // 2 + 1):
            for p_low in F._irreducibles[a]:
                for mval in range(q ** (d - a)):
                    other = decode_monic(F, mval, d - a)
                    prod = mul(F, p_low, other)
                    composite[encode(F, prod[:-1])] = 1
        found = []
        for value in range(q ** d):
            if composite[value]:
                continue
            poly = decode_monic(F, value, d)
            if is_irreducible(F, poly):
                found.append(poly)
        F._irreducibles[d] = tuple(found)
    return F._irreducibles[degree]


class QuotientRing:
    """F_q[x] / (u) for monic u; a field whenever u is irreducible.

    Shares the duck-typed interface of FiniteField that the square-root
    helpers rely on: order, one, zero, elements(), mul, pow, inv.
    """

    def __init__(self, field, modulus):
        self.field = field
        self.modulus = tuple(modulus)
        self.d = deg(self.modulus)
        self.order = field.order ** self.d
        self.zero = ()
        self.one = (1,)

    def reduce(self, a):
        return mod(self.field, a, self.modulus)

    def add(self, a, b):
        return add(self.field, a, b)

    def sub(self, a, b):
        return sub(self.field, a, b)

    def neg(self, a):
        return neg(self.field, a)

    def mul(self, a, b):
        return mod(self.field, mul(self.field, a, b), self.modulus)

    def inv(self, a):
        g, s, _ = xgcd(self.field, a, self.modulus)
        if deg(g) != 0:
            raise ZeroDivisionError("element is not invertible in the quotient ring")
        return self.reduce(scale(self.field, self.field.inv(g[0]), s))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        return pow_mod(self.field, a, e, self.modulus)

    def elements(self):
        q = self.field.order
        for value in range(self.order):
            cs = []
            v = value
            for _ in range(self.d):
                cs.append(v % q)
                v //= q
            yield trim(cs)

    def sqrt(self, a):
        """A square root in the quotient field, or None (odd order only)."""
        if not a:
            return ()
        return tonelli_sqrt(self, a)


def artin_schreier_solve(ring: QuotientRing, w):
    """One solution z of z^2 + z = w in a characteristic-2 quotient field.

    The map z -> z^2 + z is linear over F_2, so this is Gaussian elimination
    on bit rows.  Returns None when no solution exists (trace 1 case).
    """
    F = ring.field
    assert F.p == 2
    k, d = F.degree, ring.d
    n = k * d
    basis = []
    for i in range(d):
        for j in range(k):
            e = tuple(([0] * i) + [1 << j])
            basis.append(trim(e))

    def to_bits(a):
        bits = 0
        for i in range(d):
            c = a[i] if i < len(a) else 0
            bits |= c << (i * k)
        return bits

    rows = []
    for idx, e in enumerate(basis):
        img = ring.add(ring.mul(e, e), e)
        rows.append((to_bits(img), 1 << idx))
    target = to_bits(ring.reduce(w))
    # eliminate
    sol_mask = 0
    for bit in range(n):
        pivot = None
        for r, (img, pre) in enumerate(rows):
            if img >> bit & 1:
                pivot = r
                break
        if pivot is None:
            continue
        pimg, ppre = rows.pop(pivot)
        if target >> bit & 1:
            target ^= pimg
            sol_mask ^= ppre
        rows = [(img ^ pimg, pre ^ ppre) if img >> bit & 1 else (img, pre)
                for img, pre in rows]
    if target:
        return None
    coeffs = [0] * d
    for idx in range(n):
        if sol_mask >> idx & 1:
            i, j = divmod(idx, k)
            coeffs[i] ^= 1 << j
    return trim(coeffs)
