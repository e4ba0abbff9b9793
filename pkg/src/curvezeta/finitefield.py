"""Finite fields F_(p^k) with a deterministic, reproducible construction.

Elements are plain ints in [0, q).  The int is the base-p encoding of the
coefficient vector of the element written in the power basis of the modulus:
value = sum(c_i * p**i) with c_0 the constant coefficient.  The prime
subfield therefore embeds as the ints 0..p-1, and iterating range(q) walks
the field in a canonical order.

For k > 1 the chosen modulus is the monic irreducible polynomial of degree k
whose non-leading coefficient vector has the smallest base-p encoding, so a
given (p, k) always produces the same field with the same element labels.
Multiplication, inversion and powering then go through discrete-log tables
built once at construction time.
"""

from __future__ import annotations

from array import array

from .errors import CapacityError, ModelShapeError

DEFAULT_CAPACITY = 1_000_000

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, by trial division (n stays small here)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """Arithmetic for F_(p^k) on int-encoded elements.

    Do not mutate instances after construction; the lazy caches hanging off
    them (irreducible lists, embeddings) only ever grow.
    """

    def __init__(self, p: int, degree: int = 1, modulus: tuple[int, ...] | None = None,
                 *, capacity: int = DEFAULT_CAPACITY):
        if not is_prime(p):
            raise ModelShapeError(f"characteristic {p} is not prime")
        if degree < 1:
            raise ModelShapeError(f"extension degree must be positive, got {degree}")
        order = p ** degree
        if order > capacity:
            raise CapacityError(
                f"field order {p}^{degree} = {order} exceeds the work bound {capacity}")
        self.p = p
        self.degree = degree
        self.order = order
        self.zero = 0
        self.one = 1
        if degree == 1:
            self.modulus = (0, 1) if modulus is None else tuple(modulus)
            if self.modulus != (0, 1):
                raise ModelShapeError("degree-1 field takes the modulus x only")
            self._exp = self._log = None
        else:
            if modulus is None:
                modulus = self._smallest_irreducible()
            self.modulus = tuple(c % p for c in modulus[:-1]) + (1,)
            if len(self.modulus) != degree + 1:
                raise ModelShapeError("modulus degree does not match the extension degree")
            if not self._is_irreducible_mod_p(self.modulus):
                raise ModelShapeError("modulus polynomial is reducible")
            self._build_log_tables()
        self._irreducibles: dict[int, tuple] = {}
        self._embeddings: dict = {}

    # -- construction helpers ------------------------------------------------

    def _smallest_irreducible(self) -> tuple[int, ...]:
        p, k = self.p, self.degree
        for value in range(p ** k):
            coeffs = _digits(value, p, k) + (1,)
            if self._is_irreducible_mod_p(coeffs):
                return coeffs
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _is_irreducible_mod_p(self, coeffs: tuple[int, ...]) -> bool:
        # x^(p^j) mod coeffs chain: irreducible iff x^(p^k) == x and the
        # intermediate gcds at proper divisors j of k are trivial.
        p, k = self.p, len(coeffs) - 1
        if k < 1 or coeffs[-1] != 1:
            return False
        x_reduced = (0, 1) if k > 1 else _pp_trim(((-coeffs[0]) % p,))
        t = x_reduced
        for j in range(1, k + 1):
            t = _pp_powmod(t, p, coeffs, p)
            if j < k and k % j == 0:
                if _pp_deg(_pp_gcd(_pp_sub(t, (0, 1), p), coeffs, p)) != 0:
                    return False
        return t == x_reduced

    def _build_log_tables(self):
        q = self.order
        factors = prime_factors(q - 1)
        gen = None
        for cand in range(2, q):
            if all(self._raw_pow(cand, (q - 1) // f) != 1 for f in factors):
                gen = cand
                break
        assert gen is not None
        exp = array('q', [1] * (q - 1))
        log = array('q', [-1] * q)
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._raw_mul(acc, gen)
        self.generator = gen
        self._exp = exp
        self._log = log

    def _raw_mul(self, a: int, b: int) -> int:
        """Table-free product, used while the tables are being built."""
        p, k = self.p, self.degree
        da = _digits(a, p, k)
        db = _digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        mod = self.modulus
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return _undigits(prod[:k], p)

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.degree == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        t, scale = 0, 1
        while a or b:
            t += ((a + b) % p) * scale
            a //= p
            b //= p
            scale *= p
        return t

    def neg(self, a: int) -> int:
        p = self.p
        if self.degree == 1:
            return (-a) % p
        if p == 2:
            return a
        t, scale = 0, 1
        while a:
            t += (-a % p) * scale
            a //= p
            scale *= p
        return t

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.degree == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        n = self.order - 1
        return self._exp[(self._log[a] + self._log[b]) % n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.degree == 1:
            return pow(a, self.p - 2, self.p)
        n = self.order - 1
        return self._exp[(n - self._log[a]) % n]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        n = self.order - 1
        if self.degree == 1:
            return pow(a, e % n if n else 0, self.p)
        return self._exp[(self._log[a] * e) % n]

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1

    def sqrt(self, a: int) -> int | None:
        """A square root of a, or None when a is a non-residue (odd q)."""
        if a == 0:
            return 0
        if self.p == 2:
            # Squaring is a bijection; invert it by q/2 more squarings.
            return self.pow(a, self.order // 2)
        return tonelli_sqrt(self, a)

    def absolute_trace(self, a: int) -> int:
        """Trace down to F_2 (characteristic 2 only), as the int 0 or 1."""
        if self.p != 2:
            raise ValueError("absolute_trace is only provided in characteristic 2")
        acc, t = a, a
        for _ in range(self.degree - 1):
            t = self.mul(t, t)
            acc = self.add(acc, t)
        return acc

    # -- encodings and iteration ---------------------------------------------

    def elements(self):
        return range(self.order)

    def coeff_vector(self, a: int) -> tuple[int, ...]:
        return _digits(a, self.p, self.degree)

    def from_coeffs(self, coeffs) -> int:
        p, k = self.p, self.degree
        cs = [c % p for c in coeffs]
        if len(cs) > k and any(cs[k:]):
            raise ValueError("coefficient vector longer than the field degree")
        return _undigits(cs[:k], p)

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.degree, self.modulus)
                == (other.p, other.degree, other.modulus))

    def __hash__(self):
        return hash((self.p, self.degree, self.modulus))

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree})"


def tonelli_sqrt(field, a: int) -> int | None:
    """Tonelli-Shanks square root over any odd-order field-like object."""
    q = field.order
    if field.pow(a, (q - 1) // 2) != field.one:
        return None
    if q % 4 == 3:
        return field.pow(a, (q + 1) // 4)
    s, t = 0, q - 1
    while t % 2 == 0:
        t //= 2
        s += 1
    z = None
    for cand in field.elements():
        if cand == field.zero:
            continue
        if field.pow(cand, (q - 1) // 2) != field.one:
            z = cand
            break
    c = field.pow(z, t)
    r = field.pow(a, (t + 1) // 2)
    u = field.pow(a, t)
    m = s
    while u != field.one:
        i, v = 0, u
        while v != field.one:
            v = field.mul(v, v)
            i += 1
        b = field.pow(c, 1 << (m - i - 1))
        r = field.mul(r, b)
        c = field.mul(b, b)
        u = field.mul(u, c)
        m = i
    return r


def _digits(value: int, p: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        out.append(value % p)
        value //= p
    return tuple(out)


def _undigits(coeffs, p: int) -> int:
    t = 0
    for c in reversed(list(coeffs)):
        t = t * p + c
    return t


# Small helpers on coefficient lists over the prime field, used only for
# modulus selection before any field object exists.

def _pp_trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return tuple(a)


def _pp_deg(a):
    return len(a) - 1


def _pp_sub(a, b, p):
    n = max(len(a), len(b))
    return _pp_trim(tuple(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                          for i in range(n)))


def _pp_mulrem(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    k = len(mod) - 1
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(k):
                prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
    return _pp_trim(prod[:k])


def _pp_powmod(a, e, mod, p):
    r = (1,)
    while e:
        if e & 1:
            r = _pp_mulrem(r, a, mod, p)
        a = _pp_mulrem(a, a, mod, p)
        e >>= 1
    return r


def _pp_mod(a, b, p):
    a = list(_pp_trim(a))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % p
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
        a = list(_pp_trim(a))
    return _pp_trim(a)


def _pp_gcd(a, b, p):
    a, b = _pp_trim(a), _pp_trim(b)
    while b:
        a, b = b, _pp_mod(a, b, p)
    return a


_FIELD_CACHE: dict[tuple[int, int], FiniteField] = {}


def extension_field(p: int, degree: int = 1, *, capacity: int = DEFAULT_CAPACITY) -> FiniteField:
    """The canonical F_(p^degree); construction is cached per (p, degree).

    The capacity bound is enforced on every call, cached or not, so a caller
    with a tight work budget is refused consistently.
    """
    if not is_prime(p):
        raise ModelShapeError(f"characteristic {p} is not prime")
    if degree >= 1 and p ** degree > capacity:
        raise CapacityError(
            f"field order {p}^{degree} exceeds the work bound {capacity}")
    key = (p, degree)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FiniteField(p, degree, capacity=capacity)
        _FIELD_CACHE[key] = field
    return field
