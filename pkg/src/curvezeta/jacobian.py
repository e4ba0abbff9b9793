"""Divisor class arithmetic in Mumford coordinates, and the section strata.

A degree-zero class is stored as a reduced Mumford pair (U, V): U monic,
deg V < deg U <= g, U | V^2 + hV - f.  For odd-degree models that reduced
representative is unique, so pairs double as dictionary keys.

A degree-n class (n >= 0) is keyed by (U, V, n), standing for the class of
D where (U, V) represents [D - n*infinity].
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fqpoly as fp
from .curve import HyperellipticModel, Place, PlaceTable
from .errors import ConsistencyError, StratificationError
from .finitefield import DEFAULT_CAPACITY

IDENTITY = ((1,), ())


def negate(model: HyperellipticModel, rep):
    u, v = rep
    F = model.field
    return (u, fp.mod(F, fp.neg(F, fp.add(F, v, model.h)), u))


def _reduce(model: HyperellipticModel, u, v):
    F = model.field
    g = model.genus
    while fp.deg(u) > g:
        num = fp.sub(F, model.f, fp.add(F, fp.mul(F, v, model.h), fp.mul(F, v, v)))
        u_next, rem = fp.divmod_(F, num, u)
        assert not rem, "reduction step must divide exactly"
        u_next = fp.monic(F, u_next)
        v = fp.mod(F, fp.neg(F, fp.add(F, model.h, v)), u_next)
        u = u_next
    return (fp.monic(F, u), v)


def add(model: HyperellipticModel, rep1, rep2):
    """Cantor composition followed by reduction."""
    F = model.field
    u1, v1 = rep1
    u2, v2 = rep2
    d1, e1, e2 = fp.xgcd(F, u1, u2)
    step = fp.add(F, fp.add(F, v1, v2), model.h)
    d, c1, c2 = fp.xgcd(F, d1, step)
    s1 = fp.mul(F, c1, e1)
    s2 = fp.mul(F, c1, e2)
    s3 = c2
    u_comp, rem = fp.divmod_(F, fp.mul(F, u1, u2), fp.mul(F, d, d))
    assert not rem
    acc = fp.add(F, fp.mul(F, fp.mul(F, s1, u1), v2),
                 fp.mul(F, fp.mul(F, s2, u2), v1))
    acc = fp.add(F, acc, fp.mul(F, s3, fp.add(F, fp.mul(F, v1, v2), model.f)))
    v_comp, rem = fp.divmod_(F, acc, d)
    assert not rem
    v_comp = fp.mod(F, v_comp, u_comp)
    return _reduce(model, fp.monic(F, u_comp), v_comp)


def scalar(model: HyperellipticModel, rep, n: int):
    if n < 0:
        return scalar(model, negate(model, rep), -n)
    acc = IDENTITY
    base = rep
    while n:
        if n & 1:
            acc = add(model, acc, base)
        base = add(model, base, base)
        n >>= 1
    return acc


def from_place(model: HyperellipticModel, place: Place):
    """The class [P - deg(P) * infinity] of one place, reduced.

    Infinite place: zero by definition.  Inert place: the whole fiber over
    u is the divisor of the function u(x), hence principal, hence zero.
    """
    if place.kind in ("infinite", "inert"):
        return IDENTITY
    return _reduce(model, place.u, place.v)


def divisor_class(model: HyperellipticModel, parts):
    """Class data of an effective divisor given as (place, multiplicity)
    pairs: returns ((U, V), degree)."""
    acc = IDENTITY
    degree = 0
    for place, mult in parts:
        image = from_place(model, place)
        degree += place.degree * mult
        for _ in range(mult):
            acc = add(model, acc, image)
    return acc, degree


def enumerate_jacobian(model: HyperellipticModel, *,
                       capacity: int = DEFAULT_CAPACITY) -> tuple:
    """Every reduced Mumford pair, by brute force over (U, V).

    Deliberately exhaustive: this is the route that does not go through the
    L-polynomial, so its length can be compared with L(1).
    """
    F = model.field
    g = model.genus
    q = F.order
    if q ** (2 * g) > capacity:
        from .errors import CapacityError
        raise CapacityError(
            f"jacobian enumeration needs {q ** (2 * g)} candidate pairs, "
            f"above the work bound {capacity}")
    out = [IDENTITY]
    for d in range(1, g + 1):
        for uval in range(q ** d):
            u = fp.decode_monic(F, uval, d)
            for vval in range(q ** d):
                v = []
                t = vval
                for _ in range(d):
                    v.append(t % q)
                    t //= q
                v = fp.trim(v)
                probe = fp.add(F, fp.mul(F, v, v),
                               fp.sub(F, fp.mul(F, v, model.h), model.f))
                if not fp.mod(F, probe, u):
                    out.append((u, tuple(v)))
    return tuple(sorted(out, key=lambda rep: (fp.deg(rep[0]),
                                              fp.encode(F, rep[0]),
                                              fp.encode(F, rep[1]))))


def effective_divisors(place_table: PlaceTable, n: int):
    """Yield every effective divisor of degree n as a tuple of
    (place, multiplicity) pairs, places in table order."""
    places = [p for p in place_table.all_places() if p.degree <= n]

    def rec(idx, remaining):
        if remaining == 0:
            yield ()
            return
        while idx < len(places) and places[idx].degree > remaining:
            idx += 1
        if idx >= len(places):
            return
        place = places[idx]
        top = remaining // place.degree
        for mult in range(top, -1, -1):
            for rest in rec(idx + 1, remaining - mult * place.degree):
                yield ((place, mult),) + rest if mult else rest

    yield from rec(0, n)


def section_count_to_h0(q: int, size: int) -> int:
    """Invert size = (q^nu - 1)/(q - 1); raises when no nu fits."""
    val, nu = 1, 1
    while val < size:
        val = val * q + 1
        nu += 1
    if val != size:
        raise StratificationError(
            f"bucket of size {size} is not (q^nu - 1)/(q - 1) for any nu")
    return nu


@dataclass(frozen=True)
class StratumTable:
    """b[n][nu] = number of degree-n classes with nu independent sections,
    for 0 <= n <= 2g-2 and 0 <= nu <= g."""
    genus: int
    q: int
    class_count: int
    rows: tuple[tuple[int, ...], ...]

    def b(self, n: int, nu: int) -> int:
        if 0 <= n < len(self.rows) and 0 <= nu < len(self.rows[n]):
            return self.rows[n][nu]
        return 0


def strata_table(model: HyperellipticModel, place_table: PlaceTable,
                 class_count: int) -> StratumTable:
    """Bucket effective divisors of each degree n <= 2g-2 by divisor class.

    Every bucket size must be a projective-space count (q^nu - 1)/(q - 1),
    which self-certifies the number of sections of the class; the strata
    are then checked against the zero-section, duality and Clifford shape
    constraints before the table is returned.
    """
    g = model.genus
    q = model.field.order
    top = 2 * g - 2
    if top > 0 and place_table.max_degree < top:
        raise ValueError(
            f"strata need places up to degree {top}, table has "
            f"{place_table.max_degree}")
    rows = []
    bucket_maps = []
    for n in range(top + 1):
        buckets: dict = {}
        for divisor in effective_divisors(place_table, n):
            rep, degree = divisor_class(model, divisor)
            assert degree == n
            buckets[rep] = buckets.get(rep, 0) + 1
        row = [0] * (g + 1)
        for rep, size in buckets.items():
            nu = section_count_to_h0(q, size)
            if nu > g:
                raise StratificationError(
                    f"class {rep} of degree {n} shows {nu} sections, above the genus")
            row[nu] += 1
        missing = class_count - sum(row)
        if missing < 0:
            raise StratificationError(
                f"degree {n} has {sum(row)} effective classes but only "
                f"{class_count} classes exist")
        row[0] = missing
        rows.append(tuple(row))
        bucket_maps.append(buckets)
    table = StratumTable(genus=g, q=q, class_count=class_count,
                         rows=tuple(rows))
    _check_table_shape(table)
    return table


def _check_table_shape(table: StratumTable):
    g = table.genus
    if g < 1:
        return
    if table.b(0, 1) != 1:
        raise StratificationError(
            f"zero-section row must show exactly the trivial class: "
            f"b[0][1] = {table.b(0, 1)}")
    for nu in range(2, g + 1):
        if table.b(0, nu) != 0:
            raise StratificationError(
                f"zero-section row must vanish at nu = {nu}")
    for n in range(2 * g - 1):
        for nu in range(g + 1):
            dual = table.b(2 * g - 2 - n, nu - n + g - 1)
            if table.b(n, nu) != dual:
                raise StratificationError(
                    f"duality fails: b[{n}][{nu}] = {table.b(n, nu)} vs "
                    f"b[{2 * g - 2 - n}][{nu - n + g - 1}] = {dual}")
            if nu >= max(1, n - g + 2) and 2 * nu > n + 2 and table.b(n, nu):
                raise StratificationError(
                    f"Clifford vanishing fails at b[{n}][{nu}] = {table.b(n, nu)}")


def dual_class_key(model: HyperellipticModel, rep, n: int):
    """The degree-(2g-2-n) key of the Serre-dual class."""
    return negate(model, rep), 2 * model.genus - 2 - n


def class_section_count(model: HyperellipticModel, place_table: PlaceTable,
                        rep, n: int) -> int:
    """h^0 of one degree-n class, by direct bucket size (0 when the class
    has no effective representative)."""
    size = 0
    for divisor in effective_divisors(place_table, n):
        if divisor_class(model, divisor)[0] == rep:
            size += 1
    if size == 0:
        return 0
    return section_count_to_h0(model.field.order, size)
