"""Arithmetic over GF(p^k) and Z/nZ, and projective points of the 3-space over them.

Field elements are encoded as integers ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``
where ``c_i`` are the coefficients of the residue polynomial; :meth:`FiniteField.coeffs`
recovers the coefficient sequence.  Ring elements are plain residues ``0..n-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence, Union

MAX_FIELD_ORDER = 512


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, sorted by prime."""
    if n < 2:
        raise ValueError(f"factorize needs n >= 2, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k``, or None when q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    return f[0] if len(f) == 1 else None


# --- polynomials over Z/pZ, coefficient lists lowest degree first ---------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _poly_trim(a)
    return a


def _monic_polys(p: int, deg: int):
    # ordered by coefficient tuple read from x^(deg-1) down to x^0
    for high_to_low in itertools.product(range(p), repeat=deg):
        yield list(reversed(high_to_low)) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division against every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over Z/pZ.

    Candidates are compared on their coefficients from ``x^(k-1)`` down to
    the constant term, so for GF(9) this picks ``x^2 + 1``.
    """
    for poly in _monic_polys(p, k):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


@dataclass(frozen=True)
class FiniteField:
    """GF(p^k) with precomputed addition and multiplication tables."""

    p: int
    k: int
    modulus: tuple[int, ...]
    _add: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _mul: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.p**self.k

    def coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def element(self, coeffs: Sequence[int]) -> int:
        x = 0
        for c in reversed(coeffs):
            x = x * self.p + c % self.p
        return x

    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def neg(self, x: int) -> int:
        return self._add[x].index(0)

    def sub(self, x: int, y: int) -> int:
        return self._add[x][self.neg(y)]

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._mul[x].index(1)

    def pow(self, x: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self._mul[r][x]
        return r


def make_field(q: int) -> FiniteField:
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    if q > MAX_FIELD_ORDER:
        raise ValueError(f"field order {q} exceeds the supported maximum {MAX_FIELD_ORDER}")
    p, k = pk
    modulus = (0, 1) if k == 1 else smallest_irreducible(p, k)

    def to_poly(x):
        out = []
        for _ in range(k):
            x, c = divmod(x, p)
            out.append(c)
        return out

    def from_poly(a):
        x = 0
        for c in reversed(a):
            x = x * p + c
        return x

    add = tuple(
        tuple(from_poly([(a + b) % p for a, b in zip(to_poly(x), to_poly(y))]) for y in range(q))
        for x in range(q)
    )
    if k == 1:
        mul = tuple(tuple(x * y % p for y in range(q)) for x in range(q))
    else:
        scale = [[from_poly([c * a % p for a in to_poly(x)]) for x in range(q)] for c in range(p)]

        def times_t(x):
            a = to_poly(x)
            top = a[-1]
            shifted = [0] + a[:-1]
            return from_poly([(s - top * m) % p for s, m in zip(shifted, modulus)])

        rows = []
        for x in range(q):
            # x * t^i for i < k, then y = sum c_i t^i is combined through the add table
            basis = [x]
            for _ in range(k - 1):
                basis.append(times_t(basis[-1]))
            row = []
            for y in range(q):
                acc = 0
                for c, b in zip(to_poly(y), basis):
                    if c:
                        acc = add[acc][scale[c][b]]
                row.append(acc)
            rows.append(tuple(row))
        mul = tuple(rows)
    return FiniteField(p, k, modulus, add, mul)


@dataclass(frozen=True)
class RingZn:
    """The residue ring Z/nZ."""

    n: int
    factorization: tuple[tuple[int, int], ...]

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.n

    def mul(self, x: int, y: int) -> int:
        return x * y % self.n

    def units(self) -> list[int]:
        return [u for u in range(1, self.n) if gcd(u, self.n) == 1]


def make_ring(n: int) -> RingZn:
    if n < 2:
        raise ValueError(f"Z/nZ needs n >= 2, got {n}")
    return RingZn(n, tuple(factorize(n)))


Context = Union[FiniteField, RingZn]


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    coords: tuple[int, int, int]
    ctx: Context = field(compare=False)


def projective_points_field(f: FiniteField) -> list[ProjectivePoint]:
    """Lines through the origin of F_q^3, first nonzero coordinate scaled to 1."""
    q = f.order
    pts = [(0, 0, 1)]
    pts += [(0, 1, z) for z in range(q)]
    pts += [(1, y, z) for y in range(q) for z in range(q)]
    return [ProjectivePoint(c, f) for c in pts]


def projective_points_ring(r: RingZn) -> list[ProjectivePoint]:
    """Unit-scaling classes of vectors in (Z/nZ)^3 that no nonzero residue annihilates.

    A vector survives iff gcd(v1, v2, v3, n) == 1; each class is represented by
    the lexicographic minimum of its orbit.
    """
    n = r.n
    units = r.units()
    out = []
    for v in itertools.product(range(n), repeat=3):
        if gcd(gcd(v[0], v[1]), gcd(v[2], n)) != 1:
            continue
        if all(v <= ((u * v[0]) % n, (u * v[1]) % n, (u * v[2]) % n) for u in units):
            out.append(ProjectivePoint(v, r))
    return out


def ring_order_formula(n: int) -> int:
    out = 1
    for p, k in factorize(n):
        out *= p ** (2 * k) + p ** (2 * k - 1) + p ** (2 * k - 2)
    return out


def ring_degree_formula(n: int) -> int:
    out = 1
    for p, k in factorize(n):
        out *= p**k + p ** (k - 1)
    return out


def dot3(v: ProjectivePoint, w: ProjectivePoint, ctx: Context) -> int:
    if v.ctx != ctx or w.ctx != ctx:
        raise ValueError("points belong to a different field or ring")
    (a, b, c), (x, y, z) = v.coords, w.coords
    return ctx.add(ctx.add(ctx.mul(a, x), ctx.mul(b, y)), ctx.mul(c, z))
