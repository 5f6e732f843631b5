"""Rational normal curves and their osculating data.

Points of the degree-(N-1) rational curve are parametrized by the
projective line: an affine parameter t gives (1, t, ..., t^(N-1)), and
the point at infinity gives (0, ..., 0, 1).  The module also provides
derivative row matrices (osculating bases), the generator test for
extension-field elements, and canonical representatives of the
Frobenius orbits of maximal size.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .gf import FieldElement, FieldTower, GF, prime_factors


class _Infinity:
    """Sentinel for the parameter of the point at infinity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


@dataclass(frozen=True)
class NrcPoint:
    """A curve point: its parameter (field element or INFINITY) and
    its coordinate vector."""

    param: object
    coords: Tuple[FieldElement, ...]

    def __len__(self):
        return len(self.coords)


def veronese(field: GF, u, t, length: int) -> NrcPoint:
    """Image of the projective parameter (u : t) under the power map
    of the given length.

    Coordinate i is u^(length-1-i) * t^i.  The parameter must be
    normalized: u = 1, or (u, t) = (0, 1).
    """
    u = u if isinstance(u, FieldElement) else field(u)
    t = t if isinstance(t, FieldElement) else field(t)
    if not u and not t:
        raise ValueError("(0, 0) is not a projective parameter")
    if u == field.one:
        coords = [field.one]
        for _ in range(length - 1):
            coords.append(coords[-1] * t)
        return NrcPoint(t, tuple(coords))
    if not u and t == field.one:
        coords = [field.zero] * (length - 1) + [field.one]
        return NrcPoint(INFINITY, tuple(coords))
    raise ValueError("parameter not normalized: expected u = 1 or (0, 1)")


def nrc_points(field: GF, length: int) -> List[NrcPoint]:
    """All |F| + 1 points of the rational normal curve in dimension
    length, affine parameters first (ascending), infinity last."""
    if length < 2:
        raise ValueError("need at least 2 coordinates")
    pts = [veronese(field, field.one, t, length) for t in field.elements()]
    pts.append(veronese(field, field.zero, field.one, length))
    return pts


def _falling(field: GF, i: int, r: int) -> FieldElement:
    """i * (i-1) * ... * (i-r+1) as a field element."""
    acc = field.one
    for step in range(r):
        acc = acc * field((i - step) % field.p)
    return acc


def osc_basis(t: FieldElement, order: int, length: int) -> List[List[FieldElement]]:
    """Derivative rows of the curve at affine parameter t.

    Row r holds the r-th formal derivative of the power parametrization:
    entry (r, i) = i*(i-1)*...*(i-r+1) * t^(i-r).  Rows 0..order span the
    order-th osculating space; this needs characteristic > order.
    """
    field = t.field
    if field.p <= order:
        raise ValueError("characteristic %d too small for order %d" % (field.p, order))
    if length - 1 <= order:
        raise ValueError("order must be below the curve degree")
    rows = []
    for r in range(order + 1):
        row = [field.zero] * length
        tpow = field.one
        for i in range(r, length):
            row[i] = _falling(field, i, r) * tpow
            tpow = tpow * t
        rows.append(row)
    return rows


def osc_basis_infty(field: GF, order: int, length: int) -> List[List[FieldElement]]:
    """Derivative rows at the point at infinity: row r is the unit
    vector with a 1 in column length-1-r."""
    if field.p <= order:
        raise ValueError("characteristic %d too small for order %d" % (field.p, order))
    if length - 1 <= order:
        raise ValueError("order must be below the curve degree")
    rows = []
    for r in range(order + 1):
        row = [field.zero] * length
        row[length - 1 - r] = field.one
        rows.append(row)
    return rows


def is_imaginary(alpha: FieldElement, tow: FieldTower) -> bool:
    """True iff alpha generates the top field over the base, i.e. lies
    in no proper intermediate subfield."""
    return not tow.in_proper_subfield(alpha)


def mobius(n: int) -> int:
    """Moebius function."""
    if n < 1:
        raise ValueError("positive integer required")
    primes = prime_factors(n)
    m = 1
    for r in primes:
        m *= r
    if m != n:
        return 0  # not squarefree
    return -1 if len(primes) % 2 else 1


def orbit_rep_count(q: int, h: int) -> int:
    """Number of size-h orbits of x -> x^q on the degree-h extension:
    (1/h) * sum over d | h of mobius(h/d) * q^d."""
    total = 0
    for d in range(1, h + 1):
        if h % d == 0:
            total += mobius(h // d) * q ** d
    assert total % h == 0
    return total // h


@dataclass(frozen=True)
class OrbitReps:
    """Canonical representatives of the size-h Frobenius orbits.

    Each representative is the minimum integer encoding within its
    orbit; the list is sorted ascending.  These parametrize both the
    arc elements and the code coordinates, so the order is fixed.
    """

    tow: FieldTower
    reps: Tuple[FieldElement, ...]

    @property
    def h(self) -> int:
        return self.tow.h

    @property
    def q(self) -> int:
        return self.tow.q

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def __getitem__(self, i):
        return self.reps[i]


def frobenius_orbit_reps(tow: FieldTower) -> OrbitReps:
    """Smallest-encoding representatives of the orbits of x -> x^q that
    have full size h, sorted ascending.  The count always matches
    orbit_rep_count(q, h)."""
    h = tow.h
    seen = set()
    reps = []
    for x in tow.top.elements():
        if x.val in seen:
            continue
        orbit = [x]
        y = tow.frobenius(x, 1 % h) if h > 1 else x
        while y != x:
            orbit.append(y)
            y = tow.frobenius(y, 1)
        for z in orbit:
            seen.add(z.val)
        if len(orbit) == h:
            reps.append(x)
    assert len(reps) == orbit_rep_count(tow.q, h)
    return OrbitReps(tow, tuple(reps))
