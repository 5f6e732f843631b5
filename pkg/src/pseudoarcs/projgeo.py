"""Projective subspaces over a field tower.

A Subspace is the row space of a full-rank matrix in reduced row-echelon
form, so two subspaces are equal exactly when their representations are.
Subspaces live at one of the two levels of a tower: over the base field
F_q, or over the extension F_{q^h}.  The module provides spans,
intersections, Frobenius conjugates, rationalization down to the
canonical subgeometry, projectivities, and Desarguesian spreads with a
membership test.
"""

import itertools
from typing import Iterable, List, Optional, Sequence

from .gf import FieldElement, FieldTower, GF
from .linalg import (SingularMatrixError, identity, inverse, mat_mul,
                     nullspace, rank, rref, solve_rect, transpose)


class Subspace:
    """Row space of a matrix over a fixed field, held in canonical
    reduced row-echelon form.  May have rank 0 (the empty subspace)."""

    __slots__ = ("field", "ambient_dim", "rows", "pivots")

    def __init__(self, field: GF, ambient_dim: int, rows: Sequence[Sequence[FieldElement]]):
        red, pivots = rref(list(rows)) if rows else ([], [])
        for r in red:
            if len(r) != ambient_dim:
                raise ValueError("row length does not match ambient dimension")
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = tuple(tuple(r) for r in red)
        self.pivots = tuple(pivots)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def proj_dim(self) -> int:
        return len(self.rows) - 1

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field is other.field
                and self.ambient_dim == other.ambient_dim
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.ambient_dim,
                     tuple(tuple(x.val for x in r) for r in self.rows)))

    def __repr__(self):
        return "Subspace(rank %d in dim %d over GF(%d))" % (
            self.rank, self.ambient_dim, self.field.order)

    def contains(self, vec: Sequence[FieldElement]) -> bool:
        """Membership of a vector in the row space."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for i in range(self.ambient_dim):
                    v[i] = v[i] - c * row[i]
        return not any(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def points(self):
        """One representative per projective point, normalized so the
        first nonzero coordinate is 1.  (q^rank - 1)/(q - 1) points."""
        fld = self.field
        for lead in range(self.rank):
            # combinations with coefficient 1 on row `lead` and free
            # coefficients after it: each point counted exactly once
            for tail in itertools.product(fld.elements(), repeat=self.rank - lead - 1):
                vec = list(self.rows[lead])
                for c, row in zip(tail, self.rows[lead + 1:]):
                    if c:
                        for i in range(self.ambient_dim):
                            vec[i] = vec[i] + c * row[i]
                # normalize leading coordinate to 1
                first = next(x for x in vec if x)
                inv = first.inverse()
                yield tuple(inv * x for x in vec)


def span(points: Iterable[Sequence[FieldElement]], field: Optional[GF] = None) -> Subspace:
    """Subspace spanned by the given coordinate vectors."""
    pts = [list(p) for p in points]
    if not pts:
        raise ValueError("span of an empty point list; pass a field and use Subspace directly")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("vectors of mixed lengths")
    fld = field if field is not None else pts[0][0].field
    return Subspace(fld, n, pts)


def ambient_space(field: GF, n: int) -> Subspace:
    return Subspace(field, n, identity(field, n))


def join(u: Subspace, w: Subspace) -> Subspace:
    """Smallest subspace containing both."""
    _check_compatible(u, w)
    return Subspace(u.field, u.ambient_dim, list(u.rows) + list(w.rows))


def intersect(u: Subspace, w: Subspace) -> Subspace:
    """Intersection, via the nullspace of the stacked bases: a kernel
    vector (a | b) with a*U = b*W names a common element."""
    _check_compatible(u, w)
    if u.rank == 0 or w.rank == 0:
        return Subspace(u.field, u.ambient_dim, [])
    stacked = [list(r) for r in u.rows] + [[-x for x in r] for r in w.rows]
    kernel = nullspace(transpose(stacked), field=u.field)
    vecs = []
    for kv in kernel:
        vec = [u.field.zero] * u.ambient_dim
        for c, row in zip(kv[:u.rank], u.rows):
            for i in range(u.ambient_dim):
                vec[i] = vec[i] + c * row[i]
        vecs.append(vec)
    result = Subspace(u.field, u.ambient_dim, vecs)
    assert result.rank == u.rank + w.rank - join(u, w).rank
    return result


def _check_compatible(u: Subspace, w: Subspace):
    if u.field is not w.field or u.ambient_dim != w.ambient_dim:
        raise ValueError("subspaces live in different spaces")


def conjugate_rows(tow: FieldTower, vec: Sequence[FieldElement]) -> List[List[FieldElement]]:
    """The h entrywise Frobenius images of a top-level vector, first the
    vector itself."""
    return [[tow.frobenius(x, i) for x in vec] for i in range(tow.h)]


def conjugate_span(point: Sequence[FieldElement], tow: FieldTower) -> Subspace:
    """Span of a top-level point together with all its Frobenius
    conjugates.  Rank h exactly when the point's coordinate ratios
    generate the top field."""
    pt = list(point)
    if not any(pt):
        raise ValueError("zero vector has no conjugate span")
    return Subspace(tow.top, len(pt), conjugate_rows(tow, pt))


def frobenius_subspace(w: Subspace, tow: FieldTower) -> Subspace:
    """Entrywise Frobenius image of a top-level subspace."""
    return Subspace(w.field, w.ambient_dim,
                    [[tow.frobenius(x, 1 % tow.h) for x in r] for r in w.rows])


def lift_subspace(w: Subspace, tow: FieldTower) -> Subspace:
    """View a base-level subspace over the top field (same rows,
    entries embedded)."""
    if w.field is not tow.base:
        raise ValueError("expected a base-level subspace")
    return Subspace(tow.top, w.ambient_dim,
                    [[tow.lift(x) for x in r] for r in w.rows])


def rationalize(w: Subspace, tow: FieldTower) -> Subspace:
    """The base-level subspace of rational points of a Frobenius-
    invariant top-level subspace.

    For each basis vector v and each conjugate omega^(q^i) of a normal
    element, the entrywise relative trace of omega^(q^i) * v is a
    rational vector of the subspace; together these span the full
    rational point set, and the base-level rank equals the top-level
    rank.
    """
    if w.field is not tow.top:
        raise ValueError("expected a top-level subspace")
    if frobenius_subspace(w, tow) != w:
        raise ValueError("subspace is not Frobenius-invariant")
    omega = tow.normal_element()
    vecs = []
    for row in w.rows:
        for i in range(tow.h):
            scale = tow.frobenius(omega, i)
            vecs.append([tow.rel_trace(scale * x) for x in row])
    result = Subspace(tow.base, w.ambient_dim, vecs)
    assert result.rank == w.rank
    return result


def apply_projectivity(matrix: Sequence[Sequence[FieldElement]], w: Subspace) -> Subspace:
    """Image of a subspace under the projectivity of an invertible
    matrix acting on column vectors from the left."""
    try:
        inverse([list(r) for r in matrix])
    except SingularMatrixError:
        raise SingularMatrixError("projectivity matrix is singular")
    mt = transpose([list(r) for r in matrix])
    if not w.rows:
        return w
    return Subspace(w.field, w.ambient_dim, mat_mul([list(r) for r in w.rows], mt))


class Spread:
    """A Desarguesian (h-1)-spread of PG(hk-1, q), presented by a
    director frame: k ordered top-level rows whose span, together with
    all its Frobenius conjugates, fills the whole space.

    Every spread element is the rational point set of the conjugate
    span of a point of the director space.
    """

    def __init__(self, tow: FieldTower, k: int, frame: Sequence[Sequence[FieldElement]]):
        frame = [list(r) for r in frame]
        if len(frame) != k:
            raise ValueError("frame must have k rows")
        n = tow.h * k
        if any(len(r) != n for r in frame):
            raise ValueError("frame rows must have length h*k")
        director = Subspace(tow.top, n, frame)
        if director.rank != k:
            raise ValueError("frame rows are dependent")
        stacked = []
        for row in frame:
            stacked.extend(conjugate_rows(tow, row))
        if rank(stacked) != n:
            raise ValueError("director and its conjugates do not span the space")
        self.tow = tow
        self.h = tow.h
        self.k = k
        self.q = tow.q
        self.frame = tuple(tuple(r) for r in frame)
        self.director = director

    def embed_point(self, coords: Sequence[FieldElement]) -> List[FieldElement]:
        """Ambient coordinates of the director point with the given
        frame coordinates (length k, top level, not all zero)."""
        coords = list(coords)
        if len(coords) != self.k or not any(coords):
            raise ValueError("need k frame coordinates, not all zero")
        n = self.h * self.k
        out = [self.tow.top.zero] * n
        for c, row in zip(coords, self.frame):
            if c:
                for i in range(n):
                    out[i] = out[i] + c * row[i]
        return out

    def point_coordinates(self, point: Sequence[FieldElement]) -> List[FieldElement]:
        """Frame coordinates of an ambient point lying in the director
        space (inverse of embed_point up to scalars)."""
        return solve_rect(transpose([list(r) for r in self.frame]), list(point))

    def element_through(self, coords: Sequence[FieldElement]) -> Subspace:
        """The spread element determined by a director point, given by
        its frame coordinates."""
        return rationalize(conjugate_span(self.embed_point(coords), self.tow), self.tow)

    def elements(self):
        """All (q^(hk) - 1)/(q^h - 1) spread elements."""
        top = self.tow.top
        for lead in range(self.k):
            for tail in itertools.product(top.elements(), repeat=self.k - lead - 1):
                coords = [top.zero] * lead + [top.one] + list(tail)
                yield self.element_through(coords)


def canonical_spread(tow: FieldTower, k: int) -> Spread:
    """The reference spread: frame row i has entries 1, theta, ...,
    theta^(h-1) at positions i, i+k, ..., i+(h-1)k, with theta the
    smallest-encoded primitive element of the top field.  Stacking all
    conjugates block-diagonalizes into Moore matrices of the powers of
    theta, which are nonsingular since theta generates the extension."""
    top = tow.top
    theta = top.primitive_element()
    n = tow.h * k
    frame = []
    for i in range(k):
        row = [top.zero] * n
        power = top.one
        for j in range(tow.h):
            row[i + j * k] = power
            power = power * theta
        frame.append(row)
    return Spread(tow, k, frame)


def block_spread(tow: FieldTower, k: int, basis: Optional[Sequence[FieldElement]] = None) -> Spread:
    """The spread matching the consecutive-block identification of
    F_q^(hk) with F_{q^h}^k through a chosen basis (default: the normal
    basis).  Frame row i carries the trace-dual basis on block i, which
    makes element_through(y) equal to the set of vectors whose block
    coordinates are proportional to y."""
    if basis is None:
        basis = tow.normal_basis()
    dual = tow.dual_basis(list(basis))
    top = tow.top
    n = tow.h * k
    frame = []
    for i in range(k):
        row = [top.zero] * n
        for j, d in enumerate(dual):
            row[i * tow.h + j] = d
        frame.append(row)
    return Spread(tow, k, frame)


def spread_membership(w: Subspace, spread: Spread) -> bool:
    """True iff the base-level subspace is an element of the spread:
    its top-level extension must meet the director space."""
    if w.field is not spread.tow.base:
        raise ValueError("expected a base-level subspace")
    if w.rank != spread.h:
        raise ValueError("element of a spread must have rank h")
    lifted = lift_subspace(w, spread.tow)
    return intersect(lifted, spread.director).rank > 0
