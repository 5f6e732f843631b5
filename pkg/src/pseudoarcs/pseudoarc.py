"""Pseudo-arcs of PG(hk-1, q): families of (h-1)-dimensional subspaces
any k of which span the whole space.

The main construction takes one element per Frobenius orbit of
generators of the extension field: the rational point set of the span
of the conjugates of the curve point with that parameter.  The family
extends by the order-(h-1) osculating spaces at the rational curve
points.  Verification is exhaustive over k-subsets.
"""

import itertools
import warnings
from dataclasses import dataclass
from random import Random
from typing import List, Optional, Sequence, Tuple, Union

from .gf import FieldElement, FieldTower
from .linalg import det
from .nrc import (frobenius_orbit_reps, osc_basis, osc_basis_infty, veronese)
from .projgeo import (Spread, Subspace, conjugate_span, rationalize, span,
                      spread_membership)


class SmallFieldWarning(UserWarning):
    """Raised when q is below hk+1, where the spanning theorems carry
    no guarantee; the constructions still run and are verified
    directly."""


@dataclass(frozen=True)
class Tag:
    """Provenance of one arc element: which coordinate of the matching
    code it will become."""

    kind: str  # "imaginary" | "osculating" | "osculating-infty" | "external"
    param: Optional[FieldElement] = None

    def __repr__(self):
        if self.param is not None:
            return "Tag(%s, %d)" % (self.kind, self.param.val)
        return "Tag(%s)" % self.kind


@dataclass(frozen=True)
class ArcVerdict:
    """Outcome of a verification: truth value plus, on failure, the
    lexicographically first offending index subset."""

    ok: bool
    witness: Optional[Tuple[int, ...]] = None

    def __bool__(self):
        return self.ok


class PseudoArc:
    """An ordered, tagged family of rank-h subspaces of F_q^(hk)."""

    def __init__(self, tow: FieldTower, k: int,
                 elements: Sequence[Subspace], tags: Sequence[Tag]):
        elements = list(elements)
        tags = list(tags)
        if len(elements) != len(tags):
            raise ValueError("one tag per element required")
        h = tow.h
        n = h * k
        for el in elements:
            if el.field is not tow.base:
                raise ValueError("elements must live at the base level")
            if el.ambient_dim != n or el.rank != h:
                raise ValueError("element of wrong shape for PG(%d, %d)" % (n - 1, tow.q))
        if len(set(elements)) != len(elements):
            raise ValueError("repeated element")
        self.tow = tow
        self.k = k
        self.elements = tuple(elements)
        self.tags = tuple(tags)

    @property
    def h(self) -> int:
        return self.tow.h

    @property
    def q(self) -> int:
        return self.tow.q

    @property
    def params(self) -> Tuple[int, int, int]:
        return (self.h, self.k, self.q)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return "PseudoArc(h=%d, k=%d, q=%d, size=%d)" % (
            self.h, self.k, self.q, len(self.elements))


def thas_bound(h: int, k: int, q: int) -> int:
    """Upper bound on the size of a pseudo-arc: q^h + k for even q,
    one less for odd q."""
    return q ** h + k - (0 if q % 2 == 0 else 1)


def _warn_small_field(tow: FieldTower, k: int):
    if tow.q < tow.h * k + 1:
        warnings.warn(
            "q = %d is below hk + 1 = %d; spanning guarantees do not apply"
            % (tow.q, tow.h * k + 1), SmallFieldWarning, stacklevel=3)


def build_imaginary_arc(tow: FieldTower, k: int) -> PseudoArc:
    """One element per orbit representative alpha: the rational points
    of the conjugate span of (1, alpha, ..., alpha^(hk-1)).

    Λ-order (representatives ascending) fixes the element order.  For
    h = 1 the orbit representatives are all of F_q and the elements are
    the affine curve points themselves.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    _warn_small_field(tow, k)
    n = tow.h * k
    reps = frobenius_orbit_reps(tow)
    elements = []
    tags = []
    for alpha in reps:
        point = veronese(tow.top, 1, alpha, n)
        elements.append(rationalize(conjugate_span(point.coords, tow), tow))
        tags.append(Tag("imaginary", alpha))
    return PseudoArc(tow, k, elements, tags)


def build_osculating_family(tow: FieldTower, k: int) -> List[Subspace]:
    """The order-(h-1) osculating spaces at the q+1 rational curve
    points, affine parameters ascending, infinity last."""
    if tow.p < tow.h:
        raise ValueError("characteristic %d below h = %d" % (tow.p, tow.h))
    n = tow.h * k
    out = []
    for t in tow.base.elements():
        out.append(span(osc_basis(t, tow.h - 1, n)))
    out.append(span(osc_basis_infty(tow.base, tow.h - 1, n)))
    return out


def extend_with_osculating(arc: PseudoArc) -> PseudoArc:
    """Append the osculating family to an arc; sizes add up to
    |Λ| + q + 1 and tags record the new parameters."""
    tow = arc.tow
    oscs = build_osculating_family(tow, arc.k)
    tags = []
    for t in tow.base.elements():
        tags.append(Tag("osculating", t))
    tags.append(Tag("osculating-infty"))
    overlap = set(arc.elements) & set(oscs)
    if overlap:
        raise ValueError("osculating spaces collide with existing elements")
    return PseudoArc(tow, arc.k, list(arc.elements) + oscs,
                     list(arc.tags) + tags)


def is_pseudo_arc(elements: Union[PseudoArc, Sequence[Subspace]], k: int,
                  sample: Optional[int] = None, seed: int = 0) -> ArcVerdict:
    """Exhaustively test that every k of the elements span the whole
    space, by stacking their bases and checking nonsingularity.

    Subsets are visited in lexicographic index order and the first
    failure is the witness.  With `sample`, that many pseudo-random
    subsets are tested instead (never used by the verification suites).
    A true verdict on more than the size bound is impossible and
    asserted against.
    """
    if isinstance(elements, PseudoArc):
        elements = list(elements.elements)
    else:
        elements = list(elements)
    if not elements:
        return ArcVerdict(True)
    h = elements[0].rank
    n = h * k
    fld = elements[0].field
    for el in elements:
        if el.rank != h or el.ambient_dim != n or el.field is not fld:
            raise ValueError("elements of mixed shape")
    if len(elements) < k:
        return ArcVerdict(True)
    if sample is None:
        subsets = itertools.combinations(range(len(elements)), k)
    else:
        rng = Random(seed)
        subsets = (tuple(sorted(rng.sample(range(len(elements)), k)))
                   for _ in range(sample))
    for subset in subsets:
        stacked = []
        for i in subset:
            stacked.extend([list(r) for r in elements[i].rows])
        if not det(stacked):
            return ArcVerdict(False, tuple(subset))
    if sample is None:
        q = fld.order
        assert len(elements) <= thas_bound(h, k, q), "size bound violated"
    return ArcVerdict(True)


def contained_in_spread(arc: Union[PseudoArc, Sequence[Subspace]],
                        spread: Spread) -> ArcVerdict:
    """Test every element for spread membership; the first failure is
    the witness.  An empty family is vacuously contained."""
    elements = list(arc.elements) if isinstance(arc, PseudoArc) else list(arc)
    for i, el in enumerate(elements):
        if el.rank != spread.h or el.ambient_dim != spread.h * spread.k:
            raise ValueError("element %d has the wrong shape for the spread" % i)
        if not spread_membership(el, spread):
            return ArcVerdict(False, (i,))
    return ArcVerdict(True)


def build_desarguesian_arc(points: Sequence[Sequence[FieldElement]],
                           spread: Spread) -> PseudoArc:
    """The spread elements through the given director-space points.

    The points must lie in the director space and form an arc there
    (any k of their coordinate vectors independent); the result is then
    a pseudo-arc by field reduction.
    """
    tow = spread.tow
    k = spread.k
    coords = []
    for pt in points:
        try:
            coords.append(spread.point_coordinates(pt))
        except Exception:
            raise ValueError("point does not lie in the director space")
    if len(coords) >= k:
        for subset in itertools.combinations(range(len(coords)), k):
            if not det([coords[i] for i in subset]):
                raise ValueError("points are not an arc in the director space: "
                                 "subset %s is degenerate" % (subset,))
    elements = [spread.element_through(c) for c in coords]
    tags = [Tag("external")] * len(elements)
    return PseudoArc(tow, k, elements, tags)
