"""A worked eleven-line family in PG(5, 4), bundled as a regression
fixture.

The same family is presented three ways and cross-checked: as explicit
spanning pairs over F_4, as rational parts of conjugate spans and
tangent lines of a rational normal curve sitting in the quadratic
extension, and as the image of the standard imaginary-point
construction under an explicit projectivity.  The associated additive
code has parameters (11, 4^6, 9) over F_16.

Entry encoding: line and matrix entries are exponents of the cube root
of unity e (None for the zero entry); point entries are exponents of
the primitive element w (None for zero), with e = w^5.
"""

import warnings
from random import Random
from typing import List, Optional, Sequence, Tuple

from .codes import (AdditiveCode, ERASED, code_from_subspaces, encode,
                    erasure_decode, is_mds, min_distance)
from .gf import FieldElement, FieldTower, Poly, tower
from .linalg import inverse, mat_vec
from .nrc import nrc_points, osc_basis, osc_basis_infty
from .projgeo import (Subspace, apply_projectivity, conjugate_span, intersect,
                      rationalize, span)
from .pseudoarc import SmallFieldWarning, build_imaginary_arc, is_pseudo_arc, \
    extend_with_osculating

# x^4 + x + 1, low degree first; its roots in F_16 are primitive
_W_MIN_POLY = (1, 1, 0, 0, 1)

# spanning pairs of the eleven lines; the eighth is reconstructed from
# its defining imaginary point instead of carrying its own pair
_LINES: Tuple[Optional[Tuple[Tuple[Optional[int], ...], ...]], ...] = (
    ((0, None, None, None, None, None), (None, 0, None, None, None, None)),
    ((0, None, 1, 1, 1, 0), (None, 0, 1, 0, 0, 0)),
    ((0, None, 0, None, 0, None), (None, 0, None, 0, None, 0)),
    ((0, None, None, 1, 0, 1), (None, 0, 1, 2, 1, None)),
    ((0, None, 1, 2, None, 0), (None, 0, 2, 2, 0, 2)),
    ((None, None, 0, None, None, None), (None, None, None, 0, None, None)),
    ((None, None, None, None, 0, None), (None, None, None, None, None, 0)),
    None,
    ((0, None, 0, 2, 2, 0), (None, 0, 0, 0, None, 1)),
    ((0, None, None, 0, None, 1), (None, 0, 0, 2, 1, 2)),
    ((0, None, 1, None, 1, 1), (None, 0, 0, 1, 2, 1)),
)

# the five rational curve points followed by the six imaginary ones
_POINTS: Tuple[Tuple[Optional[int], ...], ...] = (
    (0, None, None, None, None, None),
    (0, 0, None, 10, 10, None),
    (0, 5, 0, 5, 0, 5),
    (0, 10, 0, None, None, 5),
    (None, 0, 10, 10, 0, 10),
    (None, None, 0, 6, None, None),
    (None, None, None, None, 0, 3),
    (0, 7, 8, 5, 14, 12),
    (0, 2, 8, 4, 10, 9),
    (0, 11, 11, 13, 1, 9),
    (0, 1, 2, 6, 3, 9),
)

# projectivity carrying the curve onto the standard one (left action)
_MATRIX: Tuple[Tuple[Optional[int], ...], ...] = (
    (0, 1, None, 0, 0, 2),
    (1, 0, 0, 0, 2, None),
    (2, 0, 1, None, 0, 0),
    (0, 2, 0, 1, None, 0),
    (1, 2, 0, 2, 1, 2),
    (2, 1, None, 1, 1, 0),
)


def fixture_tower() -> FieldTower:
    return tower(2, 2, 2)


def w_element(tow: FieldTower) -> FieldElement:
    """Smallest-encoded root of x^4 + x + 1 in the top field."""
    f = Poly.from_ints(tow.top, list(_W_MIN_POLY))
    for x in tow.top.elements():
        if not f.evaluate(x):
            return x
    raise AssertionError("no root of the defining polynomial")


def e_element(tow: FieldTower) -> FieldElement:
    """The cube root of unity w^5 spanning the embedded F_4."""
    return w_element(tow) ** 5


def _top_vector(tow: FieldTower, exps: Sequence[Optional[int]]) -> List[FieldElement]:
    w = w_element(tow)
    return [tow.top.zero if a is None else w ** a for a in exps]


def _base_vector(tow: FieldTower, exps: Sequence[Optional[int]]) -> List[FieldElement]:
    e = e_element(tow)
    return [tow.base.zero if a is None else tow.to_base(e ** a) for a in exps]


def fixture_points(tow: FieldTower) -> List[List[FieldElement]]:
    """The eleven defining curve points, top level; the first five are
    rational, the last six imaginary."""
    return [_top_vector(tow, exps) for exps in _POINTS]


def conjugate_points(tow: FieldTower) -> List[List[FieldElement]]:
    """Entrywise Frobenius images of the eleven points."""
    return [[tow.frobenius(x, 1) for x in pt] for pt in fixture_points(tow)]


def fixture_matrix(tow: FieldTower) -> List[List[FieldElement]]:
    return [_base_vector(tow, row) for row in _MATRIX]


def fixture_lines(tow: FieldTower) -> List[Subspace]:
    """The eleven lines of PG(5, 4), in order."""
    points = fixture_points(tow)
    out = []
    for pair, point in zip(_LINES, points):
        if pair is None:
            out.append(rationalize(conjugate_span(point, tow), tow))
        else:
            out.append(span([_base_vector(tow, row) for row in pair]))
    return out


def fixture_code(tow: FieldTower) -> AdditiveCode:
    """The additive code of the eleven lines, one column each."""
    return code_from_subspaces(tow, fixture_lines(tow), 3)


def _normalized(vec: Sequence[FieldElement]) -> Tuple[int, ...]:
    lead = next((x for x in vec if x), None)
    if lead is None:
        raise ValueError("zero vector has no projective class")
    inv = lead.inverse()
    return tuple((inv * x).val for x in vec)


def _curve_parameter(tow: FieldTower, vec: Sequence[FieldElement]):
    """The parameter t with vec ~ (1, t, ..., t^5), or None at
    infinity; raises if vec is not on the standard curve."""
    if vec[0]:
        inv = vec[0].inverse()
        t = inv * vec[1]
        power = tow.top.one
        for x in vec:
            if inv * x != power:
                raise ValueError("point is not on the standard curve")
            power = power * t
        return t
    if any(vec[:-1]) or not vec[-1]:
        raise ValueError("point is not on the standard curve")
    return None


def verify_fixture(tow: Optional[FieldTower] = None) -> List[Tuple[str, bool, str]]:
    """Run every cross-check; returns (name, ok, detail) triples.

    All checks are exhaustive and deterministic; the whole battery is
    the backing of the `verify-example` command.
    """
    if tow is None:
        tow = fixture_tower()
    checks: List[Tuple[str, bool, str]] = []
    w = w_element(tow)
    e = e_element(tow)

    ok = (w ** 4 == w + tow.top.one and e == w ** 5
          and e * e == e + tow.top.one)
    order = next(n for n in range(1, 16) if w ** n == tow.top.one)
    ok = ok and order == 15
    checks.append(("defining-constants", ok,
                   "w^4 = w + 1, multiplicative order %d, e = w^5" % order))

    lines = fixture_lines(tow)
    distinct = len(set(lines)) == 11
    disjoint = all(intersect(lines[i], lines[j]).rank == 0
                   for i in range(11) for j in range(i + 1, 11))
    checks.append(("lines-pairwise-disjoint", distinct and disjoint,
                   "11 lines, pairwise trivial intersection"))

    verdict = is_pseudo_arc(lines, 3)
    checks.append(("lines-pseudo-arc", bool(verdict),
                   "every 3 of the 11 lines span PG(5, 4)"
                   if verdict else "failing triple %s" % (verdict.witness,)))

    matrix = fixture_matrix(tow)
    matrix_top = [[tow.lift(x) for x in row] for row in matrix]
    images = set()
    all_points = fixture_points(tow) + conjugate_points(tow)[5:]
    for pt in all_points:
        images.add(_normalized(mat_vec(matrix_top, pt)))
    curve = {_normalized(list(p.coords)) for p in nrc_points(tow.top, 6)}
    checks.append(("curve-bijection", images == curve and len(all_points) == 17,
                   "projectivity maps the 17 points onto the standard curve"))

    points = fixture_points(tow)
    derived_ok = True
    for i in range(5, 11):
        derived = rationalize(conjugate_span(points[i], tow), tow)
        if derived != lines[i]:
            derived_ok = False
            break
    checks.append(("conjugate-span-lines", derived_ok,
                   "lines 6..11 are the rational parts of their points' conjugate spans"))

    inv_base = inverse(matrix)
    tangent_ok = True
    for i in range(5):
        t = _curve_parameter(tow, mat_vec(matrix_top, points[i]))
        if t is None:
            rows = osc_basis_infty(tow.base, 1, 6)
        else:
            rows = osc_basis(tow.to_base(t), 1, 6)
        pulled = apply_projectivity(inv_base, span(rows))
        if pulled != lines[i]:
            tangent_ok = False
            break
    checks.append(("tangent-lines", tangent_ok,
                   "lines 1..5 are the pulled-back curve tangents at their points"))

    with warnings.catch_warnings():
        # q = 4 is below the spanning-theorem threshold hk + 1 = 7; the
        # exhaustive checks above stand in for the guarantee
        warnings.simplefilter("ignore", SmallFieldWarning)
        standard = extend_with_osculating(build_imaginary_arc(tow, 3))
    mapped = {apply_projectivity(inv_base, el) for el in standard.elements}
    checks.append(("standard-construction", mapped == set(lines),
                   "the family is the standard 11-element construction, "
                   "transported by the projectivity"))

    code = fixture_code(tow)
    d = min_distance(code)
    code_ok = (code.n, code.size, d) == (11, 4096, 9) and is_mds(code)
    checks.append(("code-parameters", code_ok,
                   "(n, size, d) = (%d, %d, %d), distance enumerated over "
                   "all %d words" % (code.n, code.size, d, code.size)))

    rng = Random(1)
    f = Poly(tow.base, [tow.base(rng.randrange(4)) for _ in range(6)])
    word = encode(f, code)
    erased = list(word)
    for j in rng.sample(range(11), 8):
        erased[j] = ERASED
    checks.append(("erasure-roundtrip", erasure_decode(erased, code) == f,
                   "recovery from 8 erasures in the length-11 code"))

    return checks
