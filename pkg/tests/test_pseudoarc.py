"""Arc construction and verification tests.

Truth is established against independent oracles where possible: rank
computations replace determinants, lifted subspaces are checked to
contain the defining curve points, and spread containment is compared
against per-element membership.
"""

import warnings
from random import Random

import pytest

from pseudoarcs.gf import tower
from pseudoarcs.linalg import det, rank
from pseudoarcs.nrc import frobenius_orbit_reps, orbit_rep_count, veronese
from pseudoarcs.projgeo import (apply_projectivity, canonical_spread,
                                intersect, lift_subspace, span,
                                spread_membership)
from pseudoarcs.pseudoarc import (ArcVerdict, PseudoArc, SmallFieldWarning,
                                  Tag, build_desarguesian_arc,
                                  build_imaginary_arc,
                                  build_osculating_family,
                                  contained_in_spread, extend_with_osculating,
                                  is_pseudo_arc, thas_bound)


def stacked_rank(elements, subset):
    rows = []
    for i in subset:
        rows.extend([list(r) for r in elements[i].rows])
    return rank(rows)


def test_imaginary_arc_sizes_and_tags():
    tow = tower(5, 1, 2)
    arc = build_imaginary_arc(tow, 2)
    assert len(arc) == orbit_rep_count(5, 2) == 10
    reps = frobenius_orbit_reps(tow)
    assert [t.kind for t in arc.tags] == ["imaginary"] * 10
    assert [t.param for t in arc.tags] == list(reps)

    with pytest.warns(SmallFieldWarning):
        arc2 = build_imaginary_arc(tower(2, 2, 2), 3)
    assert len(arc2) == orbit_rep_count(4, 2) == 6


def test_imaginary_arc_lifts_contain_conjugate_curve_points():
    tow = tower(5, 1, 2)
    arc = build_imaginary_arc(tow, 2)
    for el, tag in zip(arc.elements, arc.tags):
        lifted = lift_subspace(el, tow)
        pt = veronese(tow.top, 1, tag.param, 4).coords
        conj = [tow.frobenius(x, 1) for x in pt]
        assert lifted.contains(list(pt))
        assert lifted.contains(conj)


def test_small_field_warning_threshold():
    with pytest.warns(SmallFieldWarning):
        build_imaginary_arc(tower(2, 1, 2), 2)  # q = 2 < 5
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        build_imaginary_arc(tower(5, 1, 2), 2)  # q = 5 = hk + 1, no warning


def test_pairwise_disjoint_elements():
    with pytest.warns(SmallFieldWarning):
        arc = build_imaginary_arc(tower(2, 2, 2), 3)
    els = arc.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            assert intersect(els[i], els[j]).rank == 0


def test_extension_sizes_and_tag_order():
    tow = tower(5, 1, 2)
    arc = extend_with_osculating(build_imaginary_arc(tow, 2))
    assert len(arc) == 10 + 5 + 1
    kinds = [t.kind for t in arc.tags]
    assert kinds == ["imaginary"] * 10 + ["osculating"] * 5 + ["osculating-infty"]
    ts = [t.param.val for t in arc.tags[10:15]]
    assert ts == [0, 1, 2, 3, 4]


def test_extended_arcs_verify():
    arc = extend_with_osculating(build_imaginary_arc(tower(5, 1, 2), 2))
    verdict = is_pseudo_arc(arc, 2)
    assert verdict.ok and verdict.witness is None
    # independent oracle on a few subsets: stacked rank must be full
    for subset in [(0, 1), (0, 15), (9, 10), (4, 12)]:
        assert stacked_rank(arc.elements, subset) == 4

    with pytest.warns(SmallFieldWarning):
        arc2 = extend_with_osculating(build_imaginary_arc(tower(2, 2, 2), 3))
    assert len(arc2) == 6 + 4 + 1
    assert is_pseudo_arc(arc2, 3).ok
    for subset in [(0, 1, 2), (5, 6, 10), (0, 7, 9)]:
        assert stacked_rank(arc2.elements, subset) == 6


def test_osculating_family_needs_large_characteristic():
    with pytest.raises(ValueError):
        build_osculating_family(tower(2, 1, 3), 2)  # p = 2 < h = 3


def test_is_pseudo_arc_witness_is_first_failure():
    arc = build_imaginary_arc(tower(5, 1, 2), 2)
    e0, e1 = arc.elements[0], arc.elements[1]
    verdict = is_pseudo_arc([e0, e1, e0], 2)
    assert not verdict.ok
    assert verdict.witness == (0, 2)
    assert stacked_rank([e0, e1, e0], (0, 2)) < 4


def test_is_pseudo_arc_vacuous_cases():
    arc = build_imaginary_arc(tower(5, 1, 2), 2)
    assert is_pseudo_arc([], 2).ok
    assert is_pseudo_arc([arc.elements[0]], 2).ok


def test_is_pseudo_arc_rejects_mixed_shapes():
    tow = tower(5, 1, 2)
    arc = build_imaginary_arc(tow, 2)
    line = span([[tow.base(1), tow.base(0), tow.base(0), tow.base(0)]])
    with pytest.raises(ValueError):
        is_pseudo_arc([arc.elements[0], line], 2)


def test_projectivity_invariance():
    tow = tower(5, 1, 2)
    arc = extend_with_osculating(build_imaginary_arc(tow, 2))
    rng = Random(11)
    while True:
        m = [[tow.base(rng.randrange(5)) for _ in range(4)] for _ in range(4)]
        if det(m):
            break
    moved = [apply_projectivity(m, el) for el in arc.elements]
    assert is_pseudo_arc(moved, 2).ok


def test_sample_mode_is_deterministic():
    arc = build_imaginary_arc(tower(5, 1, 2), 2)
    e0 = arc.elements[0]
    bad = [e0, e0]
    v1 = is_pseudo_arc(bad, 2, sample=5, seed=1)
    v2 = is_pseudo_arc(bad, 2, sample=5, seed=1)
    assert (not v1.ok) and v1.witness == (0, 1)
    assert v1 == v2
    assert is_pseudo_arc(arc, 2, sample=20, seed=7).ok


def test_thas_bound_values():
    assert thas_bound(2, 2, 4) == 18
    assert thas_bound(2, 2, 5) == 26
    assert thas_bound(1, 3, 7) == 9
    assert thas_bound(2, 3, 4) == 19


def test_h1_arc_is_classical():
    tow = tower(7, 1, 1)
    arc = build_imaginary_arc(tow, 3)
    assert len(arc) == 7
    assert all(el.rank == 1 for el in arc.elements)
    assert is_pseudo_arc(arc, 3).ok
    # order-0 osculating spaces are the curve points themselves: collision
    with pytest.raises(ValueError):
        extend_with_osculating(arc)


def test_pseudo_arc_constructor_validation():
    tow = tower(5, 1, 2)
    arc = build_imaginary_arc(tow, 2)
    els = list(arc.elements)
    with pytest.raises(ValueError):
        PseudoArc(tow, 2, els, list(arc.tags[:-1]))
    with pytest.raises(ValueError):
        PseudoArc(tow, 2, els + [els[0]], list(arc.tags) + [Tag("imaginary")])
    top_el = lift_subspace(els[0], tow)
    with pytest.raises(ValueError):
        PseudoArc(tow, 2, [top_el], [Tag("imaginary")])


def test_desarguesian_arc_contained_in_its_spread():
    tow = tower(5, 1, 2)
    spread = canonical_spread(tow, 2)
    top = tow.top
    coords = [[top(1), top(0)], [top(0), top(1)], [top(1), top(1)], [top(1), top(2)]]
    points = [spread.embed_point(c) for c in coords]
    arc = build_desarguesian_arc(points, spread)
    assert len(arc) == 4
    assert all(t.kind == "external" for t in arc.tags)
    assert is_pseudo_arc(arc, 2).ok
    verdict = contained_in_spread(arc, spread)
    assert verdict.ok
    for el in arc.elements:
        assert spread_membership(el, spread)


def test_desarguesian_arc_rejects_bad_points():
    tow = tower(5, 1, 2)
    spread = canonical_spread(tow, 2)
    top = tow.top
    outside = [top(1), top(0), top(0), top(0)]
    with pytest.raises(ValueError):
        build_desarguesian_arc([outside], spread)
    p = spread.embed_point([top(1), top(0)])
    p_scaled = [top(2) * x for x in p]
    with pytest.raises(ValueError):
        build_desarguesian_arc([p, p_scaled], spread)


def test_imaginary_arc_avoids_canonical_spread():
    tow = tower(5, 1, 2)
    arc = build_imaginary_arc(tow, 2)
    spread = canonical_spread(tow, 2)
    for el in arc.elements:
        assert not spread_membership(el, spread)
    verdict = contained_in_spread(arc, spread)
    assert not verdict.ok
    assert verdict.witness == (0,)


def test_verdict_truthiness():
    assert bool(ArcVerdict(True))
    assert not bool(ArcVerdict(False, (1, 2)))
