"""Quadratic form tests.

The vanishing-space computation is cross-checked by brute-force
evaluation, and the trace composition is verified pointwise against
its defining formula on random vectors, in odd and even characteristic.
"""

from random import Random

import pytest

from pseudoarcs.gf import GF, tower
from pseudoarcs.nrc import nrc_points
from pseudoarcs.projgeo import ambient_space, span
from pseudoarcs.quadrics import (QuadraticForm, eval_form,
                                 is_complete_intersection, monomial_pairs,
                                 nrc_quadric_system, trace_reduce,
                                 vanishing_space)


def point_spans(field, pts):
    return [span([list(p.coords)]) for p in pts]


def test_monomial_pairs_layout():
    assert monomial_pairs(3) == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
    assert len(monomial_pairs(6)) == 21


def test_conic_form_evaluation():
    f5 = GF.get(5, 1)
    conic = QuadraticForm.from_pairs(f5, 3, {(0, 2): 1, (1, 1): 4})
    for t in f5.elements():
        assert not conic.evaluate([f5(1), t, t * t])
    assert not conic.evaluate([f5(0), f5(0), f5(1)])
    assert conic.evaluate([f5(0), f5(1), f5(0)])
    assert eval_form(conic, [f5(1), f5(2), f5(3)]) == f5(4)  # 3 - 4 mod 5


def test_form_algebra_matches_direct_sum():
    f7 = GF.get(7, 1)
    rng = Random(3)
    pairs = monomial_pairs(4)
    for _ in range(20):
        c1 = [f7(rng.randrange(7)) for _ in pairs]
        c2 = [f7(rng.randrange(7)) for _ in pairs]
        q1 = QuadraticForm(f7, 4, c1)
        q2 = QuadraticForm(f7, 4, c2)
        s = f7(rng.randrange(1, 7))
        v = [f7(rng.randrange(7)) for _ in range(4)]
        direct = sum((c * v[i] * v[j] for c, (i, j) in zip(c1, pairs)), f7.zero)
        assert q1.evaluate(v) == direct
        assert (q1 + q2).evaluate(v) == q1.evaluate(v) + q2.evaluate(v)
        assert q1.scale(s).evaluate(v) == s * q1.evaluate(v)
    assert QuadraticForm.zero(f7, 4).is_zero()


def test_vanishing_space_of_empty_input_is_everything():
    f3 = GF.get(3, 1)
    forms = vanishing_space([], field=f3, ambient_dim=3)
    assert len(forms) == 6


def test_vanishing_space_of_curve_points():
    f7 = GF.get(7, 1)
    pts = point_spans(f7, nrc_points(f7, 4))
    forms = vanishing_space(pts)
    assert len(forms) == 3
    for f in forms:
        for p in nrc_points(f7, 4):
            assert not f.evaluate(list(p.coords))
    # closure: combinations of the basis vanish too
    combo = forms[0] + forms[1].scale(f7(3)) + forms[2].scale(f7(5))
    for p in nrc_points(f7, 4):
        assert not combo.evaluate(list(p.coords))


def test_nrc_quadric_system_counts_and_annihilation():
    for k, q in [(3, 5), (3, 7), (4, 7), (5, 11), (6, 13)]:
        field = GF.get(q, 1)
        forms = nrc_quadric_system(field, k)
        assert len(forms) == (k - 1) * (k - 2) // 2
        for f in forms:
            for p in nrc_points(field, k):
                assert not f.evaluate(list(p.coords))


def test_nrc_quadric_system_k3_is_the_conic():
    f5 = GF.get(5, 1)
    forms = nrc_quadric_system(f5, 3)
    assert len(forms) == 1
    expected = QuadraticForm.from_pairs(f5, 3, {(0, 2): 1, (1, 1): 4})
    assert forms[0] == expected


def test_vanishing_space_matches_standard_system_for_large_q():
    # for q >= 2k - 1 the standard system spans everything that
    # vanishes on the curve
    for k, q in [(3, 5), (3, 7), (4, 7), (4, 11), (5, 11)]:
        field = GF.get(q, 1)
        pts = point_spans(field, nrc_points(field, k))
        forms = vanishing_space(pts)
        assert len(forms) == (k - 1) * (k - 2) // 2, (k, q)


def test_small_field_gap_k5_q7():
    # q = 7 < 2k - 1 = 9: the curve has only 8 points and an extra
    # form sneaks in, x3*x4 - x0*x1, whose pullback t^7 - t vanishes
    # identically on the parameter line
    f7 = GF.get(7, 1)
    pts = point_spans(f7, nrc_points(f7, 5))
    forms = vanishing_space(pts)
    assert len(forms) == 7
    extra = QuadraticForm.from_pairs(f7, 5, {(3, 4): 1, (0, 1): 6})
    for p in nrc_points(f7, 5):
        assert not extra.evaluate(list(p.coords))


def test_trace_reduce_matches_definition_odd_char():
    tow = tower(5, 1, 2)
    basis = tow.normal_basis()
    top = tow.top
    form = QuadraticForm.from_pairs(top, 3, {(0, 2): 1, (1, 1): top.order - 1, (0, 1): 7})
    rng = Random(9)
    for alpha in basis:
        reduced = trace_reduce(form, tow, basis, alpha)
        assert reduced.field is tow.base and reduced.n == 6
        for _ in range(25):
            vec = [tow.base(rng.randrange(5)) for _ in range(6)]
            blocks = []
            for b in range(3):
                acc = top.zero
                for s in range(2):
                    acc = acc + tow.lift(vec[2 * b + s]) * basis[s]
                blocks.append(acc)
            assert reduced.evaluate(vec) == tow.rel_trace(alpha * form.evaluate(blocks))


def test_trace_reduce_matches_definition_even_char():
    tow = tower(2, 2, 2)
    basis = tow.normal_basis()
    top = tow.top
    form = QuadraticForm.from_pairs(top, 2, {(0, 0): 3, (0, 1): 1, (1, 1): 9})
    rng = Random(4)
    for alpha in basis:
        reduced = trace_reduce(form, tow, basis, alpha)
        for _ in range(25):
            vec = [tow.base(rng.randrange(4)) for _ in range(4)]
            blocks = []
            for b in range(2):
                acc = top.zero
                for s in range(2):
                    acc = acc + tow.lift(vec[2 * b + s]) * basis[s]
                blocks.append(acc)
            assert reduced.evaluate(vec) == tow.rel_trace(alpha * form.evaluate(blocks))


def test_trace_reduce_rejects_non_basis():
    tow = tower(5, 1, 2)
    top = tow.top
    form = QuadraticForm.from_pairs(top, 2, {(0, 1): 1})
    with pytest.raises(ValueError):
        trace_reduce(form, tow, [top.one, top(2)], top.one)
    base_form = QuadraticForm.from_pairs(tow.base, 2, {(0, 1): 1})
    with pytest.raises(ValueError):
        trace_reduce(base_form, tow, list(tow.normal_basis()), top.one)


def test_complete_intersection_conic():
    f5 = GF.get(5, 1)
    pts = point_spans(f5, nrc_points(f5, 3))
    assert len(pts) == 6
    forms = nrc_quadric_system(f5, 3)
    verdict = is_complete_intersection(pts, forms)
    assert verdict.ok and verdict.extra is None and verdict.missed is None


def test_complete_intersection_detects_extra_and_missed():
    f5 = GF.get(5, 1)
    pts = point_spans(f5, nrc_points(f5, 3))
    zero = QuadraticForm.zero(f5, 3)
    verdict = is_complete_intersection(pts, [zero])
    assert not verdict.ok and verdict.extra is not None
    off_curve = span([[f5(0), f5(1), f5(0)]])
    verdict2 = is_complete_intersection(pts + [off_curve], nrc_quadric_system(f5, 3))
    assert not verdict2.ok and verdict2.missed == (0, 1, 0)


def test_complete_intersection_budget():
    f5 = GF.get(5, 1)
    pts = point_spans(f5, nrc_points(f5, 3))
    with pytest.raises(ValueError):
        is_complete_intersection(pts, nrc_quadric_system(f5, 3), max_points=10)


def test_vanishing_space_dimension_oracle():
    # rank-nullity against an independently built condition matrix
    f3 = GF.get(3, 1)
    pts = point_spans(f3, nrc_points(f3, 3))
    forms = vanishing_space(pts)
    from pseudoarcs.linalg import rank
    conditions = []
    for p in nrc_points(f3, 3):
        v = list(p.coords)
        conditions.append([v[i] * v[j] for (i, j) in monomial_pairs(3)])
    assert len(forms) == 6 - rank(conditions)
