"""Acceptance gate.

One test per numbered criterion; run with -v to get one pass/fail line
each.  Criterion 6 carries a companion expected-failure documenting the
known small-field gap at (k, q) = (5, 7), where the vanishing dimension
is 7 rather than binom(4, 2) = 6; the other five pairs are asserted
hard.  Runtime budgets are design expectations and are not asserted,
to keep the gate robust on slow machines.
"""

import itertools
import math
from random import Random

import pytest

from pseudoarcs.codes import (ERASED, encode, erasure_decode,
                              evaluation_code, extend_with_derivatives,
                              fold_columns, is_mds, linear_equivalence_test,
                              min_distance)
from pseudoarcs.gf import Poly, factor_prime_power, tower
from pseudoarcs.linalg import rank
from pseudoarcs.nrc import frobenius_orbit_reps, nrc_points, orbit_rep_count
from pseudoarcs.pg54 import verify_fixture
from pseudoarcs.projgeo import Subspace, block_spread, canonical_spread, spread_membership
from pseudoarcs.pseudoarc import (build_imaginary_arc, extend_with_osculating,
                                  is_pseudo_arc, thas_bound)
from pseudoarcs.quadrics import (QuadraticForm, is_complete_intersection,
                                 nrc_quadric_system, trace_reduce,
                                 vanishing_space)

# (h, k, q) triples for the desk-scale pseudo-arc checks
DESK_TRIPLES = [(2, 2, 5), (2, 2, 7), (2, 3, 7), (3, 2, 7)]


def tower_for(q, h):
    p, e = factor_prime_power(q)
    return tower(p, e, h)


def prime_powers(limit):
    out = []
    for q in range(2, limit + 1):
        try:
            factor_prime_power(q)
        except ValueError:
            continue
        out.append(q)
    return out


def full_code(h, k, q):
    tow = tower_for(q, h)
    return evaluation_code(tow, list(frobenius_orbit_reps(tow)), k)


def point_subspaces(field, pts):
    return [Subspace(field, len(p.coords), [list(p.coords)]) for p in pts]


def test_criterion_01_orbit_counts_match_mobius_formula():
    # exhaustive for h >= 2 while the top field stays within 4096,
    # spot checks along h = 1 where the count is plainly q
    checked = 0
    for h in range(2, 13):
        for q in prime_powers(4096):
            if q ** h > 4096:
                continue
            tow = tower_for(q, h)
            assert len(frobenius_orbit_reps(tow)) == orbit_rep_count(q, h), (h, q)
            checked += 1
    assert checked == 57
    for q in prime_powers(64):
        tow = tower_for(q, 1)
        assert len(frobenius_orbit_reps(tow)) == orbit_rep_count(q, 1) == q
    assert orbit_rep_count(5, 2) == 10
    assert orbit_rep_count(4, 3) == 20


def test_criterion_02_imaginary_families_are_pseudo_arcs():
    for h, k, q in DESK_TRIPLES:
        arc = build_imaginary_arc(tower_for(q, h), k)
        assert len(arc.elements) == orbit_rep_count(q, h), (h, k, q)
        verdict = is_pseudo_arc(arc, k)
        assert verdict.ok, (h, k, q, verdict.witness)


def test_criterion_03_extension_sizes_and_thas_bound():
    for h, k, q in [(2, 2, 5), (2, 2, 7)]:
        arc = extend_with_osculating(build_imaginary_arc(tower_for(q, h), k))
        size = len(arc.elements)
        assert size == orbit_rep_count(q, h) + q + 1, (h, k, q)
        assert is_pseudo_arc(arc, k).ok, (h, k, q)
        assert thas_bound(h, k, q) == q ** h + k - 1  # odd q
        assert size <= thas_bound(h, k, q)
    assert len(extend_with_osculating(
        build_imaginary_arc(tower_for(5, 2), 2)).elements) == 16
    assert len(extend_with_osculating(
        build_imaginary_arc(tower_for(7, 2), 2)).elements) == 29


def test_criterion_04_pg54_fixture_verifies_end_to_end():
    checks = verify_fixture()
    by_name = {name: (ok, detail) for name, ok, detail in checks}
    for required in ("lines-pseudo-arc", "curve-bijection",
                     "standard-construction", "code-parameters"):
        assert required in by_name
    failures = [name for name, ok, _ in checks if not ok]
    assert failures == [], failures
    assert "(11, 4096, 9)" in by_name["code-parameters"][1]


def test_criterion_05_no_quadric_through_the_built_arcs():
    for h, k, q in [(2, 2, 5), (2, 2, 7)]:
        arc = build_imaginary_arc(tower_for(q, h), k)
        assert vanishing_space(arc.elements) == [], (h, k, q)


def test_criterion_06_nrc_vanishing_dimension_and_system_span():
    for k, q in [(3, 7), (3, 11), (4, 7), (4, 11), (5, 11)]:
        field = tower_for(q, 1).base
        basis = vanishing_space(point_subspaces(field, nrc_points(field, k)))
        expected = math.comb(k - 1, 2)
        assert len(basis) == expected, (k, q)
        system = nrc_quadric_system(field, k)
        assert len(system) == expected
        stacked = [list(f.coeffs) for f in basis]
        assert rank(stacked) == expected
        assert rank(stacked + [list(f.coeffs) for f in system]) == expected


def test_criterion_06_small_field_gap_at_k5_q7():
    # Nearest attainable statement for the remaining pair: at (5, 7)
    # the 8 curve points impose too few conditions and the dimension is
    # 7, one above binom(4, 2); the extra form below vanishes on the
    # curve but is outside the span of the standard system.
    field = tower_for(7, 1).base
    pts = nrc_points(field, 5)
    basis = vanishing_space(point_subspaces(field, pts))
    assert len(basis) == 7
    extra = QuadraticForm.from_pairs(field, 5, {(3, 4): 1, (0, 1): 6})
    assert all(not extra.evaluate(list(p.coords)) for p in pts)
    system = nrc_quadric_system(field, 5)
    assert rank([list(f.coeffs) for f in system] +
                [list(extra.coeffs)]) == len(system) + 1
    pytest.xfail("dimension at (k, q) = (5, 7) is 7, not binom(4,2) = 6; "
                 "q = 7 < 2k - 1 is below the agreement threshold")


def test_criterion_07_desarguesian_conic_is_complete_intersection():
    tow = tower_for(25, 1)
    top = tow.top
    spread = block_spread(tow, 3)
    subs = [spread.element_through(p.coords) for p in nrc_points(top, 3)]
    assert len(subs) == 26
    conic = QuadraticForm.from_pairs(top, 3, {(0, 2): top.one, (1, 1): top(4)})
    assert all(not conic.evaluate(list(p.coords)) for p in nrc_points(top, 3))
    basis = tow.normal_basis()
    forms = [trace_reduce(conic, tow, basis, alpha) for alpha in basis]
    verdict = is_complete_intersection(subs, forms)
    assert verdict.ok, (verdict.extra, verdict.missed)


def test_criterion_08_folded_code_columns_equal_the_arc():
    for h, k, q in DESK_TRIPLES:
        tow = tower_for(q, h)
        folded = fold_columns(full_code(h, k, q))
        arc = build_imaginary_arc(tow, k)
        assert folded == list(arc.elements), (h, k, q)


def test_criterion_09_distance_meets_singleton_with_equality():
    code = full_code(2, 2, 5)
    assert (code.n, code.size) == (10, 625)
    d = min_distance(code)
    assert d == 9 == code.n - code.k_msg + 1
    assert is_mds(code)  # geometric route, cross-checked inside


def test_criterion_10_every_minimal_erasure_pattern_decodes():
    tow = tower_for(5, 2)
    base_code = full_code(2, 2, 5)
    ext_code = extend_with_derivatives(base_code, list(tow.base.elements()),
                                       include_infty=True)
    rng = Random(10)
    for code, patterns in [(base_code, 45), (ext_code, 120)]:
        messages = [Poly(tow.base, [tow.base(rng.randrange(5)) for _ in range(4)])
                    for _ in range(50)]
        words = [encode(m, code) for m in messages]
        survivors_list = list(itertools.combinations(range(code.n), 2))
        assert len(survivors_list) == patterns
        for survivors in survivors_list:
            for m, w in zip(messages, words):
                received = [w[j] if j in survivors else ERASED
                            for j in range(code.n)]
                assert erasure_decode(received, code).coeffs == m.coeffs


def test_criterion_11_not_contained_in_the_canonical_spread():
    tow = tower_for(5, 2)
    arc = build_imaginary_arc(tow, 2)
    spread = canonical_spread(tow, 2)
    for el in arc.elements:
        assert not spread_membership(el, spread)
    verdict = linear_equivalence_test(full_code(2, 2, 5), spread)
    assert not verdict.ok
    assert verdict.witness == (0,)
