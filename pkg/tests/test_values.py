from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from semival.errors import PrecisionInsufficient, UnresolvedTruncation
from semival.values import (INF, AtLeast, SatBound, SemiringPresentation, check_properties,
                            enumerate_semiring, membership, monomial_values, vv_add, vv_min)

B4613 = SatBound((29, 15))
XY = SemiringPresentation(((1, INF), (INF, 1)), SatBound((2, 2)))


def test_min_and_sum():
    assert vv_min((4, 2), (6, 3)) == (4, 2)
    assert vv_min((13, INF), (INF, 13)) == (13, 13)
    assert vv_add((4, 2), (6, 3)) == (10, 5)
    assert vv_add((13, INF), (INF, 13)) == (INF, INF)
    assert vv_add((7, 9), (0, 0)) == (7, 9)


def test_truncation_deciding_a_minimum_is_refused():
    assert vv_min((3, 1), (AtLeast(5), 2)) == (3, 1)
    with pytest.raises(UnresolvedTruncation):
        vv_min((7, 1), (AtLeast(5), 2))


def test_saturate():
    assert B4613.saturate((29, 15)) == (29, 15) == B4613.top
    assert B4613.saturate((4, 2)) == (4, 2)
    assert B4613.saturate((13, AtLeast(40))) == (13, 15)
    with pytest.raises(PrecisionInsufficient):
        B4613.saturate((13, AtLeast(10)))


def test_monomial_values():
    assert monomial_values(XY.generators, XY.bound) == {(0, 0), (1, 2), (2, 1), (2, 2)}
    assert monomial_values([(1, 1)], SatBound((3, 3))) == {(0, 0), (1, 1), (2, 2), (3, 3)}
    gens = ((4, 2), (6, 3), (13, INF), (INF, 13))
    assert (10, 5) in monomial_values(gens, B4613)


def test_membership_and_enumeration():
    big = SemiringPresentation(((1, INF), (INF, 1)), SatBound((8, 8)))
    assert membership((3, 5), big)
    assert not membership((0, 1), big)
    assert enumerate_semiring(big) == {(0, 0)} | set(product(range(1, 9), repeat=2))
    cusp = SemiringPresentation(((2,), (3,)), SatBound((4,)))
    assert enumerate_semiring(cusp) == {(0,), (2,), (3,), (4,)}
    pres4613 = SemiringPresentation(((4, 2), (6, 3), (13, INF), (INF, 13)), B4613)
    assert membership((13, 13), pres4613)
    points = enumerate_semiring(pres4613)
    assert {(4, 2), (6, 3), (8, 4), (10, 5), (12, 6)} <= points
    assert not {(5, 2), (4, 3)} & points


def test_presentation_rejects_bad_generators():
    with pytest.raises(ValueError):
        SemiringPresentation(((0, 0),), SatBound((3, 3)))
    with pytest.raises(ValueError):
        SemiringPresentation(((1, 2), (1, 2)), SatBound((3, 3)))


def test_property_violations():
    bound = SatBound((5, 5))
    found = check_properties({(0, 0), (1, 2), (1, 3)}, bound)
    assert [(v.prop, v.points) for v in found] == [("b", ((1, 2), (1, 3)))]
    assert {v.prop for v in check_properties({(0, 0), (0, 3)}, bound)} == {"a", "b"}
    assert [v.prop for v in check_properties({(0, 0), (1, 3), (2, 1)}, bound)] == ["c"]
    assert check_properties(enumerate_semiring(XY), XY.bound) == []


def brute_properties(points, bound):
    # direct transcription of the three closure properties
    pts = set(points)
    bad = set()
    for a in pts:
        if 0 in a and any(a):
            bad.add("a")
        for b in pts:
            if tuple(map(min, a, b)) not in pts:
                bad.add("c")
            for k in range(bound.r):
                if a == b or a[k] != b[k] or a[k] >= bound.bounds[k]:
                    continue
                ok = any(e[k] > a[k] and all(
                    (e[i] >= a[i]) if a[i] == b[i] else (e[i] == min(a[i], b[i]))
                    for i in range(bound.r) if i != k) for e in pts)
                if not ok:
                    bad.add("b")
    return bad


generator_sets = st.lists(st.tuples(st.one_of(st.integers(1, 6), st.just(INF)),
                                    st.one_of(st.integers(1, 6), st.just(INF))),
                          min_size=1, max_size=4, unique=True).filter(
    lambda gs: all(g != (INF, INF) for g in gs))


@settings(max_examples=60, deadline=None)
@given(generator_sets)
def test_generated_sets_satisfy_min_closure(gens):
    bound = SatBound((7, 7))
    points = enumerate_semiring(SemiringPresentation(tuple(gens), bound))
    found = {v.prop for v in check_properties(points, bound)}
    assert found == brute_properties(points, bound)
    assert "a" not in found and "c" not in found


@settings(max_examples=60, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=8))
def test_property_checker_matches_brute_force(points):
    bound = SatBound((4, 4))
    assert {v.prop for v in check_properties(points, bound)} == brute_properties(points, bound)


@settings(max_examples=40, deadline=None)
@given(generator_sets, st.tuples(st.integers(1, 6), st.integers(1, 6)))
def test_enumeration_is_monotone_in_generators(gens, extra):
    bound = SatBound((7, 7))
    before = enumerate_semiring(SemiringPresentation(tuple(gens), bound))
    if extra in gens:
        return
    after = enumerate_semiring(SemiringPresentation(tuple(gens) + (extra,), bound))
    assert before <= after


def test_saturated_semiring_laws_on_enumeration():
    bound = SatBound((6, 4))
    pres = SemiringPresentation(((2, 1), (3, INF), (INF, 3)), bound)
    pts = sorted(enumerate_semiring(pres))
    for a in pts:
        assert bound.add(a, bound.zero) == a
        assert vv_min(a, bound.top) == a
        for b in pts:
            assert vv_min(a, b) in pts
            assert bound.add(a, b) == bound.add(b, a)
            for c in pts:
                assert bound.add(a, vv_min(b, c)) == vv_min(bound.add(a, b), bound.add(a, c))
