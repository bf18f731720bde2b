from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import PLANE, curve, run
from semival import analysis
from semival.curve import Branch, Curve, value_of
from semival.errors import InfiniteValue, MissingData, PrecisionInsufficient, ValidationError
from semival.polynomial import parse_polynomial
from semival.values import INF, SatBound, SemiringPresentation, enumerate_semiring

MAXIMAL_4613 = {(0, 0), (4, 2), (6, 3), (8, 4), (10, 5), (12, 6), (14, 7), (16, 8), (18, 9), (20, 10),
             (22, 11), (24, 12), (28, 14)}


def brute_conductor(gens, limit=200):
    member = {0}
    for x in range(1, limit):
        if any(x - g in member for g in gens):
            member.add(x)
    gaps = [x for x in range(limit) if x not in member]
    return gaps[-1] + 1 if gaps else 0


@settings(max_examples=80)
@given(st.lists(st.integers(1, 15), min_size=1, max_size=4))
def test_semigroup_conductor_matches_gap_count(gens):
    from math import gcd
    from functools import reduce
    if reduce(gcd, gens) != 1:
        with pytest.raises(ValueError):
            analysis.semigroup_conductor(gens)
        return
    assert analysis.semigroup_conductor(gens) == brute_conductor(gens)


def test_minimal_generators():
    assert analysis.minimal_generators([4, 6, 8, 10, 13, 17]) == [4, 6, 13]
    assert analysis.minimal_generators([2, 3, 4, 5]) == [2, 3]


def test_branch_semigroups():
    c = curve("branch4613_cusp")
    assert analysis.branch_semigroup(c, 0) == analysis.BranchSemigroup((4, 6, 13), 16)
    assert analysis.branch_semigroup(c, 1) == analysis.BranchSemigroup((2, 3), 2)
    assert analysis.branch_semigroup(curve("parabola"), 0) == analysis.BranchSemigroup((1,), 0)
    assert analysis.branch_semigroup(curve("monomial345"), 0) == analysis.BranchSemigroup((3, 4, 5), 3)
    assert brute_conductor([4, 6, 13]) == 16


def test_branch_semigroup_needs_precision():
    with pytest.raises(PrecisionInsufficient):
        analysis.branch_semigroup(curve("branch4613_cusp").with_precision(10), 0)


def test_intersection_multiplicity():
    assert analysis.intersection_multiplicity(curve("branch4613_cusp"), 0, 1) == 13
    assert analysis.intersection_multiplicity(curve("branch4613_cusp"), 1, 0) == 13
    assert analysis.intersection_multiplicity(curve("xy"), 0, 1) == 1
    assert analysis.intersection_multiplicity(curve("line_parabola"), 0, 1) == 2
    with pytest.raises(MissingData):
        analysis.intersection_multiplicity(curve("axes3"), 0, 1)


def test_shared_component_is_infinite():
    t = ["t"]
    branches = (Branch(1, (parse_polynomial("t", t), parse_polynomial("0", t)), 10),
                Branch(2, (parse_polynomial("t^2", t), parse_polynomial("0", t)), 10))
    y = parse_polynomial("y", ["x", "y"])
    with pytest.raises(InfiniteValue):
        analysis.intersection_multiplicity(Curve(branches, ("x", "y"), (y, y)), 0, 1)


@pytest.mark.parametrize("name", PLANE)
def test_intersection_symmetry(name):
    c = curve(name)
    for j, k in combinations(range(c.r), 2):
        assert analysis.intersection_multiplicity(c, j, k) == analysis.intersection_multiplicity(c, k, j)


def test_conductor():
    assert analysis.conductor(curve("branch4613_cusp")) == analysis.ConductorResult((29, 15), "plane")
    assert analysis.conductor(curve("xy")).sigma == (1, 1)
    assert analysis.conductor(curve("cusp")).sigma == (2,)
    assert analysis.conductor(curve("branch4613_cusp"), (30, 15)).provenance == "user"
    with pytest.raises(ValidationError):
        analysis.conductor(curve("branch4613_cusp"), (28, 15))
    bare = curve("xy")
    with pytest.raises(MissingData):
        analysis.conductor(bare.__class__(bare.branches, bare.variables))


def test_working_bound():
    assert analysis.working_bound(curve("branch4613_cusp"), (29, 15)).bounds == (33, 17)
    assert analysis.working_bound(curve("xy"), (1, 1)).bounds == (2, 2)
    assert analysis.working_bound(curve("cusp"), (2,)).bounds == (4,)
    assert analysis.working_bound(curve("parabola"), (0,)).bounds == (2,)


def test_check_precision():
    c = curve("branch4613_cusp")
    b = analysis.working_bound(c, (29, 15))
    analysis.check_precision(c, b)
    low = c.__class__((c.branches[0].with_precision(20), c.branches[1]), c.variables, c.plane_polys)
    with pytest.raises(PrecisionInsufficient) as info:
        analysis.check_precision(low, b)
    assert info.value.required == 33
    analysis.check_precision(curve("xy").with_precision(2), SatBound((2, 2)))


def test_F_J_examples():
    r = run("branch4613_cusp")
    assert analysis.F_J((4, 2), [0], r.points, r.bound) == set()
    assert analysis.F_J((8, 4), [1], r.points, r.bound) == set()
    xy = SemiringPresentation(((1, INF), (INF, 1)), SatBound((3, 3)))
    assert analysis.F_J((1, 1), [0], enumerate_semiring(xy), xy.bound) == {(1, 2), (1, 3)}
    with pytest.raises(ValueError):
        analysis.F_J((1, 1), [0, 1], enumerate_semiring(xy), xy.bound)


def test_branch4613_cusp_points():
    r = run("branch4613_cusp")
    absolute = analysis.absolute_points(r.points, r.bound)
    finite = analysis.finite_points(absolute, r.bound)
    assert finite == MAXIMAL_4613
    assert len(finite) == analysis.intersection_multiplicity(r.curve, 0, 1)
    for f in r.curve.plane_polys:
        assert analysis.saturate_exact(value_of(f, r.curve), r.bound) in absolute
    irreducible = analysis.irreducible_points(r.points, r.bound)
    assert (4, 2) in irreducible and (10, 5) not in irreducible
    assert irreducible & absolute == {(4, 2), (6, 3), (13, 17), (33, 13)}


def test_xy_points():
    r = run("xy")
    assert analysis.irreducible_points(r.points, r.bound) & analysis.absolute_points(
        r.points, r.bound) == {(1, 2), (2, 1)}


def test_generator_characterizations():
    for name in ["xy", "branch4613_cusp"]:
        r = run(name)
        assert analysis.check_minimal_generators(r.minimal.values, r.points, r.bound)
        assert not analysis.check_minimal_generators(r.minimal.values[1:], r.points, r.bound)
        assert analysis.check_equation_values(r.curve, r.points, r.bound)
    r = run("cusp")
    assert analysis.check_equation_values(r.curve, r.points, r.bound)
    with pytest.raises(MissingData):
        analysis.check_equation_values(curve("axes3"), run("axes3").points, run("axes3").bound)


@pytest.mark.parametrize("name", [n for n in PLANE if curve(n).r > 1])
def test_projection_counts(name):
    r = run(name)
    counts = analysis.projection_counts(r.curve, r.points, r.bound)
    assert counts and all(p.ok for p in counts)


def test_verify_conductor():
    r = run("branch4613_cusp")
    assert analysis.verify_conductor(r.points, (29, 15), r.bound)
    assert not analysis.verify_conductor(r.points, (28, 15), r.bound)
    assert not analysis.verify_conductor(r.points, (30, 15), r.bound)


def brute_absolute(points, bound):
    out = set()
    for g in points:
        finite = bound.finite_coords(g)
        empty = True
        for size in range(1, len(finite)):
            for J in combinations(finite, size):
                for a in points:
                    if all((a[i] > g[i]) if (i in finite and i not in J) else (a[i] == g[i])
                           for i in range(bound.r)):
                        empty = False
        if empty:
            out.add(g)
    return out


def brute_irreducible(points, bound):
    out = set()
    for g in points:
        if g in (bound.zero, bound.top):
            continue
        if not any(bound.add(a, b) == g for a in points for b in points
                   if a != g and b != g and a != bound.zero and b != bound.zero):
            out.add(g)
    return out


generator_sets = st.lists(
    st.tuples(*(st.one_of(st.integers(1, 5), st.just(INF)) for _ in range(3))),
    min_size=1, max_size=4, unique=True).filter(lambda gs: all(g != (INF,) * 3 for g in gs))


@settings(max_examples=40, deadline=None)
@given(generator_sets)
def test_point_classes_match_brute_force(gens):
    bound = SatBound((5, 4, 4))
    pts = enumerate_semiring(SemiringPresentation(tuple(gens), bound))
    assert analysis.absolute_points(pts, bound) == brute_absolute(pts, bound)
    assert analysis.irreducible_points(pts, bound) == brute_irreducible(pts, bound)
