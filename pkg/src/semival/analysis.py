"""Derived invariants: branch semigroups, conductor, absolute and irreducible points."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .curve import Curve
from .errors import InfiniteValue, MissingData, PrecisionInsufficient, ValidationError
from .values import INF, AtLeast, SatBound


# -- numerical semigroups ----------------------------------------------------

def semigroup_elements(generators: Sequence[int], upto: int) -> list:
    """Elements of the additive monoid generated by ``generators`` below ``upto``."""
    member = np.zeros(max(upto, 1), dtype=bool)
    member[0] = True
    for x in range(1, upto):
        member[x] = any(g <= x and member[x - g] for g in generators)
    return [int(x) for x in np.flatnonzero(member)]


def semigroup_conductor(generators: Sequence[int]) -> int:
    """Smallest c with c + N inside the semigroup (0 when it is all of N)."""
    gens = sorted(set(int(g) for g in generators if g > 0))
    if not gens or reduce(math.gcd, gens) != 1:
        raise ValueError("generators must have gcd 1")
    # every run of min(gens) consecutive members ends the gaps
    m = gens[0]
    member = [True]
    run, x = 1 if m == 1 else 0, 0
    while run < m:
        x += 1
        ok = any(g <= x and member[x - g] for g in gens)
        member.append(ok)
        run = run + 1 if ok else 0
    gaps = [i for i, ok in enumerate(member) if not ok]
    return gaps[-1] + 1 if gaps else 0


def minimal_generators(generators: Iterable[int]) -> list:
    gens = sorted(set(int(g) for g in generators if g > 0))
    out = []
    for g in gens:
        if g not in semigroup_elements(out, g + 1):
            out.append(g)
    return out


@dataclass(frozen=True)
class BranchSemigroup:
    generators: tuple
    conductor: int

    def contains(self, x: int) -> bool:
        return x >= self.conductor or x in semigroup_elements(self.generators, x + 1)


def branch_semigroup(curve: Curve, i: int) -> BranchSemigroup:
    """Value semigroup of branch ``i`` (0-based), by one-branch completion.

    The saturation bound doubles until the generators found have gcd 1 and
    their conductor plus the multiplicity fits below it; then every minimal
    generator is visible and the semigroup is determined.
    """
    from .stdbasis import complete, minimalize

    sub = curve.restrict([i])
    branch = sub.branches[0]
    m = branch.multiplicity()
    b = max(2 * m, 2)
    while True:
        b = min(b, branch.precision)
        basis = minimalize(complete(sub, SatBound((b,))))
        gens = minimal_generators(v[0] for v in basis.values if isinstance(v[0], int) and v[0] < b)
        if gens and reduce(math.gcd, gens) == 1:
            c = semigroup_conductor(gens)
            if c + m <= b:
                return BranchSemigroup(tuple(gens), c)
        if b >= branch.precision:
            raise PrecisionInsufficient(
                f"branch {i + 1}: precision {branch.precision} does not reach the conductor",
                required=2 * b)
        b *= 2


# -- conductor and bounds ----------------------------------------------------

def intersection_multiplicity(curve: Curve, j: int, k: int) -> int:
    """Order of f_j along branch k, checked against the order of f_k along branch j."""
    if curve.plane_polys is None:
        raise MissingData("intersection multiplicities need defining polynomials")
    if j == k:
        raise ValueError("intersection multiplicity needs two distinct branches")

    def order(f_idx, b_idx):
        b = curve.branches[b_idx]
        s = b.evaluate(curve.plane_polys[f_idx])
        if s.is_zero():
            exact = b.evaluate_exact(curve.plane_polys[f_idx])
            if exact is not None and exact.is_zero():
                raise InfiniteValue(f"branches {f_idx + 1} and {b_idx + 1} share a component")
            raise PrecisionInsufficient(
                f"order of polynomial {f_idx + 1} along branch {b_idx + 1} exceeds the precision",
                required=2 * b.precision)
        return s.order()

    a, b = order(j, k), order(k, j)
    if a != b:
        raise ValidationError(f"intersection multiplicity is not symmetric: {a} != {b}")
    return a


@dataclass(frozen=True)
class ConductorResult:
    sigma: tuple
    provenance: str  # "plane", "branch", "user" or "verified"


def conductor(curve: Curve, user_sigma: Sequence[int] | None = None,
              semigroups: Sequence[BranchSemigroup] | None = None) -> ConductorResult:
    """The conductor, from the plane formula, a single branch, or the user."""
    if user_sigma is None and curve.sigma is not None:
        user_sigma = curve.sigma
    if curve.plane_polys is not None or curve.r == 1:
        if semigroups is None:
            semigroups = [branch_semigroup(curve, i) for i in range(curve.r)]
        sigma = []
        for i in range(curve.r):
            total = sum(intersection_multiplicity(curve, j, i) for j in range(curve.r) if j != i)
            sigma.append(total + semigroups[i].conductor)
        sigma = tuple(sigma)
        provenance = "plane" if curve.r > 1 else "branch"
        if user_sigma is not None:
            user_sigma = tuple(int(s) for s in user_sigma)
            if any(u < s for u, s in zip(user_sigma, sigma)):
                raise ValidationError(f"supplied conductor bound {user_sigma} is below {sigma}")
            sigma, provenance = user_sigma, "user"
    elif user_sigma is not None:
        sigma, provenance = tuple(int(s) for s in user_sigma), "user"
    else:
        raise MissingData("the conductor needs defining polynomials or a supplied bound")
    if len(sigma) != curve.r:
        raise ValidationError("the conductor needs one entry per branch")
    check_precision(curve, working_bound(curve, sigma))
    return ConductorResult(sigma, provenance)


def working_bound(curve: Curve, sigma: Sequence[int]) -> SatBound:
    """Saturation bound sigma_i + m_i (at least m_i + 1).

    Above the conductor values only matter up to one multiplicity: every
    minimal generator has its finite coordinates below this bound.  A smooth
    branch (sigma_i = 0) still needs room for its own multiplicity.
    """
    return SatBound(tuple(max(int(s), 1) + b.multiplicity()
                          for s, b in zip(sigma, curve.branches)))


def check_precision(curve: Curve, bound: SatBound) -> None:
    for i, (b, need) in enumerate(zip(curve.branches, bound.bounds)):
        if b.precision < need:
            raise PrecisionInsufficient(
                f"branch {i + 1} has precision {b.precision}, need at least {need}", required=need)


def verify_conductor(points: Iterable[Sequence[int]], sigma: Sequence[int], bound: SatBound) -> bool:
    """Whether sigma is exactly the conductor of the saturated value set."""
    codes = set(bound.encode(np.array(sorted(points), dtype=np.int64).reshape(-1, bound.r)).tolist())
    box = bound.box()

    def all_above(s):
        upper = box[(box >= np.array(s)).all(axis=1)]
        return all(c in codes for c in bound.encode(upper).tolist())

    if not all_above(sigma):
        return False
    for i, s in enumerate(sigma):
        if s > 0:
            lower = list(sigma)
            lower[i] -= 1
            if all_above(lower):
                return False
    return True


# -- points ------------------------------------------------------------------

def saturate_exact(value: Sequence, bound: SatBound) -> tuple:
    """Saturated class of an exact value vector (infinity joins Top)."""
    return bound.saturate(tuple(b if x == INF or isinstance(x, AtLeast) and x.p >= b else x
                                for x, b in zip(value, bound.bounds)))


def _array(points: Iterable[Sequence[int]], r: int) -> np.ndarray:
    return np.array(sorted(set(tuple(p) for p in points)), dtype=np.int64).reshape(-1, r)


def F_J(gamma: Sequence[int], J: Iterable[int], points: Iterable[Sequence[int]],
        bound: SatBound) -> set:
    """Points equal to gamma on J and on its Top coordinates, strictly above elsewhere."""
    finite = bound.finite_coords(gamma)
    J = set(J)
    if not J or not J < set(finite):
        raise ValueError("J must be a nonempty proper subset of the finite coordinates")
    pts = _array(points, bound.r)
    g = np.array(gamma)
    above = [i for i in finite if i not in J]
    equal = [i for i in range(bound.r) if i not in above]
    mask = (pts[:, equal] == g[equal]).all(axis=1) & (pts[:, above] > g[above]).all(axis=1)
    return {tuple(int(x) for x in p) for p in pts[mask]}


def absolute_points(points: Iterable[Sequence[int]], bound: SatBound) -> set:
    """Points whose fibres F_J are empty for every nonempty proper J.

    Points with at most one finite coordinate are absolute vacuously.
    """
    pts = _array(points, bound.r)
    out = set()
    for g in pts:
        finite = bound.finite_coords(g)
        eq = pts == g
        gt = pts > g
        absolute = True
        for size in range(1, len(finite)):
            for J in combinations(finite, size):
                above = [i for i in finite if i not in J]
                equal = [i for i in range(bound.r) if i not in above]
                if (eq[:, equal].all(axis=1) & gt[:, above].all(axis=1)).any():
                    absolute = False
                    break
            if not absolute:
                break
        if absolute:
            out.add(tuple(int(x) for x in g))
    return out


def irreducible_points(points: Iterable[Sequence[int]], bound: SatBound) -> set:
    """Points other than 0 and all-Top that are no sum of two other points.

    Top reads as infinity: it absorbs sums, and a finite coordinate must be
    hit exactly.
    """
    pts = _array(points, bound.r)
    top = np.array(bound.top)
    zero = (pts == 0).all(axis=1)
    full = (pts == top).all(axis=1)
    inner = pts[~zero & ~full]
    sums = np.minimum(inner[:, None, :] + inner[None, :, :], top).reshape(-1, bound.r)
    reducible = set(bound.encode(sums).tolist())
    codes = bound.encode(inner).tolist()
    return {tuple(int(x) for x in p) for p, c in zip(inner, codes) if c not in reducible}


def finite_points(points: Iterable[Sequence[int]], bound: SatBound) -> set:
    return {tuple(p) for p in points if len(bound.finite_coords(p)) == bound.r}


def project(points: Iterable[Sequence[int]], bound: SatBound, coords: Sequence[int]) -> tuple:
    sub = SatBound(tuple(bound.bounds[i] for i in coords))
    return {tuple(p[i] for i in coords) for p in points}, sub


# -- checks ------------------------------------------------------------------

def check_minimal_generators(minimal_values: Sequence[Sequence], points: Iterable[Sequence[int]],
                    bound: SatBound) -> bool:
    """Minimal basis values coincide with the irreducible absolute points."""
    points = list(points)
    classes = [saturate_exact(v, bound) for v in minimal_values]
    if len(set(classes)) != len(classes):
        return False
    return set(classes) == irreducible_points(points, bound) & absolute_points(points, bound)


def check_equation_values(curve: Curve, points: Iterable[Sequence[int]], bound: SatBound) -> bool:
    """Irreducible absolute points with a Top coordinate are the values of the f_i."""
    from .curve import value_of

    if curve.plane_polys is None:
        raise MissingData("this check needs defining polynomials")
    if curve.r == 1:
        return True
    points = list(points)
    special = {p for p in irreducible_points(points, bound) & absolute_points(points, bound)
               if len(bound.finite_coords(p)) < bound.r}
    return special == {saturate_exact(value_of(f, curve), bound) for f in curve.plane_polys}


@dataclass(frozen=True)
class PairCount:
    j: int
    k: int
    absolute: int
    intersection: int

    @property
    def ok(self) -> bool:
        return self.absolute == self.intersection


def projection_counts(curve: Curve, points: Iterable[Sequence[int]], bound: SatBound) -> list:
    """Finite absolute points of each plane projection against I(f_j, f_k)."""
    points = list(points)
    out = []
    for j, k in combinations(range(curve.r), 2):
        proj, sub = project(points, bound, (j, k))
        count = len(finite_points(absolute_points(proj, sub), sub))
        out.append(PairCount(j, k, count, intersection_multiplicity(curve, j, k)))
    return out
