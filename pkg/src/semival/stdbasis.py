"""Reductions, completion and minimalization of Standard Bases.

All work happens on images in ``prod_i Q[t_i]/(t_i^{b_i})``, where ``b`` is a
saturation bound at least the conductor: coordinates that reach ``b_i`` fall
into the Top class and no longer matter.  Polynomials are carried alongside
through a recipe (a combination of G-products) and rebuilt when an element is
adjoined.

Completion processes, for every coordinate ``k`` and finite value ``d``, the
cancellations between the G-products whose ``k``-value is ``d`` (a star
around the first such product suffices to span every cancellation).  Each
cancellation is reduced; a nonzero remainder that admits no further
reduction is adjoined.  At the fixed point every element has a standard
representation, which is the characterization of a Standard Basis by
G-products; ``verify_basis`` then certifies the result independently.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .curve import Curve, value_of
from .errors import NonTermination, PrecisionInsufficient, ValidationError, VerificationFailure
from .linalg import saturated_values
from .polynomial import Polynomial
from .series import TruncatedSeries
from .values import INF, AtLeast, SatBound, SemiringPresentation, enumerate_semiring


@dataclass(frozen=True)
class GProduct:
    exponents: tuple
    value: tuple


@dataclass(frozen=True)
class ReductionStep:
    coordinate: int
    constant: Fraction
    product: GProduct


@dataclass
class StandardBasis:
    elements: list
    values: list
    curve: Curve
    bound: SatBound
    minimal: bool = False
    bound_conditional: bool = False

    @property
    def saturated_values(self) -> list:
        return [self.bound.saturate(v) for v in self.values]

    def presentation(self) -> SemiringPresentation:
        gens = []
        for v in self.values:
            if all(x == 0 for x in v) or v in gens:
                continue
            gens.append(v)
        return SemiringPresentation(tuple(gens), self.bound)

    def formatted(self) -> list:
        return [self.curve.format(g) for g in self.elements]


class _Workspace:
    """Basis elements, their G-products and the reduction machinery."""

    def __init__(self, curve: Curve, bound: SatBound):
        if bound.r != curve.r:
            raise ValueError("bound and curve disagree on the number of branches")
        for b, t in zip(curve.branches, bound.bounds):
            if b.precision < t:
                raise PrecisionInsufficient(
                    f"branch {b.index} has precision {b.precision}, need {t}", required=t)
        self.curve = curve
        self.bound = bound
        self.top = bound.top
        self.polys: list = []
        self.gen_images: list = []
        self.gen_sat: list = []
        one = tuple(TruncatedSeries.constant(1, b) for b in bound.bounds)
        # product table
        self.exps: list = [()]
        self.images: list = [one]
        self.sat: list = [bound.zero]
        self.groups: dict = {}
        self._poly_cache: dict = {}

    # -- values -----------------------------------------------------------
    def sat_of(self, images) -> tuple:
        return tuple(s.order_floor() for s in images)

    def images_of(self, g: Polynomial) -> tuple:
        B = self.bound.bounds
        return tuple(b.evaluate(g, B[i]).truncate(B[i]) for i, b in enumerate(self.curve.branches))

    def padded(self, e: tuple) -> tuple:
        return e + (0,) * (len(self.polys) - len(e))

    # -- table ------------------------------------------------------------
    def adjoin(self, g: Polynomial, images=None) -> int:
        if g.constant_term() != 0:
            raise ValidationError("basis elements must lie in the maximal ideal")
        images = self.images_of(g) if images is None else images
        sat = self.sat_of(images)
        j = len(self.polys)
        self.polys.append(g)
        self.gen_images.append(images)
        self.gen_sat.append(sat)
        new = []
        for idx in range(len(self.exps)):
            cur_img, cur_sat, e = self.images[idx], self.sat[idx], 0
            base = self.padded(self.exps[idx])
            while True:
                cur_img = tuple((a * b).truncate(t) for a, b, t in zip(cur_img, images, self.top))
                cur_sat = self.sat_of(cur_img)
                e += 1
                if cur_sat == self.top:
                    break
                new.append((base[:j] + (e,), cur_img, cur_sat))
        for exps, img, sat in new:
            pid = len(self.exps)
            self.exps.append(exps)
            self.images.append(img)
            self.sat.append(sat)
            for k, d in enumerate(sat):
                if d < self.top[k]:
                    self.groups.setdefault((k, d), []).append(pid)
        return j

    def product_poly(self, exps: tuple) -> Polynomial:
        exps = tuple(exps)
        while exps and exps[-1] == 0:
            exps = exps[:-1]
        if exps in self._poly_cache:
            return self._poly_cache[exps]
        if not exps:
            p = Polynomial.constant(1, self.curve.n)
        else:
            j = len(exps) - 1
            p = self.product_poly(exps[:j] + (exps[j] - 1,)) * self.polys[j]
        self._poly_cache[exps] = p
        return p

    def recipe_poly(self, recipe: dict) -> Polynomial:
        total = Polynomial.constant(0, self.curve.n)
        for e, c in recipe.items():
            total = total + self.product_poly(e) * c
        return total

    # -- reduction --------------------------------------------------------
    def find(self, sat: tuple, k: int, exclude: int | None = None) -> int | None:
        """Product index realizing ``sat`` at ``k`` and lying above it elsewhere."""
        best = None
        for pid in self.groups.get((k, sat[k]), ()):
            if exclude is not None and pid == exclude:
                continue
            ps = self.sat[pid]
            if all(a >= b for a, b in zip(ps, sat)):
                key = self.padded(self.exps[pid])
                if best is None or key < best[0]:
                    best = (key, pid)
        if best is None and sat[k] == 0 and all(x == 0 for x in sat):
            return 0
        return None if best is None else best[1]

    def step(self, images, recipe, pid, k):
        c = images[k].leading_coeff() / self.images[pid][k].leading_coeff()
        images = tuple(a - b.scale(c) for a, b in zip(images, self.images[pid]))
        key = self.padded(self.exps[pid])
        recipe = dict(recipe)
        recipe[key] = recipe.get(key, 0) - c
        if not recipe[key]:
            del recipe[key]
        return images, recipe, c

    def reduce(self, images, recipe, trace: list | None = None):
        """Reduce at the smallest finite coordinate that admits a reduction."""
        while True:
            sat = self.sat_of(images)
            if sat == self.top:
                return images, recipe
            for k in range(len(sat)):
                if sat[k] < self.top[k]:
                    pid = self.find(sat, k)
                    if pid is not None:
                        break
            else:
                return images, recipe
            images, recipe, c = self.step(images, recipe, pid, k)
            if trace is not None:
                trace.append(ReductionStep(k, c, GProduct(self.padded(self.exps[pid]), self.sat[pid])))


def default_seed(curve: Curve) -> list:
    seed = [curve.coordinate(j) for j in range(curve.n)]
    if curve.plane_polys is not None:
        seed.extend(curve.plane_polys)
    return seed


def _exact_value(g: Polynomial, curve: Curve) -> tuple:
    return value_of(g, curve)


def complete(curve: Curve, bound: SatBound, seed: Sequence[Polynomial] | None = None,
             verify: bool = True) -> StandardBasis:
    """Complete ``seed`` (default: coordinates and defining polynomials) to a Standard Basis."""
    seed = default_seed(curve) if seed is None else list(seed)
    ws = _Workspace(curve, bound)
    for g in seed:
        images = ws.images_of(g)
        if ws.sat_of(images) == ws.top or g in ws.polys:
            continue
        ws.adjoin(g, images)
    if not ws.polys:
        raise ValidationError("the seed has no element with a value below the bound")

    guard = int(np.prod([b + 1 for b in bound.bounds])) * bound.r + len(ws.polys)
    hubs: dict = {}
    queued: set = set()
    heap: list = []

    def schedule():
        for (k, d), members in ws.groups.items():
            hub = hubs.setdefault((k, d), members[0])
            for pid in members:
                if pid != hub and (hub, pid) not in queued:
                    queued.add((hub, pid))
                    heapq.heappush(heap, (sum(ws.sat[pid]), d, k, pid, hub))

    schedule()
    adjoined = 0
    while heap:
        _, d, k, pid, hub = heapq.heappop(heap)
        images = ws.images[pid]
        recipe = {ws.padded(ws.exps[pid]): Fraction(1)}
        images, recipe, _ = ws.step(images, recipe, hub, k)
        images, recipe = ws.reduce(images, recipe)
        if ws.sat_of(images) == ws.top:
            continue
        adjoined += 1
        if adjoined > guard:
            raise NonTermination(f"completion adjoined more than {guard} elements")
        ws.adjoin(ws.recipe_poly(recipe), images)
        schedule()

    basis = StandardBasis(list(ws.polys), [_exact_value(g, curve) for g in ws.polys], curve, bound,
                          bound_conditional=curve.plane_polys is None and curve.r > 1)
    if verify:
        result = verify_basis(basis)
        if not result.ok:
            raise VerificationFailure(f"completion failed its certificate at {result.witness}")
    return basis


def find_reduction(g: Polynomial, basis: StandardBasis, k: int) -> ReductionStep | None:
    """A ``k``-reduction of ``g`` modulo the basis, if one exists in the box."""
    ws = _workspace_for(basis)
    images = ws.images_of(g)
    sat = ws.sat_of(images)
    if sat[k] >= ws.top[k]:
        raise ValueError(f"coordinate {k + 1} of the value is not finite below the bound")
    pid = ws.find(sat, k)
    if pid is None:
        return None
    c = images[k].leading_coeff() / ws.images[pid][k].leading_coeff()
    return ReductionStep(k, c, GProduct(ws.padded(ws.exps[pid]), ws.sat[pid]))


def reduce_chain(g: Polynomial, basis: StandardBasis) -> tuple:
    """Reduce ``g`` until it is zero, saturated, or irreducible; return (h, trace)."""
    ws = _workspace_for(basis)
    images = ws.images_of(g)
    trace: list = []
    _, recipe = ws.reduce(images, {}, trace)
    return g + ws.recipe_poly(recipe), trace


def _workspace_for(basis: StandardBasis) -> _Workspace:
    ws = _Workspace(basis.curve, basis.bound)
    for g in basis.elements:
        ws.adjoin(g)
    return ws


@dataclass
class VerifyResult:
    ok: bool
    witness: tuple | None = None
    reason: str = ""
    samples: int = 0
    expected: frozenset = field(default_factory=frozenset, repr=False)
    generated: frozenset = field(default_factory=frozenset, repr=False)


def verify_basis(basis: StandardBasis, samples: int = 50, seed: int = 0,
                 max_degree: int = 5) -> VerifyResult:
    """Certify a basis against the independently computed value set.

    Three checks: monomial witnesses for every enumerated class and finite
    coordinate; equality with the linear-algebra value set; and membership
    of the values of random polynomials.
    """
    bound = basis.bound
    pres = basis.presentation()
    mons = pres.monomial_array()
    generated = enumerate_semiring(pres)
    for gamma in sorted(generated):
        g = np.array(gamma)
        above = mons[(mons >= g).all(axis=1)]
        for k in bound.finite_coords(gamma):
            if not (above[:, k] == gamma[k]).any():
                return VerifyResult(False, gamma, f"no monomial witness at coordinate {k + 1}")
    expected = saturated_values(basis.curve, bound)
    if expected != generated:
        missing = sorted(expected - generated)
        extra = sorted(generated - expected)
        witness = missing[0] if missing else extra[0]
        reason = "value not generated by the basis" if missing else "generated value not attained"
        return VerifyResult(False, witness, reason, 0, expected, generated)
    from .sampling import random_polynomials
    for g in random_polynomials(basis.curve, samples, seed, max_degree):
        gamma = bound.saturate(value_of(g, basis.curve))
        if gamma not in generated:
            return VerifyResult(False, gamma, f"sampled value of {basis.curve.format(g)}",
                                samples, expected, generated)
    return VerifyResult(True, None, "", samples, expected, generated)


def _exact_classes(values: Sequence[tuple], bound: SatBound) -> list:
    """Saturated classes keeping certified infinity apart (encoded as b_i + 1)."""
    out = []
    for v in values:
        row = []
        for x, b in zip(v, bound.bounds):
            if x == INF:
                row.append(b + 1)
            elif isinstance(x, AtLeast) or x >= b:
                row.append(b)
            else:
                row.append(int(x))
        out.append(tuple(row))
    return out


def _exact_products(classes: Sequence[tuple], bound: SatBound) -> frozenset:
    B = bound.bounds

    def add(a, b):
        return tuple(t + 1 if x == t + 1 or y == t + 1 else min(x + y, t)
                     for x, y, t in zip(a, b, B))

    zero = bound.zero
    seen = {zero}
    frontier = [zero]
    while frontier:
        v = frontier.pop()
        for g in classes:
            w = add(v, g)
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return frozenset(seen)


def admits_reduction(value_class: tuple, others: Sequence[tuple], bound: SatBound) -> bool:
    """Whether an element with this class reduces modulo elements with ``others``."""
    prods = _exact_products(others, bound)
    for k, (x, b) in enumerate(zip(value_class, bound.bounds)):
        if x >= b:
            continue
        for m in prods:
            if m[k] == x and all(a >= c for a, c in zip(m, value_class)):
                return True
    return False


def minimalize(basis: StandardBasis) -> StandardBasis:
    """Discard, latest first, every element that reduces modulo the others."""
    classes = _exact_classes(basis.values, basis.bound)
    keep = list(range(len(basis.elements)))
    for idx in reversed(range(len(basis.elements))):
        others = [classes[j] for j in keep if j != idx]
        if others and admits_reduction(classes[idx], others, basis.bound):
            keep.remove(idx)
    return StandardBasis([basis.elements[j] for j in keep], [basis.values[j] for j in keep],
                         basis.curve, basis.bound, minimal=True,
                         bound_conditional=basis.bound_conditional)
