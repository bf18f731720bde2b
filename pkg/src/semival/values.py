"""Extended naturals, value vectors and the saturated tropical semiring.

Exact value vectors hold entries that are ``int`` (finite), ``INF`` (the
element vanishes on the branch) or :class:`AtLeast` (truncation could only
bound the order).  Saturated vectors are plain ``int`` tuples clamped at a
per-coordinate bound ``b_i``: the entry ``b_i`` is the Top class, standing
for every value ``>= b_i`` together with infinity.  Collapsing that range is
sound whenever ``b_i`` is at least the conductor.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import PrecisionInsufficient, UnresolvedTruncation
from .series import AtLeast

INF = math.inf

__all__ = [
    "INF", "AtLeast", "SatBound", "SemiringPresentation", "Violation",
    "vv_min", "vv_add", "is_finite", "monomial_values", "membership",
    "enumerate_semiring", "check_properties",
]


def is_finite(x) -> bool:
    return isinstance(x, int)


def _min_entry(a, b):
    if isinstance(a, AtLeast) and isinstance(b, AtLeast):
        return AtLeast(min(a.p, b.p))
    if isinstance(a, AtLeast):
        a, b = b, a
    if isinstance(b, AtLeast):
        if a == INF:
            return b
        if a <= b.p:
            return a
        raise UnresolvedTruncation(f"min({a}, {b}) depends on unknown coefficients")
    return min(a, b)


def _add_entry(a, b):
    if a == INF or b == INF:
        return INF
    if isinstance(a, AtLeast) or isinstance(b, AtLeast):
        pa = a.p if isinstance(a, AtLeast) else a
        pb = b.p if isinstance(b, AtLeast) else b
        return AtLeast(pa + pb)
    return a + b


def vv_min(alpha: Sequence, beta: Sequence) -> tuple:
    """Tropical sum: coordinatewise minimum."""
    return tuple(_min_entry(a, b) for a, b in zip(alpha, beta, strict=True))


def vv_add(alpha: Sequence, beta: Sequence) -> tuple:
    """Tropical product: coordinatewise sum, infinity absorbing."""
    return tuple(_add_entry(a, b) for a, b in zip(alpha, beta, strict=True))


@dataclass(frozen=True)
class SatBound:
    """Per-coordinate saturation bound; entry ``b_i`` encodes the Top class."""

    bounds: tuple

    def __post_init__(self):
        object.__setattr__(self, "bounds", tuple(int(b) for b in self.bounds))
        if any(b < 1 for b in self.bounds):
            raise ValueError("saturation bounds must be positive")

    @property
    def r(self) -> int:
        return len(self.bounds)

    @property
    def top(self) -> tuple:
        return self.bounds

    @property
    def zero(self) -> tuple:
        return (0,) * len(self.bounds)

    def saturate(self, alpha: Sequence) -> tuple:
        out = []
        for i, (a, b) in enumerate(zip(alpha, self.bounds, strict=True)):
            if isinstance(a, AtLeast):
                if a.p < b:
                    raise PrecisionInsufficient(
                        f"coordinate {i + 1} is only known to be >= {a.p}, need {b}", required=b)
                out.append(b)
            elif a == INF or a >= b:
                out.append(b)
            else:
                out.append(int(a))
        return tuple(out)

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple:
        return tuple(min(x + y, t) for x, y, t in zip(a, b, self.bounds))

    def is_top(self, gamma: Sequence[int], i: int) -> bool:
        return gamma[i] >= self.bounds[i]

    def finite_coords(self, gamma: Sequence[int]) -> list:
        return [i for i, (g, b) in enumerate(zip(gamma, self.bounds)) if g < b]

    def box(self) -> np.ndarray:
        """Every saturated class, one per row."""
        grids = np.indices(tuple(b + 1 for b in self.bounds))
        return grids.reshape(len(self.bounds), -1).T.copy()

    def encode(self, points: np.ndarray) -> np.ndarray:
        """Mixed-radix integer code of each row, for fast set membership."""
        strides = np.cumprod((1,) + tuple(b + 1 for b in self.bounds[:-1]))
        return np.asarray(points, dtype=np.int64) @ strides

    def to_display(self, gamma: Sequence[int]) -> tuple:
        return tuple("Top" if g >= b else int(g) for g, b in zip(gamma, self.bounds))


def monomial_values(generators: Iterable[Sequence[int]], bound: SatBound) -> frozenset:
    """Saturated values of every tropical product of the generators.

    ``generators`` are already saturated.  Exponent search is replaced by a
    closure over values, which terminates because the box is finite.
    """
    gens = sorted(set(tuple(g) for g in generators))
    zero = bound.zero
    seen = {zero}
    frontier = [zero]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = bound.add(v, g)
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return frozenset(seen)


def _min_closure_mask(candidates: np.ndarray, monomials: np.ndarray, chunk: int = 4096) -> np.ndarray:
    """For each candidate, whether it is the minimum of the monomials above it."""
    out = np.zeros(len(candidates), dtype=bool)
    big = np.iinfo(np.int64).max
    for s in range(0, len(candidates), chunk):
        c = candidates[s:s + chunk]
        above = (monomials[None, :, :] >= c[:, None, :]).all(axis=2)
        masked = np.where(above[:, :, None], monomials[None, :, :], big)
        out[s:s + chunk] = above.any(axis=1) & (masked.min(axis=1) == c).all(axis=1)
    return out


@dataclass(frozen=True)
class SemiringPresentation:
    """Finitely many exact generator values and the saturation bound."""

    generators: tuple
    bound: SatBound

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError("generators must be pairwise distinct")
        if any(all(x == 0 for x in g) for g in gens):
            raise ValueError("the zero vector is not a generator")
        object.__setattr__(self, "generators", gens)

    def saturated_generators(self) -> list:
        return [self.bound.saturate(g) for g in self.generators]

    def monomials(self) -> frozenset:
        return monomial_values(self.saturated_generators(), self.bound)

    def monomial_array(self) -> np.ndarray:
        mons = sorted(self.monomials() | {self.bound.top})
        return np.array(mons, dtype=np.int64).reshape(-1, self.bound.r)

    def contains(self, gamma: Sequence[int]) -> bool:
        return membership(gamma, self)

    def enumerate(self) -> frozenset:
        return enumerate_semiring(self)


def membership(gamma: Sequence[int], presentation: SemiringPresentation,
               monomials: np.ndarray | None = None) -> bool:
    """Whether a saturated vector lies in the generated semiring.

    ``gamma`` belongs iff every coordinate is attained by some monomial lying
    coordinatewise above it; the all-Top class is always present.
    """
    if monomials is None:
        monomials = presentation.monomial_array()
    g = np.asarray([gamma], dtype=np.int64)
    return bool(_min_closure_mask(g, monomials)[0])


def enumerate_semiring(presentation: SemiringPresentation) -> frozenset:
    """The saturated image of the semiring: min-closure of the monomials."""
    bound = presentation.bound
    mons = presentation.monomial_array()
    box = bound.box()
    mask = _min_closure_mask(box, mons)
    return frozenset(tuple(int(x) for x in row) for row in box[mask])


@dataclass(frozen=True)
class Violation:
    prop: str
    points: tuple
    detail: str = ""


def check_properties(points: Iterable[Sequence[int]], bound: SatBound) -> list:
    """Exhaustively test the three closure properties of a value set.

    (a) a zero coordinate forces the zero vector; (b) two points agreeing on
    a finite coordinate k admit a point strictly above at k, equal to the
    minimum where they differ and not below it elsewhere; (c) closure under
    coordinatewise minimum.  Top is read as infinity.
    """
    pts = np.array(sorted(set(tuple(p) for p in points)), dtype=np.int64).reshape(-1, bound.r)
    top = np.array(bound.top)
    violations = []

    for p in pts:
        if (p == 0).any() and not (p == 0).all():
            violations.append(Violation("a", (tuple(int(x) for x in p),), "zero coordinate"))

    codes = bound.encode(pts)
    code_set = np.sort(codes)
    for idx, p in enumerate(pts):
        rest = pts[idx + 1:]
        present = np.isin(bound.encode(np.minimum(p, rest)), code_set)
        for q in rest[~present]:
            violations.append(Violation("c", (tuple(int(x) for x in p), tuple(int(x) for x in q)),
                                        "minimum missing"))

    r = bound.r
    for a_idx, alpha in enumerate(pts):
        for k in range(r):
            if alpha[k] >= top[k]:
                continue
            same = (pts[:, k] == alpha[k])
            same[: a_idx + 1] = False
            betas = pts[same]
            if not len(betas):
                continue
            eq = betas == alpha
            mins = np.minimum(betas, alpha)
            g = pts[None, :, :]
            ok = np.where(eq[:, None, :], g >= alpha[None, None, :], g == mins[:, None, :])
            ok[:, :, k] = pts[None, :, k] > alpha[k]
            has = ok.all(axis=2).any(axis=1)
            for beta in betas[~has]:
                violations.append(Violation(
                    "b", (tuple(int(x) for x in alpha), tuple(int(x) for x in beta)),
                    f"no witness above coordinate {k + 1}"))
    return violations
