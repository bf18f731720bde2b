"""Algebroid curves given by branch parameterizations, and the value map."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InfiniteValue, PrecisionInsufficient, ValidationError
from .polynomial import Polynomial
from .series import AtLeast, TruncatedSeries
from .values import INF


@dataclass(frozen=True)
class Branch:
    """One branch ``t -> (x_1(t), ..., x_n(t))``.

    ``param_polys`` are the parameterizations as univariate polynomials.  When
    ``exact`` is true they are the parameterization itself, so an element that
    cancels identically after substitution has infinite value; otherwise they
    are truncations and only orders below ``precision`` are ever claimed.
    """

    index: int
    param_polys: tuple
    precision: int
    symbol: str = "t"
    exact: bool = True

    def __post_init__(self):
        if self.precision < 1:
            raise ValidationError(f"branch {self.index}: precision must be positive")
        for j, p in enumerate(self.param_polys):
            if p.nvars != 1:
                raise ValidationError(f"branch {self.index}: parameter {j + 1} is not univariate")

    @property
    def n(self) -> int:
        return len(self.param_polys)

    @property
    def params(self) -> tuple:
        return tuple(self._series(p, self.precision) for p in self.param_polys)

    @staticmethod
    def _series(p: Polynomial, precision: int) -> TruncatedSeries:
        return TruncatedSeries({e[0]: c for e, c in p.terms.items()}, precision)

    def param_orders(self) -> list:
        return [s.order() for s in self.params]

    def multiplicity(self) -> int:
        """Smallest order among the parameters (the branch multiplicity)."""
        known = [o for o in self.param_orders() if isinstance(o, int)]
        return min(known)

    def evaluate(self, g: Polynomial, precision: int | None = None) -> TruncatedSeries:
        p = self.precision if precision is None else min(precision, self.precision)
        return g.substitute([self._series(q, p) for q in self.param_polys], p)

    def evaluate_exact(self, g: Polynomial) -> TruncatedSeries | None:
        """Exact substitution, or None when the parameters are truncations."""
        if not self.exact:
            return None
        deg = max((q.total_degree() for q in self.param_polys), default=0)
        horizon = g.total_degree() * deg + 1
        return g.substitute([self._series(q, horizon) for q in self.param_polys], horizon)

    def with_precision(self, precision: int) -> "Branch":
        return Branch(self.index, self.param_polys, precision, self.symbol, self.exact)


@dataclass(frozen=True)
class Curve:
    branches: tuple
    variables: tuple
    plane_polys: tuple | None = None
    sigma: tuple | None = None
    warnings: tuple = field(default=())

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def r(self) -> int:
        return len(self.branches)

    def coordinate(self, j: int) -> Polynomial:
        return Polynomial.variable(j, self.n)

    def with_precision(self, precision: int) -> "Curve":
        return Curve(tuple(b.with_precision(precision) for b in self.branches),
                     self.variables, self.plane_polys, self.sigma, self.warnings)

    def restrict(self, indices: Sequence[int]) -> "Curve":
        """The sub-curve formed by the given (0-based) branches."""
        polys = None
        if self.plane_polys is not None:
            polys = tuple(self.plane_polys[i] for i in indices)
        return Curve(tuple(self.branches[i] for i in indices), self.variables, polys)

    def format(self, g: Polynomial) -> str:
        return g.format(self.variables)


def build_curve(branches: Sequence[Branch], variables: Sequence[str],
                plane_polys: Sequence[Polynomial] | None = None,
                sigma: Sequence[int] | None = None) -> Curve:
    """Validate and assemble a curve."""
    variables = tuple(variables)
    n = len(variables)
    if not branches:
        raise ValidationError("a curve needs at least one branch")
    warnings = []
    for b in branches:
        if b.n != n:
            raise ValidationError(f"branch {b.index} has {b.n} parameters, expected {n}")
        orders = b.param_orders()
        for j, (q, o) in enumerate(zip(b.param_polys, orders)):
            if q.constant_term() != 0:
                raise ValidationError(
                    f"branch {b.index}: parameter {j + 1} has a constant term, "
                    "the branch is not inside the maximal ideal")
        if not any(isinstance(o, int) for o in orders):
            raise ValidationError(f"branch {b.index}: every parameter vanishes up to precision")
    for a in range(len(branches)):
        for c in range(a + 1, len(branches)):
            if branches[a].param_polys == branches[c].param_polys:
                raise ValidationError(f"branches {a + 1} and {c + 1} coincide")
    if plane_polys is not None:
        plane_polys = tuple(plane_polys)
        if n != 2:
            raise ValidationError("defining polynomials are only supported for plane curves")
        if len(plane_polys) != len(branches):
            raise ValidationError("need exactly one defining polynomial per branch")
        for f in plane_polys:
            if f.nvars != 2:
                raise ValidationError("defining polynomials must be bivariate")
            if f.constant_term() != 0:
                raise ValidationError("defining polynomials must vanish at the origin")
    if sigma is not None:
        sigma = tuple(int(s) for s in sigma)
        if len(sigma) != len(branches) or any(s < 0 for s in sigma):
            raise ValidationError("sigma needs one non-negative entry per branch")
    warnings.extend(_embedding_warnings(branches, plane_polys))
    curve = Curve(tuple(branches), variables, plane_polys, sigma, tuple(warnings))
    if plane_polys is not None:
        for i in range(curve.r):
            report = verify_branch(curve, i)
            if not report.ok:
                raise ValidationError(
                    f"defining polynomial {i + 1} does not vanish on branch {i + 1} "
                    f"(residual order {report.residual_order})")
        for j in range(curve.r):
            for k in range(curve.r):
                if j == k:
                    continue
                v = value_of(plane_polys[j], curve)[k]
                if v == INF:
                    raise ValidationError(
                        f"branch {k + 1} lies on the curve of polynomial {j + 1}; "
                        "branches must be distinct")
                if isinstance(v, AtLeast):
                    raise PrecisionInsufficient(
                        f"order of polynomial {j + 1} along branch {k + 1} exceeds "
                        f"precision {v.p}", required=v.p + 1)
    return curve


def _embedding_warnings(branches, plane_polys) -> list:
    # only the plane case with equations can be certified
    if plane_polys is None:
        return ["embedding dimension not certified (no defining equations)"]
    if len(plane_polys) == 1 and any(sum(e) == 1 for e in plane_polys[0].terms):
        return ["smooth plane branch: the curve is degenerate in the plane"]
    return []


def value_of(g: Polynomial, curve: Curve) -> tuple:
    """The value vector: the order of ``g`` along each branch."""
    out = []
    for b in curve.branches:
        o = b.evaluate(g).order()
        if isinstance(o, AtLeast):
            exact = b.evaluate_exact(g)
            if exact is not None and exact.is_zero():
                o = INF
        out.append(o)
    return tuple(out)


def leading_coeff_at(g: Polynomial, curve: Curve, k: int) -> Fraction:
    """Leading coefficient of ``g`` along branch ``k`` (0-based)."""
    s = curve.branches[k].evaluate(g)
    if s.is_zero():
        raise InfiniteValue(f"value on branch {k + 1} is not finite")
    return s.leading_coeff()


@dataclass(frozen=True)
class BranchCheck:
    ok: bool
    exact: bool
    residual_order: object = None
    warning: str = ""


def verify_branch(curve: Curve, i: int) -> BranchCheck:
    """Substitute branch ``i`` into its defining polynomial."""
    if curve.plane_polys is None:
        raise ValidationError("the curve has no defining polynomials")
    b = curve.branches[i]
    f = curve.plane_polys[i]
    exact = b.evaluate_exact(f)
    if exact is not None:
        if exact.is_zero():
            return BranchCheck(True, True)
        return BranchCheck(False, True, exact.order())
    s = b.evaluate(f)
    if s.is_zero():
        return BranchCheck(True, False, s.order(), "zero only up to precision")
    return BranchCheck(False, False, s.order())
