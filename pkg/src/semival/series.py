"""Exact truncated power series in one variable.

A series is a sparse map ``degree -> Fraction`` together with a precision:
every coefficient of degree below the precision is known exactly, nothing is
known at or above it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True, order=True)
class AtLeast:
    """An order that truncation could only bound from below."""

    p: int

    def __repr__(self) -> str:
        return f"AtLeast({self.p})"


class TruncatedSeries:
    __slots__ = ("_coeffs", "_precision")

    def __init__(self, coeffs: Mapping[int, object] | Iterable = (), precision: int = 0):
        if precision < 0:
            raise ValueError("precision must be non-negative")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean = {}
        for d, c in items:
            if d < 0:
                raise ValueError("negative degree")
            if d >= precision:
                continue
            c = Fraction(c)
            if c:
                clean[d] = clean.get(d, 0) + c
        self._coeffs = {d: c for d, c in clean.items() if c}
        self._precision = precision

    @classmethod
    def _raw(cls, coeffs: dict, precision: int) -> "TruncatedSeries":
        # trusted constructor: coeffs already clean and below precision
        s = cls.__new__(cls)
        s._coeffs = coeffs
        s._precision = precision
        return s

    @classmethod
    def constant(cls, c, precision: int) -> "TruncatedSeries":
        return cls({0: c}, precision)

    @classmethod
    def monomial(cls, degree: int, c, precision: int) -> "TruncatedSeries":
        return cls({degree: c}, precision)

    @classmethod
    def zero(cls, precision: int) -> "TruncatedSeries":
        return cls._raw({}, precision)

    @property
    def precision(self) -> int:
        return self._precision

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    def coeff(self, d: int) -> Fraction:
        if d >= self._precision:
            raise IndexError(f"degree {d} is beyond precision {self._precision}")
        return self._coeffs.get(d, Fraction(0))

    def is_zero(self) -> bool:
        """True when no coefficient below the precision is nonzero."""
        return not self._coeffs

    def order(self) -> int | AtLeast:
        if self._coeffs:
            return min(self._coeffs)
        return AtLeast(self._precision)

    def order_floor(self) -> int:
        return min(self._coeffs) if self._coeffs else self._precision

    def leading_coeff(self) -> Fraction:
        if not self._coeffs:
            from .errors import OrderUnknown
            raise OrderUnknown(f"no known coefficient below degree {self._precision}")
        return self._coeffs[min(self._coeffs)]

    def truncate(self, precision: int) -> "TruncatedSeries":
        precision = min(precision, self._precision)
        return TruncatedSeries._raw(
            {d: c for d, c in self._coeffs.items() if d < precision}, precision)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        p = min(self._precision, other._precision)
        out = {d: c for d, c in self._coeffs.items() if d < p}
        for d, c in other._coeffs.items():
            if d < p:
                s = out.get(d, 0) + c
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return TruncatedSeries._raw(out, p)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._raw({d: -c for d, c in self._coeffs.items()}, self._precision)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        if not c:
            return TruncatedSeries.zero(self._precision)
        return TruncatedSeries._raw({d: c * a for d, a in self._coeffs.items()}, self._precision)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        p = min(self._precision + other.order_floor(), other._precision + self.order_floor())
        out: dict = {}
        b_items = sorted(other._coeffs.items())
        for da, ca in self._coeffs.items():
            for db, cb in b_items:
                d = da + db
                if d >= p:
                    break
                out[d] = out.get(d, 0) + ca * cb
        return TruncatedSeries._raw({d: c for d, c in out.items() if c}, p)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            raise ValueError("negative exponent")
        result = TruncatedSeries.constant(1, self._precision + e * self.order_floor())
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._precision == other._precision and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._precision, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            body = "0"
        else:
            body = " + ".join(f"{c}*t^{d}" for d, c in self.items())
        return f"TruncatedSeries({body}, prec={self._precision})"
