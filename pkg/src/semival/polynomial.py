"""Multivariate polynomials with exact rational coefficients.

Elements of the local ring are represented by polynomials in X_1..X_n; a
polynomial is a sparse map from exponent tuples to nonzero Fractions.
"""
from __future__ import annotations

import ast
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import ParseError
from .series import TruncatedSeries


class Polynomial:
    __slots__ = ("_terms", "nvars")

    def __init__(self, terms: Mapping[tuple, object] | None = None, nvars: int = 1):
        self.nvars = nvars
        clean: dict = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
            c = Fraction(c)
            if c:
                s = clean.get(e, 0) + c
                if s:
                    clean[e] = s
                else:
                    clean.pop(e)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        return p

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, j: int, nvars: int) -> "Polynomial":
        e = [0] * nvars
        e[j] = 1
        return cls({tuple(e): 1}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "Polynomial":
        return cls({tuple(exps): c}, len(exps))

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def degree_in(self, j: int) -> int:
        return max((e[j] for e in self._terms), default=0)

    def _check(self, other: "Polynomial"):
        if other.nvars != self.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return Polynomial._raw({}, self.nvars)
            return Polynomial._raw({e: c * a for e, a in self._terms.items()}, self.nvars)
        self._check(other)
        out: dict = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return Polynomial._raw({e: c for e, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def substitute(self, values: Sequence[TruncatedSeries], precision: int) -> TruncatedSeries:
        """Evaluate at univariate series; the constant term is known to ``precision``."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of substituted series")
        powers = [[TruncatedSeries.constant(1, precision)] for _ in values]

        def power(j, k):
            cache = powers[j]
            top = len(cache) - 1
            while top < k:
                cache.append(cache[top] * values[j])
                top += 1
            return cache[k]

        total = TruncatedSeries.zero(precision)
        for e, c in self._terms.items():
            term = None
            for j, k in enumerate(e):
                if k:
                    pj = power(j, k)
                    term = pj if term is None else term * pj
            if term is None:
                term = TruncatedSeries.constant(1, precision)
            total = total + term.scale(c)
        return total

    def compose(self, polys: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute polynomials (all in one ring) for the variables."""
        if len(polys) != self.nvars:
            raise ValueError("wrong number of substituted polynomials")
        m = polys[0].nvars
        cache: dict = {}

        def power(j, k):
            if (j, k) not in cache:
                cache[(j, k)] = polys[j] ** k
            return cache[(j, k)]

        total = Polynomial._raw({}, m)
        for e, c in self._terms.items():
            term = Polynomial.constant(c, m)
            for j, k in enumerate(e):
                if k:
                    term = term * power(j, k)
            total = total + term
        return total

    def format(self, variables: Sequence[str]) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.items():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(variables, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        names = ["x", "y"] if self.nvars == 2 else [f"X{j + 1}" for j in range(self.nvars)]
        return f"Polynomial({self.format(names)})"


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Pow, ast.Div)


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse infix text such as ``"y^4 - 2*x^3*y^2 + 1/2*x"``.

    Only integer and rational constants are accepted; any other name
    (``sqrt``, ``I``, ...) or a float literal raises ParseError.
    """
    n = len(variables)
    index = {v: j for j, v in enumerate(variables)}
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse polynomial {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ParseError(f"only integer literals are allowed, got {node.value!r} in {text!r}")
            return Polynomial.constant(node.value, n)
        if isinstance(node, ast.Name):
            if node.id not in index:
                raise ParseError(f"unknown symbol {node.id!r} in {text!r}")
            return Polynomial.variable(index[node.id], n)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            left = ev(node.left)
            right = ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if right.is_zero() or set(right.terms) != {(0,) * n}:
                    raise ParseError(f"division by a non-constant or zero in {text!r}")
                return left * (1 / right.constant_term())
            # power
            if set(right.terms) - {(0,) * n}:
                raise ParseError(f"exponent must be a constant in {text!r}")
            k = right.constant_term()
            if k.denominator != 1 or k < 0:
                raise ParseError(f"exponent must be a non-negative integer in {text!r}")
            return left ** int(k)
        raise ParseError(f"unsupported syntax {ast.dump(node)[:40]} in {text!r}")

    return ev(tree.body)
