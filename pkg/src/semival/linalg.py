"""Saturated value set of a curve by exact linear algebra.

The image ``R`` of the local ring in ``A = prod_i Q[t_i]/(t_i^{b_i})`` is a
finite-dimensional algebra spanned by monomials in the coordinates.  A class
``gamma`` occurs as a saturated value iff, inside ``W = {g in R : ord_i(g) >=
gamma_i}``, each finite coordinate ``k`` has some element of exact order
``gamma_k``; over an infinite field one element then does this for all ``k``
at once.  Equivalently ``rank(C(gamma) + {(k, gamma_k)}) > rank(C(gamma))``,
where ``C(gamma)`` is the set of coefficient columns below ``gamma``.

This route never looks at a standard basis, which makes it an independent
certificate for one.
"""
from __future__ import annotations


from .curve import Curve
from .polynomial import Polynomial
from .values import SatBound


class _Echelon:
    """Row echelon form over Q with sparse dict rows, pivot = first index."""

    __slots__ = ("rows",)

    def __init__(self, rows=None):
        self.rows = dict(rows or {})

    def copy(self) -> "_Echelon":
        return _Echelon(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        for p in sorted(self.rows):
            c = v.get(p)
            if c:
                for j, a in self.rows[p].items():
                    s = v.get(j, 0) - c * a
                    if s:
                        v[j] = s
                    else:
                        v.pop(j, None)
        return v

    def add(self, v: dict) -> dict | None:
        """Insert ``v``; return its reduced form if it was independent."""
        v = self.reduce(v)
        if not v:
            return None
        p = min(v)
        inv = 1 / v[p]
        self.rows[p] = {j: a * inv for j, a in v.items()}
        return v


def _flatten(images, offsets) -> dict:
    out = {}
    for s, off in zip(images, offsets):
        for d, c in s.coeffs.items():
            out[off + d] = c
    return out


def image_algebra(curve: Curve, bound: SatBound) -> list:
    """Basis (as flattened coefficient dicts) of the image of the local ring."""
    B = bound.bounds
    offsets = [sum(B[:i]) for i in range(len(B))]
    coords = [
        [b.evaluate(Polynomial.variable(j, curve.n), B[i]) for i, b in enumerate(curve.branches)]
        for j in range(curve.n)
    ]
    one = [b.evaluate(Polynomial.constant(1, curve.n), B[i]) for i, b in enumerate(curve.branches)]
    ech = _Echelon()
    basis = []
    queue = [one]
    while queue:
        el = queue.pop()
        vec = ech.add(_flatten(el, offsets))
        if vec is None:
            continue
        basis.append(vec)
        for xj in coords:
            prod = [(a * x).truncate(B[i]) for i, (a, x) in enumerate(zip(el, xj))]
            if any(not s.is_zero() for s in prod):
                queue.append(prod)
    return basis


def saturated_values(curve: Curve, bound: SatBound) -> frozenset:
    """Every saturated class attained by an element of the local ring."""
    B = bound.bounds
    r = len(B)
    offsets = [sum(B[:i]) for i in range(r)]
    basis = image_algebra(curve, bound)

    def column(i, d):
        c = offsets[i] + d
        return {row: vec[c] for row, vec in enumerate(basis) if vec.get(c)}

    ranks: dict = {}

    def sweep(i, ech, prefix):
        cur = ech.copy()
        for L in range(B[i] + 1):
            if i == r - 1:
                ranks[prefix + (L,)] = cur.rank
            else:
                sweep(i + 1, cur, prefix + (L,))
            if L < B[i]:
                cur.add(column(i, L))

    sweep(0, _Echelon(), ())
    out = set()
    for gamma, rk in ranks.items():
        ok = True
        for k in range(r):
            if gamma[k] < B[k]:
                up = gamma[:k] + (gamma[k] + 1,) + gamma[k + 1:]
                if ranks[up] == rk:
                    ok = False
                    break
        if ok:
            out.add(gamma)
    return frozenset(out)
