"""Deterministic random elements of the local ring."""
from __future__ import annotations

import random
from typing import Iterator

from .curve import Curve
from .polynomial import Polynomial


def atoms(curve: Curve) -> list:
    """Coordinates, followed by the defining polynomials when known."""
    out = [curve.coordinate(j) for j in range(curve.n)]
    if curve.plane_polys is not None:
        out.extend(curve.plane_polys)
    return out


def random_polynomials(curve: Curve, count: int, seed: int = 0, max_degree: int = 5,
                       max_terms: int = 4, coeff_range: int = 3) -> Iterator[Polynomial]:
    """Nonzero polynomials without constant term, built from the atoms.

    Each sample is a small integer combination of monomials in the atoms, so
    elements of high value (multiples of the defining polynomials, or
    cancellations between them) turn up with reasonable frequency.
    """
    rng = random.Random(seed)
    base = atoms(curve)
    produced = 0
    while produced < count:
        g = Polynomial.constant(0, curve.n)
        for _ in range(rng.randint(1, max_terms)):
            deg = rng.randint(1, max_degree)
            term = Polynomial.constant(1, curve.n)
            for _ in range(deg):
                term = term * rng.choice(base)
            c = rng.randint(-coeff_range, coeff_range) or 1
            g = g + term * c
        if not g.is_zero():
            produced += 1
            yield g
