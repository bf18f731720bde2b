"""Semiring of values of an algebroid curve.

Curves are given by branch parameterizations (and, in the plane, optionally
by one defining polynomial per branch).  The package computes a Standard
Basis of the local ring, the value semiring it generates, the conductor, and
the absolute and irreducible points of the value set.
"""
from .analysis import (absolute_points, branch_semigroup, conductor, intersection_multiplicity,
                       irreducible_points, working_bound)
from .curve import Branch, Curve, build_curve, value_of
from .document import load_curve, parse_curve
from .pipeline import run
from .polynomial import Polynomial, parse_polynomial
from .stdbasis import complete, minimalize, reduce_chain, verify_basis
from .values import INF, AtLeast, SatBound, SemiringPresentation, enumerate_semiring

__all__ = [
    "AtLeast", "Branch", "Curve", "INF", "Polynomial", "SatBound", "SemiringPresentation",
    "absolute_points", "branch_semigroup", "build_curve", "complete", "conductor",
    "enumerate_semiring", "intersection_multiplicity", "irreducible_points", "load_curve",
    "minimalize", "parse_curve", "parse_polynomial", "reduce_chain", "run", "value_of",
    "verify_basis", "working_bound",
]
