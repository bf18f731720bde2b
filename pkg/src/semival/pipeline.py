"""End-to-end runs over a curve and their reports.

A report is a nested structure of dicts and tuples whose leaves are ints,
strings, bools, ``INF`` and ``AtLeast``.  It serializes to JSON with
infinity as ``"inf"`` and ``AtLeast(p)`` as ``{"atLeast": p}``; a Top class
of a saturated vector is held as ``AtLeast(b_i)``.  ``load_report`` inverts
``dump_report`` exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from . import analysis
from .curve import Curve, value_of
from .document import curve_to_dict
from .errors import VerificationFailure
from .sampling import random_polynomials
from .stdbasis import StandardBasis, complete, minimalize, reduce_chain, verify_basis
from .values import INF, AtLeast, SatBound, check_properties, membership


@dataclass
class Run:
    curve: Curve
    conductor: analysis.ConductorResult
    semigroups: list
    bound: SatBound
    completed: StandardBasis
    minimal: StandardBasis
    points: frozenset
    intersections: dict = field(default_factory=dict)


def run(curve: Curve, sigma=None, verify_samples: int = 50, verify_seed: int = 0) -> Run:
    """Conductor, completion, certification and minimalization."""
    semigroups = [analysis.branch_semigroup(curve, i) for i in range(curve.r)]
    cond = analysis.conductor(curve, sigma, semigroups)
    bound = analysis.working_bound(curve, cond.sigma)
    completed = complete(curve, bound, verify=False)
    result = verify_basis(completed, verify_samples, verify_seed)
    if not result.ok:
        raise VerificationFailure(f"completed basis failed at {result.witness}: {result.reason}")
    minimal = minimalize(completed)
    check = verify_basis(minimal, verify_samples, verify_seed)
    if not check.ok:
        raise VerificationFailure(f"minimal basis failed at {check.witness}: {check.reason}")
    if cond.provenance == "user" and analysis.verify_conductor(check.generated, cond.sigma, bound):
        cond = analysis.ConductorResult(cond.sigma, "verified")
    inter = {}
    if curve.plane_polys is not None:
        for j, k in combinations(range(curve.r), 2):
            inter[(j, k)] = analysis.intersection_multiplicity(curve, j, k)
    return Run(curve, cond, semigroups, bound, completed, minimal, check.generated, inter)


# -- encoding ----------------------------------------------------------------

def _display_class(gamma, bound: SatBound) -> tuple:
    return tuple(AtLeast(b) if g >= b else int(g) for g, b in zip(gamma, bound.bounds))


def _display_value(v) -> tuple:
    return tuple(x if x == INF or isinstance(x, AtLeast) else int(x) for x in v)


def _classes(points, bound) -> tuple:
    return tuple(_display_class(p, bound) for p in sorted(points))


def basis_section(r: Run, trace: bool = False) -> dict:
    c = r.curve
    out = {
        "conductor": {"sigma": r.conductor.sigma, "provenance": r.conductor.provenance},
        "bound": r.bound.bounds,
        "branch_semigroups": tuple({"generators": s.generators, "conductor": s.conductor}
                                   for s in r.semigroups),
        "intersection_multiplicities": tuple({"branches": (j + 1, k + 1), "value": v}
                                             for (j, k), v in sorted(r.intersections.items())),
        "basis": tuple({"element": c.format(g), "value": _display_value(v)}
                       for g, v in zip(r.minimal.elements, r.minimal.values)),
        "generators": tuple(_display_value(v) for v in sorted(r.minimal.values, key=_sort_key)),
        "completed_size": len(r.completed.elements),
        "bound_conditional": r.minimal.bound_conditional,
    }
    if trace:
        out["traces"] = traces(r)
    return out


def _sort_key(v):
    return tuple((1, 0) if x == INF else (0, x.p if isinstance(x, AtLeast) else x) for x in v)


def traces(r: Run) -> tuple:
    """Reduction chains of the discarded elements modulo the minimal basis."""
    kept = set(r.minimal.elements)
    out = []
    for g in r.completed.elements:
        if g in kept:
            continue
        h, steps = reduce_chain(g, r.minimal)
        out.append({
            "element": r.curve.format(g),
            "steps": tuple({"coordinate": s.coordinate + 1, "constant": str(s.constant),
                            "exponents": s.product.exponents,
                            "value": _display_class(s.product.value, r.bound)} for s in steps),
            "terminal": r.curve.format(h),
        })
    return tuple(out)


def semiring_section(r: Run) -> dict:
    b = r.bound
    absolute = analysis.absolute_points(r.points, b)
    irreducible = analysis.irreducible_points(r.points, b)
    finite = analysis.finite_points(r.points, b)
    out = {
        "finite_points": _classes(finite, b),
        "top_points": _classes(set(r.points) - finite, b),
        "absolute_points": _classes(absolute, b),
        "finite_absolute_points": _classes(analysis.finite_points(absolute, b), b),
        "irreducible_points": _classes(irreducible, b),
        "irreducible_absolute_points": _classes(absolute & irreducible, b),
        "minimal_generators": analysis.check_minimal_generators(r.minimal.values, r.points, b),
    }
    if r.curve.plane_polys is not None:
        out["equation_values"] = analysis.check_equation_values(r.curve, r.points, b)
    return out


def check_section(r: Run) -> dict:
    b = r.bound
    violations = check_properties(r.points, b)
    out = {
        "properties": tuple({"property": v.prop, "points": _classes(v.points, b), "detail": v.detail}
                            for v in violations),
        "minimal_generators": analysis.check_minimal_generators(r.minimal.values, r.points, b),
        "conductor": analysis.verify_conductor(r.points, r.conductor.sigma, b),
    }
    if r.curve.plane_polys is not None:
        out["symmetry"] = True  # intersection_multiplicity raises on asymmetry
        out["equation_values"] = analysis.check_equation_values(r.curve, r.points, b)
        out["projections"] = tuple({"branches": (p.j + 1, p.k + 1), "absolute_points": p.absolute,
                               "intersection": p.intersection, "ok": p.ok}
                              for p in analysis.projection_counts(r.curve, r.points, b))
    out["ok"] = (not violations and out["minimal_generators"] and out["conductor"]
                 and out.get("equation_values", True) and all(g["ok"] for g in out.get("projections", ())))
    return out


def oracle_section(r: Run, samples: int, seed: int, max_degree: int) -> dict:
    pres = r.minimal.presentation()
    mons = pres.monomial_array()
    passed, failures = 0, []
    for g in random_polynomials(r.curve, samples, seed, max_degree):
        v = value_of(g, r.curve)
        gamma = analysis.saturate_exact(v, r.bound)
        if membership(gamma, pres, mons):
            passed += 1
        else:
            failures.append({"element": r.curve.format(g), "value": _display_value(v)})
    return {"samples": samples, "seed": seed, "max_degree": max_degree,
            "passed": passed, "failed": len(failures), "counterexamples": tuple(failures)}


def header(curve: Curve, command: str) -> dict:
    return {"command": command, "curve": _freeze(curve_to_dict(curve)),
            "warnings": tuple(curve.warnings)}


def _freeze(x):
    if isinstance(x, dict):
        return {k: _freeze(v) for k, v in x.items()}
    if isinstance(x, list | tuple):
        return tuple(_freeze(v) for v in x)
    return x


# -- serialization -----------------------------------------------------------

def _to_json(x):
    if isinstance(x, dict):
        return {k: _to_json(v) for k, v in x.items()}
    if isinstance(x, list | tuple):
        return [_to_json(v) for v in x]
    if isinstance(x, AtLeast):
        return {"atLeast": x.p}
    if isinstance(x, float) and x == INF:
        return "inf"
    return x


def _from_json(x):
    if isinstance(x, dict):
        if set(x) == {"atLeast"}:
            return AtLeast(x["atLeast"])
        return {k: _from_json(v) for k, v in x.items()}
    if isinstance(x, list):
        return tuple(_from_json(v) for v in x)
    if x == "inf":
        return INF
    return x


def dump_report(report: dict) -> str:
    return json.dumps(_to_json(report), indent=2) + "\n"


def load_report(text: str) -> dict:
    return _from_json(json.loads(text))


def format_human(report: dict) -> str:
    """Plain text rendering, one field per line."""

    def fmt(x):
        if isinstance(x, AtLeast):
            return f">={x.p}"
        if isinstance(x, float) and x == INF:
            return "inf"
        if isinstance(x, tuple):
            return "(" + ", ".join(fmt(v) for v in x) + ")"
        if isinstance(x, dict):
            return "{" + ", ".join(f"{k}: {fmt(v)}" for k, v in x.items()) + "}"
        return str(x)

    lines = []

    def walk(obj, indent):
        pad = "  " * indent
        for k, v in obj.items():
            if isinstance(v, dict):
                lines.append(f"{pad}{k}:")
                walk(v, indent + 1)
            elif isinstance(v, tuple) and v and all(isinstance(e, dict) for e in v):
                lines.append(f"{pad}{k}:")
                for e in v:
                    lines.append(f"{pad}  - {fmt(e)[1:-1]}")
            else:
                lines.append(f"{pad}{k}: {fmt(v)}")

    walk(report, 0)
    return "\n".join(lines) + "\n"
