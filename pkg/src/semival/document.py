"""Curve documents: a small YAML format.

    variables: [x, y]          # or  n: 3  (variables X1..X3)
    branches:
      - symbol: t
        params: ["t^4", "t^6 + t^7"]
        precision: 40
        exact: true            # params are the parameterization, not a truncation
      - params: ["t^2", "t^3"]
        precision: 40
    polys: ["y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7", "y^2 - x^3"]
    sigma: [29, 15]            # optional conductor bound
"""
from __future__ import annotations

from pathlib import Path

import yaml

from .curve import Branch, Curve, build_curve
from .errors import ParseError
from .polynomial import parse_polynomial

_TOP_KEYS = {"n", "variables", "branches", "polys", "sigma"}
_BRANCH_KEYS = {"symbol", "params", "precision", "exact"}


def default_variables(n: int) -> list:
    return ["x", "y"] if n == 2 else [f"X{j + 1}" for j in range(n)]


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def curve_from_dict(doc: dict) -> Curve:
    if not isinstance(doc, dict):
        raise ParseError("a curve document must be a mapping")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ParseError(f"unknown keys: {', '.join(sorted(unknown))}")
    if "variables" in doc:
        variables = doc["variables"]
        if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
            raise ParseError("variables must be a list of names")
        if "n" in doc and _int(doc["n"], "n") != len(variables):
            raise ParseError("n disagrees with the number of variables")
    elif "n" in doc:
        variables = default_variables(_int(doc["n"], "n"))
    else:
        raise ParseError("need either n or variables")
    if len(set(variables)) != len(variables) or not variables:
        raise ParseError("variables must be distinct and nonempty")

    raw = doc.get("branches")
    if not isinstance(raw, list) or not raw:
        raise ParseError("branches must be a nonempty list")
    branches = []
    for i, b in enumerate(raw, start=1):
        if not isinstance(b, dict):
            raise ParseError(f"branch {i} must be a mapping")
        unknown = set(b) - _BRANCH_KEYS
        if unknown:
            raise ParseError(f"branch {i}: unknown keys: {', '.join(sorted(unknown))}")
        symbol = b.get("symbol", "t")
        params = b.get("params")
        if not isinstance(params, list):
            raise ParseError(f"branch {i}: params must be a list")
        if "precision" not in b:
            raise ParseError(f"branch {i}: precision is required")
        exact = b.get("exact", True)
        if not isinstance(exact, bool):
            raise ParseError(f"branch {i}: exact must be true or false")
        polys = tuple(parse_polynomial(str(p), [symbol]) for p in params)
        branches.append(Branch(i, polys, _int(b["precision"], f"branch {i} precision"), symbol, exact))

    polys = doc.get("polys")
    if polys is not None:
        if not isinstance(polys, list):
            raise ParseError("polys must be a list")
        polys = [parse_polynomial(str(f), variables) for f in polys]
    sigma = doc.get("sigma")
    if sigma is not None:
        if not isinstance(sigma, list):
            raise ParseError("sigma must be a list")
        sigma = [_int(s, "sigma entry") for s in sigma]
    return build_curve(branches, variables, polys, sigma)


def parse_curve(text: str) -> Curve:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ParseError(f"malformed document: {exc}") from None
    return curve_from_dict(doc)


def load_curve(path: str | Path) -> Curve:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_curve(text)


def curve_to_dict(curve: Curve) -> dict:
    doc = {"variables": list(curve.variables), "branches": []}
    for b in curve.branches:
        doc["branches"].append({
            "symbol": b.symbol,
            "params": [p.format([b.symbol]) for p in b.param_polys],
            "precision": b.precision,
            "exact": b.exact,
        })
    if curve.plane_polys is not None:
        doc["polys"] = [curve.format(f) for f in curve.plane_polys]
    if curve.sigma is not None:
        doc["sigma"] = list(curve.sigma)
    return doc


def dump_curve(curve: Curve) -> str:
    return yaml.safe_dump(curve_to_dict(curve), sort_keys=False)


def golden_path(name: str) -> Path:
    """Path of one of the bundled curve documents."""
    return Path(__file__).parent / "data" / f"{name}.yaml"


def golden_names() -> list:
    return sorted(p.stem for p in (Path(__file__).parent / "data").glob("*.yaml"))
