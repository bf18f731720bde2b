"""Acceptance criteria, one test and one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are
printed even when output capture is on.
"""
import os
import random
import subprocess
import sys
import time
from itertools import product

import pytest

from conftest import curve, run
from semival import analysis, pipeline
from semival.document import golden_names, golden_path
from semival.stdbasis import complete, default_seed, minimalize
from semival.values import INF, check_properties

XY_SECONDS = 1.0
TWO_BRANCH_SECONDS = 10.0
ORACLE_SAMPLES = 200
PROPERTY_CURVES = ["xy", "branch4613_cusp", "line_parabola", "three_lines", "cusp_line", "two_cusps_line",
                   "axes3"]
MAXIMAL_4613 = {(0, 0), (4, 2), (6, 3), (8, 4), (10, 5), (12, 6), (14, 7), (16, 8), (18, 9), (20, 10),
             (22, 11), (24, 12), (28, 14)}


@pytest.fixture
def verdict(capsys):
    def report(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return report


def timed(name):
    start = time.perf_counter()
    r = pipeline.run(curve(name))
    return r, time.perf_counter() - start


def test_criterion_1_xy(verdict):
    r, seconds = timed("xy")
    b = r.bound
    values = set(r.minimal.values)
    expected_points = {(0, 0)} | set(product(range(1, b.bounds[0] + 1), range(1, b.bounds[1] + 1)))
    checks = {
        "values": values == {(1, INF), (INF, 1)},
        "sigma": r.conductor.sigma == (1, 1),
        "points": set(r.points) == expected_points,
        "minimal_generators": analysis.check_minimal_generators(r.minimal.values, r.points, b),
        "equation_values": analysis.check_equation_values(r.curve, r.points, b),
        "time": seconds < XY_SECONDS,
    }
    verdict(1, all(checks.values()), f"xy {checks} in {seconds:.3f}s (limit {XY_SECONDS}s)")


def test_criterion_2_branch4613_cusp(verdict):
    r, seconds = timed("branch4613_cusp")
    b = r.bound
    absolute = analysis.finite_points(analysis.absolute_points(r.points, b), b)
    forward = analysis.intersection_multiplicity(r.curve, 0, 1)
    backward = analysis.intersection_multiplicity(r.curve, 1, 0)
    checks = {
        "generators": set(r.minimal.values) == {(4, 2), (6, 3), (13, INF), (INF, 13)},
        "conductor": r.conductor.sigma == (29, 15),
        "semigroups": [s.generators for s in r.semigroups] == [(4, 6, 13), (2, 3)],
        "absolute": absolute == MAXIMAL_4613,
        "count": len(absolute) == forward == backward == 13,
        "time": seconds < TWO_BRANCH_SECONDS,
    }
    verdict(2, all(checks.values()), f"branch4613_cusp {checks} in {seconds:.3f}s (limit {TWO_BRANCH_SECONDS}s)")


def test_criterion_3_properties(verdict):
    failures = []
    for name in PROPERTY_CURVES:
        r = run(name)
        section = pipeline.check_section(r)
        if check_properties(r.points, r.bound) or not section["ok"]:
            failures.append(name)
        if r.curve.plane_polys is not None and not section["projections"]:
            failures.append(f"{name} (no plane pair)")
    verdict(3, not failures, f"{len(PROPERTY_CURVES)} curves, failing: {failures or 'none'}")


def test_criterion_4_oracle(verdict):
    results = {}
    for seed, name in enumerate(golden_names(), start=1):
        section = pipeline.oracle_section(run(name), ORACLE_SAMPLES, seed, 4)
        results[name] = f"{section['passed']}/{section['samples']}"
    ok = all(v == f"{ORACLE_SAMPLES}/{ORACLE_SAMPLES}" for v in results.values())
    verdict(4, ok, f"membership {results}")


def test_criterion_5_robustness(verdict):
    failures = []
    for name in golden_names():
        r = run(name)
        reference = sorted(map(str, r.minimal.values))
        seed = default_seed(r.curve)
        permuted = list(seed)
        random.Random(name).shuffle(permuted)
        redundant = seed + [seed[0] + seed[-1], seed[0] * seed[-1], seed[-1] * seed[-1] - seed[0] ** 3]
        for attempt in (permuted, redundant):
            values = sorted(map(str, minimalize(complete(r.curve, r.bound, seed=attempt)).values))
            if values != reference:
                failures.append(name)
    verdict(5, not failures, f"{len(golden_names())} curves x 2 runs, differing: {failures or 'none'}")


def test_criterion_6_determinism(verdict):
    procs = []
    for name in golden_names():
        for command in ("semiring", "oracle"):
            for hash_seed in ("1", "2"):
                args = [sys.executable, "-m", "semival", command, str(golden_path(name)),
                        "--format", "machine", "--trace"]
                if command == "oracle":
                    args += ["--samples", "50"]
                env = dict(os.environ, PYTHONHASHSEED=hash_seed)
                procs.append((name, command, subprocess.Popen(args, stdout=subprocess.PIPE, env=env)))
    outputs = {}
    for name, command, p in procs:
        out, _ = p.communicate()
        outputs.setdefault((name, command), []).append((p.returncode, out))
    differing = [k for k, (a, b) in outputs.items() if a != b or a[0] != 0]
    verdict(6, not differing, f"{len(outputs)} reports run twice, differing: {differing or 'none'}")
