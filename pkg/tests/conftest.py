import pytest

from semival import pipeline
from semival.document import golden_names, golden_path, load_curve

PLANE = ["xy", "branch4613_cusp", "cusp", "parabola", "line_parabola", "three_lines", "cusp_line",
         "two_cusps_line"]
SPACE = ["axes3", "monomial345"]

_runs = {}


def curve(name):
    return load_curve(golden_path(name))


def run(name):
    if name not in _runs:
        _runs[name] = pipeline.run(curve(name))
    return _runs[name]


@pytest.fixture(scope="session")
def goldens():
    names = golden_names()
    assert sorted(PLANE + SPACE) == names
    return names
