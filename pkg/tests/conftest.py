import json
import math
import pathlib

import pytest

from minconic.projective import HomogeneousPoint, ProjectiveLine

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

SQUARE = [
    HomogeneousPoint(1, 1),
    HomogeneousPoint(-1, 1),
    HomogeneousPoint(-1, -1),
    HomogeneousPoint(1, -1),
]


def load_gallery_case(name):
    doc = json.loads((FIXTURES / "gallery" / f"{name}.json").read_text())
    points = [HomogeneousPoint(*p) for p in doc["points"]]
    lines = [ProjectiveLine(*l) for l in doc["lines"]]
    return points, lines, doc["expected"]


def gallery_names():
    return sorted(p.stem for p in (FIXTURES / "gallery").glob("*.json"))


def six_vector_angle(c1, c2):
    """Angular distance between two conics as normalized 6-vectors (sign-blind)."""
    u = c1.normalized().six_vector()
    v = c2.normalized().six_vector()
    dot = abs(sum(a * b for a, b in zip(u, v)))
    return math.sqrt(max(0.0, 2.0 - 2.0 * min(dot, 1.0)))


@pytest.fixture
def square():
    return list(SQUARE)
