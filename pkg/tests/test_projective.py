"""Point/line primitives and their sign predicates."""
import math

import pytest

from minconic import HomogeneousPoint, Orientation, ProjectiveLine
from minconic.errors import PointAtInfinity
from minconic.projective import (
    cross,
    det3,
    normalize_point,
    orientation,
    side_sign,
)


def test_point_roundtrip_and_finiteness():
    p = HomogeneousPoint.from_xy(3.0, -2.0)
    assert p.vec() == (3.0, -2.0, 1.0)
    assert p.is_finite()
    assert not HomogeneousPoint(1.0, 0.0, 0.0).is_finite()


def test_line_through_two_points():
    l = ProjectiveLine.through(HomogeneousPoint(0.0, 0.0), HomogeneousPoint(1.0, 1.0))
    # x = y up to scale
    assert l.a * 1.0 + l.b * 1.0 == pytest.approx(0.0)
    assert l.c == pytest.approx(0.0)
    assert side_sign(HomogeneousPoint(2.0, 2.0), l) == 0


def test_cross_is_meet_and_join():
    # join of (1, 0) and (0, 1) is x + y = 1; meet of that with y = 0 is (1, 0)
    j = cross((1.0, 0.0, 1.0), (0.0, 1.0, 1.0))
    assert j[0] * 1.0 + j[1] * 0.0 + j[2] == pytest.approx(0.0)
    m = cross(j, (0.0, 1.0, 0.0))
    assert m[0] / m[2] == pytest.approx(1.0)
    assert m[1] / m[2] == pytest.approx(0.0)


def test_det3_row_convention():
    assert det3(((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))) == 1.0
    assert det3(((0.0, 1.0, 0.0), (1.0, 0.0, 0.0), (0.0, 0.0, 1.0))) == -1.0


def test_normalize_point():
    p = normalize_point((2.0, 4.0, 2.0))
    assert (p.x, p.y, p.w) == (1.0, 2.0, 1.0)
    with pytest.raises(PointAtInfinity):
        normalize_point((1.0, 1.0, 0.0))
    with pytest.raises(PointAtInfinity):
        normalize_point((1.0, 1.0, 1e-15))
    with pytest.raises(PointAtInfinity):
        normalize_point((0.0, 0.0, 0.0))


def test_orientation_signs():
    a = HomogeneousPoint(0.0, 0.0)
    b = HomogeneousPoint(1.0, 0.0)
    c = HomogeneousPoint(0.0, 1.0)
    assert orientation(a, b, c) is Orientation.ANTICLOCKWISE
    assert orientation(a, c, b) is Orientation.CLOCKWISE
    assert orientation(a, b, HomogeneousPoint(2.0, 0.0)) is Orientation.COLLINEAR


def test_orientation_tolerance_scales_with_coordinates():
    # the same near-collinear shape must classify identically at any scale
    for scale in (1.0, 1e6, 1e-6):
        a = HomogeneousPoint(0.0, 0.0)
        b = HomogeneousPoint(scale, 0.0)
        c = HomogeneousPoint(2.0 * scale, scale * 1e-14)
        assert orientation(a, b, c) is Orientation.COLLINEAR


def test_side_sign():
    l = ProjectiveLine(1.0, 0.0, -1.0)  # x = 1
    assert side_sign(HomogeneousPoint(2.0, 5.0), l) == 1
    assert side_sign(HomogeneousPoint(0.0, -3.0), l) == -1
    assert side_sign(HomogeneousPoint(1.0, 7.0), l) == 0


def test_side_sign_relative_tolerance():
    l = ProjectiveLine(1.0, 0.0, -1e8)
    assert side_sign(HomogeneousPoint(1e8 * (1.0 + 1e-14), 0.0), l) == 0
    assert side_sign(HomogeneousPoint(1e8 * 1.1, 0.0), l) == 1
