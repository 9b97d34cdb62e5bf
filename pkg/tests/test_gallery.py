"""Catalog configurations: solved counts must reproduce the stored ones."""
import pytest

from minconic import point_residual, predict, solve, tangency_residual

from conftest import gallery_names, load_gallery_case


@pytest.mark.parametrize("name", gallery_names())
def test_gallery_counts(name):
    points, lines, expected = load_gallery_case(name)
    sol = solve(points, lines)
    assert sol.real_count == expected["real"], name
    if "case" in expected:
        assert sol.case_label == expected["case"], name
    assert sol.total_count in (1, 2, 4)
    for conic in sol:
        for p in points:
            assert point_residual(conic, p) < 1e-9
        for l in lines:
            assert tangency_residual(conic, l) < 1e-9


@pytest.mark.parametrize("name", gallery_names())
def test_gallery_predictions(name):
    points, lines, expected = load_gallery_case(name)
    pred = predict(points, lines)
    assert pred.predicted_real == expected["real"], name
