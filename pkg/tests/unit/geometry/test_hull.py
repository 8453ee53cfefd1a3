"""Tests for convex hulls, strip fits and diameters."""

import numpy as np
import pytest

from wiggly_continua.exceptions import EmptyPointSetError
from wiggly_continua.geometry.hull import (
    convex_hull,
    convex_hull_diameter,
    min_width_strip,
    principal_axis_fit,
)


def _signed_area(poly: np.ndarray) -> float:
    x, y = poly[:, 0], poly[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


class TestConvexHull:
    def test_square_with_interior_points(self):
        rng = np.random.default_rng(0)
        corners = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
        pts = np.vstack([rng.uniform(0.1, 0.9, size=(50, 2)), corners])
        hull = convex_hull(pts)
        assert len(hull) == 4
        assert {tuple(p) for p in hull} == {tuple(p) for p in corners}
        assert _signed_area(hull) > 0

    def test_large_input_goes_through_qhull(self):
        theta = np.linspace(0, 2 * np.pi, 500, endpoint=False)
        pts = np.c_[np.cos(theta), np.sin(theta)]
        hull = convex_hull(np.vstack([pts, 0.5 * pts]))
        assert len(hull) == 500
        assert _signed_area(hull) == pytest.approx(np.pi, rel=1e-3)

    def test_collinear_input_returns_extremes(self):
        pts = np.c_[np.linspace(0, 1, 200), np.zeros(200)]
        hull = convex_hull(pts)
        assert len(hull) == 2
        assert {tuple(p) for p in hull} == {(0.0, 0.0), (1.0, 0.0)}

    def test_single_point(self):
        hull = convex_hull(np.array([[0.3, 0.4], [0.3, 0.4]]))
        assert hull.shape == (1, 2)

    def test_empty_input(self):
        with pytest.raises(EmptyPointSetError):
            convex_hull(np.empty((0, 2)))


class TestMinWidthStrip:
    def test_triangle(self):
        fit = min_width_strip(np.array([[0.0, 0.0], [2.0, 0.0], [1.0, 1.0]]))
        assert fit.width == pytest.approx(1.0)
        assert fit.direction == pytest.approx((0.0, 1.0))
        assert fit.anchor == pytest.approx(0.5)

    def test_tie_prefers_smallest_angle(self):
        square = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
        fit = min_width_strip(square)
        assert fit.width == pytest.approx(1.0)
        assert fit.direction == pytest.approx((1.0, 0.0))
        assert fit.anchor == pytest.approx(0.5)

    def test_collinear_has_zero_width(self):
        pts = np.c_[np.linspace(0, 1, 10), 2 * np.linspace(0, 1, 10)]
        fit = min_width_strip(pts)
        assert fit.width == 0.0
        normal = np.array(fit.direction)
        assert abs(normal @ np.array([1.0, 2.0])) < 1e-12

    def test_every_point_lies_in_the_strip(self):
        rng = np.random.default_rng(3)
        pts = rng.normal(size=(300, 2)) * [3.0, 0.5]
        fit = min_width_strip(pts)
        proj = pts @ np.array(fit.direction)
        assert np.all(np.abs(proj - fit.anchor) <= fit.width / 2 + 1e-9)
        assert proj.max() - proj.min() == pytest.approx(fit.width)

    def test_width_is_rotation_invariant(self):
        rng = np.random.default_rng(5)
        pts = rng.uniform(size=(40, 2))
        c, s = np.cos(0.7), np.sin(0.7)
        rotated = pts @ np.array([[c, s], [-s, c]])
        assert min_width_strip(rotated).width == pytest.approx(
            min_width_strip(pts).width, rel=1e-9
        )

    def test_matches_a_dense_direction_scan(self):
        rng = np.random.default_rng(17)
        theta = np.pi * np.arange(10_000) / 10_000
        normals = np.c_[np.cos(theta), np.sin(theta)]
        for _ in range(100):
            pts = rng.uniform(-1.0, 1.0, size=(50, 2))
            proj = pts @ normals.T
            scanned = float(np.min(proj.max(axis=0) - proj.min(axis=0)))
            width = min_width_strip(pts).width
            assert width <= scanned * (1 + 1e-12)
            assert (scanned - width) / scanned < 1e-3


def test_principal_axis_fit_in_three_dimensions():
    t = np.linspace(-1, 1, 50)
    pts = np.c_[t, 0.01 * np.sin(7 * t), np.zeros_like(t)]
    fit = principal_axis_fit(pts)
    assert fit.approximate is True
    assert abs(fit.direction[0]) == pytest.approx(1.0, abs=1e-3)
    assert fit.width <= 0.03


class TestDiameter:
    def test_two_points(self):
        pts = np.array([[0.0, 0.0], [0.3, 0.0]])
        assert convex_hull_diameter(pts) == pytest.approx(0.3)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(11)
        pts = rng.normal(size=(400, 2))
        brute = np.max(np.linalg.norm(pts[:, None] - pts[None, :], axis=-1))
        assert convex_hull_diameter(pts) == pytest.approx(brute)

    def test_regular_polygon(self):
        theta = 2 * np.pi * np.arange(7) / 7
        pts = np.c_[np.cos(theta), np.sin(theta)]
        expected = np.max(np.linalg.norm(pts[:, None] - pts[None, :], axis=-1))
        assert convex_hull_diameter(pts) == pytest.approx(expected)

    def test_three_dimensions(self):
        pts = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 2.0], [0.1, 0.1, 0.1]])
        assert convex_hull_diameter(pts) == pytest.approx(np.sqrt(5.0))
