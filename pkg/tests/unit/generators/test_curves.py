"""Tests for the segment, circle, Koch and sine-curve generators."""

import math

import numpy as np
import pytest

from wiggly_continua.exceptions import ResolutionUnreachableError
from wiggly_continua.generators import circle, koch, segment, warsaw_sine
from wiggly_continua.generators.curves import koch_vertices
from wiggly_continua.models.constants import TAG_E, TAG_W
from wiggly_continua.models.generators import Family


class TestSegment:
    def test_level_ten(self):
        result = segment(level=10)
        assert result.sample.count == 1025
        assert np.all(result.sample.tags == TAG_W)
        assert result.sample.resolution == pytest.approx(2.0**-10)
        assert result.truth.known_dim == 1.0
        assert result.truth.length == 1.0

    def test_resolution_target_picks_level(self):
        result = segment(resolution_target=0.01)
        assert result.spec.params["level"] == 7
        assert result.sample.count == 129
        assert result.sample.resolution <= 0.01

    def test_unreachable_target(self):
        with pytest.raises(ResolutionUnreachableError):
            segment(resolution_target=1e-9)


class TestCircle:
    def test_points_on_unit_circle(self):
        result = circle(level=8)
        radii = np.linalg.norm(result.sample.points, axis=1)
        assert result.sample.count == 256
        np.testing.assert_allclose(radii, 1.0)
        h = result.sample.resolution
        assert result.sample.diameter == pytest.approx(2.0, abs=2 * h)
        assert result.sample.audit_resolution().ok

    def test_ground_truth(self):
        result = circle(level=6)
        assert result.spec.family == Family.CIRCLE
        assert result.truth.length == pytest.approx(2 * math.pi)


class TestKoch:
    def test_level_seven(self):
        result = koch(level=7)
        assert result.sample.count == 4**7 + 1
        assert result.truth.length == pytest.approx((4 / 3) ** 7)
        assert result.truth.known_dim == pytest.approx(math.log(4) / math.log(3))
        assert result.sample.resolution == pytest.approx(3.0**-7)

    def test_vertices_have_equal_spacing(self):
        vertices = koch_vertices(3)
        steps = np.linalg.norm(np.diff(vertices, axis=0), axis=1)
        np.testing.assert_allclose(steps, 3.0**-3)
        np.testing.assert_allclose(vertices[0], [0.0, 0.0])
        np.testing.assert_allclose(vertices[-1], [1.0, 0.0], atol=1e-12)

    def test_first_bump_points_up(self):
        vertices = koch_vertices(1)
        np.testing.assert_allclose(vertices[2], [0.5, math.sqrt(3) / 6])


class TestWarsawSine:
    def test_tags_and_limit_segment(self):
        result = warsaw_sine(pitch=0.01)
        sample = result.sample
        w_points = sample.points[sample.w_mask]
        assert np.all(w_points[:, 0] == 0.0)
        assert w_points[:, 1].min() == pytest.approx(-1.0)
        assert w_points[:, 1].max() == pytest.approx(1.0)
        assert np.all(sample.tags[sample.points[:, 0] > 0] == TAG_E)

    def test_graph_points_follow_the_curve(self):
        pitch = 0.01
        sample = warsaw_sine(pitch=pitch).sample
        # away from the oscillations chord midpoints stay close to the graph
        graph = sample.points[sample.points[:, 0] > 0.3]
        assert len(graph) > 10
        np.testing.assert_allclose(graph[:, 1], np.sin(1 / graph[:, 0]), atol=pitch)

    def test_resolution_is_the_pitch(self):
        result = warsaw_sine(pitch=0.01)
        assert result.sample.resolution == 0.01
        assert result.truth.total_E_length is None
        assert "3/2" in result.truth.notes

    def test_resolution_target_overrides_pitch(self):
        result = warsaw_sine(resolution_target=0.02)
        assert result.spec.params["pitch"] == 0.02

    def test_pitch_limits(self):
        with pytest.raises(ValueError, match="at most"):
            warsaw_sine(pitch=0.5)
        with pytest.raises(ResolutionUnreachableError):
            warsaw_sine(pitch=1e-7)
