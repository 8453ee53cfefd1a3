"""Tests for the sample builder and resolution targeting."""

import numpy as np
import pytest

from wiggly_continua.exceptions import ResolutionUnreachableError
from wiggly_continua.generators.builder import (
    SampleBuilder,
    check_pitch,
    level_for_target,
)
from wiggly_continua.models.constants import TAG_E, TAG_W


class TestSampleBuilder:
    def test_w_polyline_keeps_vertices(self):
        builder = SampleBuilder(pitch=0.25)
        length = builder.add_polyline(np.array([[0.0, 0.0], [1.0, 0.0]]), TAG_W)
        sample = builder.build(0.25)

        assert length == pytest.approx(1.0)
        assert sample.count == 5
        np.testing.assert_allclose(sample.points[:, 0], [0.0, 0.25, 0.5, 0.75, 1.0])
        assert builder.max_gap == pytest.approx(0.25)

    def test_e_weights_add_up_to_length(self):
        builder = SampleBuilder(pitch=0.1)
        vertices = np.array([[0.0, 0.0], [0.3, 0.4], [0.3, 1.0]])
        length = builder.add_polyline(vertices, TAG_E)
        sample = builder.build(0.1)

        assert length == pytest.approx(1.1)
        assert sample.count == 11
        assert sample.total_e_weight == pytest.approx(1.1)
        assert np.all(sample.tags == TAG_E)

    def test_short_segments_become_midpoints(self):
        builder = SampleBuilder(pitch=0.5)
        starts = np.array([[0.0, 0.0], [2.0, 0.0]])
        ends = np.array([[0.1, 0.0], [2.0, 0.2]])
        builder.add_segments(starts, ends, TAG_E)
        sample = builder.build(0.5)

        np.testing.assert_allclose(sample.points, [[0.05, 0.0], [2.0, 0.1]])
        np.testing.assert_allclose(sample.e_weight, [0.1, 0.2])

    def test_w_points_never_carry_weight(self):
        builder = SampleBuilder(pitch=1.0)
        builder.add_points(np.array([[0.0, 0.0], [1.0, 0.0]]), TAG_W, np.ones(2))
        assert builder.build(1.0).total_e_weight == 0.0

    def test_spacing_above_resolution(self):
        builder = SampleBuilder(pitch=0.5)
        builder.add_polyline(np.array([[0.0, 0.0], [1.0, 0.0]]), TAG_W)
        with pytest.raises(ValueError, match="exceeds the declared resolution"):
            builder.build(0.1)

    def test_empty_builder(self):
        with pytest.raises(ValueError, match="no points"):
            SampleBuilder(pitch=0.1).build(0.1)

    def test_pitch_must_be_positive(self):
        with pytest.raises(ValueError, match="pitch"):
            SampleBuilder(pitch=0.0)


class TestLevelForTarget:
    def test_default_without_target(self):
        assert level_for_target(lambda n: 2.0**-n, None, None, 5, 10) == 5

    def test_coarsest_level_meeting_target(self):
        assert level_for_target(lambda n: 2.0**-n, 0.1, None, 5, 10) == 4

    def test_explicit_level_wins(self):
        assert level_for_target(lambda n: 2.0**-n, None, 7, 5, 10) == 7

    def test_explicit_level_too_coarse(self):
        with pytest.raises(ResolutionUnreachableError) as excinfo:
            level_for_target(lambda n: 2.0**-n, 0.1, 3, 5, 10)
        assert excinfo.value.achievable_level == 3
        assert excinfo.value.achievable_resolution == pytest.approx(0.125)

    def test_target_beyond_max_level(self):
        with pytest.raises(ResolutionUnreachableError, match="unreachable") as excinfo:
            level_for_target(lambda n: 2.0**-n, 1e-9, None, 5, 10)
        assert excinfo.value.achievable_level == 10

    def test_level_out_of_range(self):
        with pytest.raises(ValueError, match="level must lie"):
            level_for_target(lambda n: 2.0**-n, None, 11, 5, 10)


def test_check_pitch():
    check_pitch(0.1, 0.05, "demo")
    with pytest.raises(ResolutionUnreachableError, match="truncation distance"):
        check_pitch(0.01, 0.05, "demo")
