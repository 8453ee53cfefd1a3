"""Tests for the TaggedSample type."""

import numpy as np
import pytest

from wiggly_continua.exceptions import EmptyBallError, EmptyPointSetError
from wiggly_continua.geometry import Ball, TaggedSample


def _two_part_sample():
    pts = np.array([[0.0, 0.0], [0.5, 0.0], [1.0, 0.0], [1.0, 0.5]])
    return TaggedSample.from_points(
        pts,
        resolution=0.5,
        tags=["W", "W", "E", "E"],
        e_weight=[0.0, 0.0, 0.25, 0.25],
    )


class TestInvariants:
    def test_defaults_to_w_tags(self, segment_sample):
        assert segment_sample.count == 1025
        assert segment_sample.ambient_dim == 2
        assert segment_sample.w_mask.all()
        assert segment_sample.total_e_weight == 0.0
        assert segment_sample.diameter == pytest.approx(1.0)

    def test_arrays_are_read_only(self, segment_sample):
        with pytest.raises(ValueError):
            segment_sample.points[0, 0] = 5.0

    def test_w_points_need_zero_weight(self):
        with pytest.raises(ValueError, match="zero E-weight"):
            TaggedSample.from_points(
                np.array([[0.0, 0.0], [1.0, 0.0]]),
                resolution=0.1,
                tags=["W", "E"],
                e_weight=[0.1, 0.1],
            )

    def test_negative_weight(self):
        with pytest.raises(ValueError, match="non-negative"):
            TaggedSample.from_points(
                np.array([[0.0, 0.0], [1.0, 0.0]]),
                resolution=0.1,
                tags=["E", "E"],
                e_weight=[0.1, -0.1],
            )

    def test_unknown_tag(self):
        with pytest.raises(ValueError, match="tags must be one of"):
            TaggedSample.from_points(
                np.array([[0.0, 0.0], [1.0, 0.0]]), resolution=0.1, tags=["W", "X"]
            )

    def test_stored_diameter_is_checked(self):
        with pytest.raises(ValueError, match="diameter"):
            TaggedSample.from_points(
                np.array([[0.0, 0.0], [1.0, 0.0]]), resolution=0.01, diameter=2.0
            )

    def test_empty_sample(self):
        with pytest.raises(EmptyPointSetError):
            TaggedSample.from_points(np.empty((0, 2)), resolution=0.1)

    def test_non_positive_resolution(self):
        with pytest.raises(ValueError, match="resolution"):
            TaggedSample.from_points(np.array([[0.0, 0.0], [1.0, 0.0]]), resolution=0.0)


class TestDerivedData:
    def test_length_weights_recover_length(self, segment_sample):
        total = segment_sample.length_weights.sum()
        # endpoints are counted with one and a half spacings
        assert total == pytest.approx(1.0 + 2 / 1024, rel=1e-9)

    def test_total_e_weight(self):
        sample = _two_part_sample()
        assert sample.total_e_weight == pytest.approx(0.5)
        assert list(sample.e_mask) == [False, False, True, True]

    def test_ball_indices_are_closed(self):
        sample = _two_part_sample()
        idx = sample.ball_indices(np.array([0.0, 0.0]), 0.5)
        assert list(idx) == [0, 1]

    def test_restricted(self):
        sample = _two_part_sample()
        sub = sample.restricted(Ball((1.0, 0.0), 0.5))
        assert sub.count == 3
        assert list(sub.tags) == ["W", "E", "E"]
        assert sub.resolution == sample.resolution

    def test_restricted_to_empty_ball(self):
        sample = _two_part_sample()
        with pytest.raises(EmptyBallError):
            sample.restricted(Ball((5.0, 5.0), 0.1))

    def test_transformed_scales_resolution_and_weights(self):
        sample = _two_part_sample()
        moved = sample.transformed(
            angle=np.pi / 2, shift=np.array([1.0, 1.0]), scale=2.0
        )
        assert moved.resolution == pytest.approx(1.0)
        assert moved.total_e_weight == pytest.approx(1.0)
        assert moved.diameter == pytest.approx(2 * sample.diameter)
        assert moved.points[1] == pytest.approx([1.0, 2.0])


class TestResolutionAudit:
    def test_uniform_segment_passes(self, segment_sample):
        audit = segment_sample.audit_resolution()
        assert audit.ok
        assert audit.max_gap == pytest.approx(1 / 1024)

    def test_gap_is_reported(self, caplog):
        pts = np.array([[0.0, 0.0], [0.01, 0.0], [0.5, 0.0], [0.51, 0.0]])
        sample = TaggedSample.from_points(pts, resolution=0.01)
        audit = sample.audit_resolution()
        assert audit.ok
        sparse = TaggedSample.from_points(pts[[0, 2]], resolution=0.01)
        assert not sparse.audit_resolution().ok
        assert "exceeds the declared resolution" in caplog.text
