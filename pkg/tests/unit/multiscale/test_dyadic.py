"""Tests for the dyadic β sums."""

import math

import numpy as np
import pytest

from wiggly_continua.generators import koch
from wiggly_continua.geometry import TaggedSample
from wiggly_continua.multiscale import MultiscaleAnalyzer
from wiggly_continua.multiscale.dyadic import busy_squares


def koch_ratios(levels, multiscale_config, geometry_config):
    ratios = []
    for level in levels:
        generated = koch(level=level)
        analyzer = MultiscaleAnalyzer(
            generated.sample, multiscale_config, geometry_config
        )
        ratios.append(analyzer.tsp_functional().total / generated.truth.length)
    return ratios


class TestBusySquares:
    def test_three_points_in_one_cell(self):
        pts = np.array([[0.05, 0.05], [0.1, 0.1], [0.2, 0.15]])
        busy = busy_squares(pts, np.zeros(2), 0.25, 4)
        assert {tuple(q) for q in busy.tolist()} == {(0, 0), (0, 1), (1, 0), (1, 1)}

    def test_boundary_of_tripled_square_counts(self):
        pts = np.array([[0.0, 0.0], [0.1, 0.0], [0.5, 0.0]])
        busy = busy_squares(pts, np.zeros(2), 0.25, 4)
        assert (0, 0) in {tuple(q) for q in busy.tolist()}

    def test_sparse_points(self):
        pts = np.array([[0.1, 0.1], [0.12, 0.1], [0.9, 0.9]])
        assert len(busy_squares(pts, np.zeros(2), 0.25, 4)) == 0


class TestTSPFunctional:
    def test_segment_sum_vanishes(self, segment_analyzer):
        result = segment_analyzer.tsp_functional()
        assert result.total == 0.0
        assert result.depths == list(range(len(result.depths)))
        # runs past the resolution floor down to the point spacing
        assert len(result.depths) > 7
        assert result.squares > 0

    def test_partial_sums_are_cumulative(self, koch_analyzer):
        result = koch_analyzer.tsp_functional(max_depth=5)
        assert result.depths == [0, 1, 2, 3, 4, 5]
        assert np.all(np.diff(result.partial_sums) >= 0.0)
        assert result.partial_sums[-1] == result.total
        assert result.total > 0.0

    def test_ends_below_point_spacing(self, multiscale_config, geometry_config):
        generated = koch(level=3)
        analyzer = MultiscaleAnalyzer(
            generated.sample, multiscale_config, geometry_config
        )
        result = analyzer.tsp_functional()
        last_side = result.root_side / 2 ** result.depths[-1]
        assert last_side < analyzer.min_scale
        assert 3 * last_side >= generated.sample.resolution / 4

    def test_root_square(self, koch_analyzer):
        root = koch_analyzer.root_square()
        assert root.root_corner == (0.0, 0.0)
        assert root.root_side == pytest.approx(1.0)

    def test_sum_tracks_koch_length(self, multiscale_config, geometry_config):
        ratios = koch_ratios(range(3, 6), multiscale_config, geometry_config)
        assert all(r > 0.0 for r in ratios)
        assert max(ratios) / min(ratios) <= 3.0

    @pytest.mark.slow
    def test_sum_tracks_koch_length_to_level_seven(
        self, multiscale_config, geometry_config
    ):
        ratios = koch_ratios(range(3, 8), multiscale_config, geometry_config)
        assert all(r > 0.0 for r in ratios)
        assert max(ratios) / min(ratios) <= 3.0

    def test_non_planar_sample(self, multiscale_config, geometry_config):
        sample = TaggedSample.from_points(np.eye(3), resolution=1.0)
        analyzer = MultiscaleAnalyzer(sample, multiscale_config, geometry_config)
        with pytest.raises(ValueError, match="planar"):
            analyzer.tsp_functional()


class TestBetaSumAtPoint:
    def test_koch_origin(self, koch_analyzer):
        total = koch_analyzer.beta_sum_at_point(np.array([0.0, 0.0]), max_depth=6)
        assert total >= 6 * (0.05 / 3) ** 2

    def test_point_outside_root(self, koch_analyzer):
        with pytest.raises(ValueError, match="outside the root square"):
            koch_analyzer.beta_sum_at_point(np.array([2.0, 2.0]))

    def test_comparable_to_ball_sum(self, koch_analyzer, koch_sample):
        root = koch_analyzer.root_square()
        depth = 6
        points = koch_sample.points[:: len(koch_sample.points) // 20]
        ratios = []
        for x in points:
            square_sum = koch_analyzer.beta_sum_at_point(x, max_depth=depth)
            ball_sum = math.fsum(
                koch_analyzer.beta_ball(x, 1.5 * root.root_side / 2**d).beta ** 2
                for d in range(depth + 1)
            )
            ratios.append(square_sum / ball_sum)
        assert 1 / 8 <= float(np.median(ratios)) <= 8
