"""Tests for λ-scale grids."""

import math

import numpy as np
import pytest

from wiggly_continua.exceptions import ScaleBelowResolutionError
from wiggly_continua.multiscale import ScaleGrid


class TestScaleGrid:
    def test_spanning(self):
        grid = ScaleGrid.spanning(0.5, 0.01, 1.0)
        assert (grid.k_min, grid.k_max) == (0, 6)
        assert len(grid) == 7
        np.testing.assert_allclose(grid.scales, 0.5 ** np.arange(7))

    def test_spanning_includes_exact_powers(self):
        grid = ScaleGrid.spanning(0.5, 0.125, 0.5)
        assert (grid.k_min, grid.k_max) == (1, 3)

    def test_no_power_in_range(self):
        with pytest.raises(ScaleBelowResolutionError, match="no power"):
            ScaleGrid.spanning(0.5, 0.3, 0.4)

    def test_for_sample(self):
        grid = ScaleGrid.for_sample(1.0, 1 / 1024, 0.5, 10.0)
        assert (grid.k_min, grid.k_max) == (0, 6)

    def test_iteration_pairs_exponent_and_scale(self):
        grid = ScaleGrid(0.5, 2, 4)
        assert list(grid) == [(2, 0.25), (3, 0.125), (4, 0.0625)]
        assert grid.log_step == pytest.approx(math.log(2))

    def test_truncated(self):
        grid = ScaleGrid(0.5, 0, 8)
        assert grid.truncated(min_scale=0.1) == ScaleGrid(0.5, 0, 3)
        assert grid.truncated(max_scale=0.3) == ScaleGrid(0.5, 2, 8)
        assert grid.truncated(min_scale=2.0) is None

    def test_shifted(self):
        assert ScaleGrid(0.5, 0, 6).shifted(2) == ScaleGrid(0.5, 2, 8)

    def test_window(self):
        window = ScaleGrid(0.25, 1, 3).window()
        assert (window.lam, window.k_min, window.k_max) == (0.25, 1, 3)

    def test_invalid(self):
        with pytest.raises(ValueError, match="lambda"):
            ScaleGrid(1.5, 0, 1)
        with pytest.raises(ValueError, match="empty grid window"):
            ScaleGrid(0.5, 3, 1)
