"""Tests for the pointwise scale profiles."""

import math

import numpy as np
import pytest

from wiggly_continua.generators import cantor_third, comb_blocks, julia, warsaw_sine
from wiggly_continua.geometry import GeometryConfig, TaggedSample
from wiggly_continua.multiscale import (
    MultiscaleAnalyzer,
    MultiscaleConfig,
    ScaleGrid,
    beta_integral,
    flat_density,
    wiggly_density,
)


class TestBetaProfile:
    def test_segment_is_flat(self, segment_analyzer):
        profile = segment_analyzer.beta_profile(np.array([0.5, 0.0]))
        assert len(profile) > 0
        assert np.all(profile.beta == 0.0)
        assert wiggly_density(profile, 0.05).value == 0.0
        assert flat_density(profile, 0.05).value == 1.0
        assert beta_integral(profile) == 0.0

    def test_koch_self_similar_profile(self, koch_analyzer):
        profile = koch_analyzer.beta_profile(
            np.array([0.0, 0.0]), ScaleGrid(1 / 3, 0, 4)
        )
        np.testing.assert_allclose(profile.beta, math.sqrt(3) / 12, rtol=1e-6)

    def test_koch_is_wiggly_on_the_dyadic_grid(self, koch_analyzer):
        profile = koch_analyzer.beta_profile(np.array([0.0, 0.0]), ScaleGrid(0.5, 2, 6))
        assert np.all(profile.beta >= 0.05)
        assert wiggly_density(profile, 0.05).value == 1.0
        assert flat_density(profile, 0.01).value == 0.0
        assert beta_integral(profile) >= 5 * 0.05**2 * math.log(2)

    def test_circle_beta_scales_like_radius(self, circle_analyzer):
        grid = ScaleGrid(0.5, 2, 4)
        profile = circle_analyzer.beta_profile(np.array([1.0, 0.0]), grid)
        np.testing.assert_allclose(profile.beta, grid.scales / 4, rtol=0.1)

    def test_circle_becomes_flat_at_small_scales(self, circle_analyzer):
        profile = circle_analyzer.beta_profile(
            np.array([1.0, 0.0]), ScaleGrid(0.5, 1, 6)
        )
        density = flat_density(profile, 0.05)
        assert density.value == pytest.approx(4 / 6)
        assert density.running[-1] == pytest.approx(4 / 6)

    def test_grid_below_floor_gives_empty_profile(self, segment_analyzer):
        profile = segment_analyzer.beta_profile(
            np.array([0.5, 0.0]), ScaleGrid(0.5, 10, 12)
        )
        assert profile.grid is None
        assert len(profile) == 0
        assert beta_integral(profile) == 0.0

    def test_grid_truncated_at_floor(self, segment_analyzer):
        profile = segment_analyzer.beta_profile(
            np.array([0.5, 0.0]), ScaleGrid(0.5, 1, 12)
        )
        assert profile.grid == ScaleGrid(0.5, 1, 6)

    def test_default_grid(self, segment_analyzer):
        profile = segment_analyzer.beta_profile(np.array([0.0, 0.0]))
        assert profile.grid == ScaleGrid(0.5, 0, 6)

    def test_warsaw_sine_is_wiggly_on_the_limit_segment(self, make_analyzer):
        analyzer = make_analyzer(warsaw_sine().sample)
        for y in np.linspace(-0.9, 0.9, 7):
            profile = analyzer.beta_profile(np.array([0.0, y]))
            assert len(profile) >= 3
            assert wiggly_density(profile, 0.05).value > 0.5, y

    @pytest.mark.slow
    def test_julia_dendrite_is_wiggly_almost_everywhere(self):
        sample = julia("i", depth=20).sample
        config = MultiscaleConfig(lam=0.5, beta0=0.02, porosity_epsilon=1 / 6)
        # a guard of 5 keeps the 2**-6 balls at the default resolution 2e-3
        geometry = GeometryConfig(
            resolution_guard=5.0, kernel_tolerance=1e-9, beta_cache_size=4096
        )
        analyzer = MultiscaleAnalyzer(sample, config, geometry)
        grid = ScaleGrid(0.5, 2, 6)
        rng = np.random.default_rng(31)
        picks = rng.choice(sample.count, size=200, replace=False)
        wiggly = []
        for i in picks:
            profile = analyzer.beta_profile(sample.points[i], grid)
            assert len(profile) == 5
            wiggly.append(wiggly_density(profile, 0.02).value > 0.5)
        assert np.mean(wiggly) >= 0.9


class TestConvexDensity:
    def test_segment_fills_every_ball(self, segment_analyzer):
        profile = segment_analyzer.convex_density_profile(
            np.array([0.5, 0.0]), ScaleGrid(0.5, 1, 4)
        )
        np.testing.assert_allclose(profile.density, 1.0)
        assert profile.integral == pytest.approx(4 * math.log(2))

    def test_cantor_keeps_half_the_diameter(self, cantor_analyzer):
        profile = cantor_analyzer.convex_density_profile(
            np.array([0.0, 0.0]), ScaleGrid(1 / 3, 1, 4)
        )
        assert np.all(profile.density >= 0.25)

    @pytest.mark.slow
    def test_cantor_density_is_bounded_below_everywhere(self, make_analyzer):
        sample = cantor_third(level=9).sample
        analyzer = make_analyzer(sample)
        rng = np.random.default_rng(37)
        grid = ScaleGrid(1 / 3, 1, 6)
        for x in sample.points:
            profile = analyzer.convex_density_profile(x, grid)
            assert len(profile.density) == 6
            assert np.all(profile.density >= 0.24), tuple(x)
            for r in rng.uniform(3.0**-6, 3.0**-1, size=3):
                assert analyzer.convex_density(x, r) >= 0.24, (tuple(x), r)

    def test_ball_missing_the_sample(self, cantor_analyzer):
        profile = cantor_analyzer.convex_density_profile(
            np.array([0.5, 0.5]), ScaleGrid(0.5, 2, 3)
        )
        np.testing.assert_array_equal(profile.density, 0.0)

    def test_model(self, segment_analyzer):
        model = segment_analyzer.convex_density_profile(
            np.array([0.5, 0.0]), ScaleGrid(0.5, 1, 2)
        ).to_model()
        assert model.exponents == [1, 2]
        assert model.window.lam == 0.5


class TestPorosityDensity:
    def test_filled_square_is_never_porous(self, make_analyzer):
        axis = np.linspace(0.0, 1.0, 65)
        xx, yy = np.meshgrid(axis, axis, indexing="ij")
        sample = TaggedSample.from_points(np.c_[xx.ravel(), yy.ravel()], 1 / 64)
        density = make_analyzer(sample).porosity_density(
            np.array([0.5, 0.5]), grid=ScaleGrid(0.5, 1, 2)
        )
        assert density.kind == "nonporous"
        assert density.value == 1.0

    def test_cantor_is_porous(self, cantor_analyzer):
        density = cantor_analyzer.porosity_density(
            np.array([0.0, 0.0]), eps=1 / 6, grid=ScaleGrid(1 / 3, 1, 4)
        )
        assert density.value == 0.0
        assert density.threshold == pytest.approx(1 / 6)

    def test_segment_is_porous(self, segment_analyzer):
        density = segment_analyzer.porosity_density(
            np.array([0.5, 0.0]), grid=ScaleGrid(0.5, 1, 3)
        )
        assert density.value == 0.0

    def test_comb_fills_coarse_balls(self, make_analyzer):
        analyzer = make_analyzer(comb_blocks(levels=4).sample)
        density = analyzer.porosity_density(
            np.array([0.5, 0.0]), eps=0.25, grid=ScaleGrid(0.5, 1, 1)
        )
        assert density.value == 1.0

    def test_no_usable_scale(self, segment_analyzer):
        with pytest.raises(ValueError, match="no grid scale supports"):
            segment_analyzer.porosity_density(
                np.array([0.5, 0.0]), grid=ScaleGrid(0.5, 8, 9)
            )
