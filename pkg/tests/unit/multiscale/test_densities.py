"""Tests for the densities computed from scale profiles."""

import math

import numpy as np
import pytest

from wiggly_continua.multiscale import (
    BetaProfile,
    ScaleGrid,
    annulus_lower_bound,
    beta_integral,
    density_from_flags,
    flat_density,
    wiggliness_ratio,
    wiggly_density,
)


@pytest.fixture
def profile():
    """β = (0.1, 0, 0.2, 0.05) over the scales 1, 1/2, 1/4, 1/8."""
    return BetaProfile(
        x=(0.0, 0.0),
        grid=ScaleGrid(0.5, 0, 3),
        beta=np.array([0.1, 0.0, 0.2, 0.05]),
        empty=np.array([False, True, False, False]),
    )


@pytest.fixture
def empty_profile():
    return BetaProfile((0.0, 0.0), None, np.empty(0), np.empty(0, dtype=bool))


class TestBetaIntegral:
    def test_riemann_sum(self, profile):
        assert beta_integral(profile) == pytest.approx(math.log(2) * 0.0525)

    def test_constant_profile(self):
        grid = ScaleGrid(0.5, 0, 4)
        constant = BetaProfile((0.0, 0.0), grid, np.full(5, 0.05), np.zeros(5, bool))
        assert beta_integral(constant) == pytest.approx(5 * 0.05**2 * math.log(2))

    def test_empty_profile(self, empty_profile):
        assert beta_integral(empty_profile) == 0.0


class TestDensities:
    def test_wiggly_density(self, profile):
        density = wiggly_density(profile, 0.05)
        assert density.kind == "wiggly"
        assert density.value == 0.75
        assert density.running == pytest.approx([1.0, 0.5, 0.5, 0.5])
        assert density.extremum == 0.5
        assert density.threshold == 0.05

    def test_flat_density(self, profile):
        density = flat_density(profile, 0.05)
        assert density.value == 0.5
        assert density.running == pytest.approx([0.0, 0.5, 0.5, 0.5])

    def test_complementary_counts(self, profile):
        for beta0 in (0.01, 0.05, 0.15, 0.5):
            total = (
                wiggly_density(profile, beta0).value
                + flat_density(profile, beta0).value
            )
            assert total >= 1.0
        # no entry equals 0.15, so the counts are exactly complementary
        assert wiggly_density(profile, 0.15).value + flat_density(
            profile, 0.15
        ).value == pytest.approx(1.0)

    def test_integral_bounded_below_by_wiggly_annuli(self, profile):
        beta0 = 0.05
        density = wiggly_density(profile, beta0)
        bound = density.value * len(profile) * annulus_lower_bound(0.5, beta0)
        assert beta_integral(profile) >= bound

    @pytest.mark.parametrize("beta0", [0.0, 1.0, -0.1])
    def test_invalid_beta0(self, profile, beta0):
        with pytest.raises(ValueError, match="beta0"):
            wiggly_density(profile, beta0)

    def test_empty_profile_densities(self, empty_profile):
        wiggly = wiggly_density(empty_profile, 0.05)
        flat = flat_density(empty_profile, 0.05)
        assert wiggly.value == 0.0
        assert wiggly.extremum == 0.0
        assert wiggly.window is None
        assert wiggly.x == [0.0, 0.0]
        assert flat.value == 1.0
        assert flat.running == []

    def test_upper_density_from_flags(self):
        grid = ScaleGrid(0.5, 0, 3)
        density = density_from_flags(
            "nonporous", np.array([True, False, False, True]), grid, 0.2, lower=False
        )
        assert density.value == 0.5
        assert density.running == pytest.approx([1.0, 1.0, 1.0, 1.0])
        assert density.x is None


def test_wiggliness_ratio(profile):
    ratio = wiggliness_ratio(profile)
    assert ratio.prefix_means == pytest.approx([0.01, 0.005, 0.05 / 3, 0.013125])
    assert ratio.running_min == pytest.approx([0.01, 0.005, 0.005, 0.005])
    assert ratio.running_max == pytest.approx([0.01, 0.01, 0.05 / 3, 0.05 / 3])
    assert ratio.value == pytest.approx(0.013125)
    assert ratio.measured_beta0 == pytest.approx(math.sqrt(0.005))


def test_annulus_lower_bound():
    assert annulus_lower_bound(0.5, 0.1) == pytest.approx(0.0625 * 0.01 * math.log(2))


def test_profile_model(profile):
    model = profile.to_model()
    assert model.exponents == [0, 1, 2, 3]
    assert model.empty == [1]
    assert model.integral == pytest.approx(beta_integral(profile))
    assert model.window.k_max == 3
