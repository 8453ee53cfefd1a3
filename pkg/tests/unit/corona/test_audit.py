"""Tests for the scaling audit."""

import math

import numpy as np
import pytest

from wiggly_continua.corona import fit_scaling
from wiggly_continua.models.corona import ScalingProbe

SMALL_BUDGET = 0.002


def audit_ball(r, mass, integral):
    return ScalingProbe(x=[0.0, 0.0], r=r, mass=mass, integral=integral)


def exponential_slack(audit):
    """Largest ratio μ / (C·(r/R)·exp(-C′·∫)) over the balls that bound C′."""
    return max(
        p.mass
        * audit.root_radius
        / p.r
        * math.exp(audit.c_prime * p.integral)
        / audit.c_linear
        for p in audit.probes
        if p.integral > 0 and p.mass > 0
    )


class TestFitScaling:
    def test_exponential_decay_is_recovered(self):
        balls = [audit_ball(1.0, math.exp(-i), float(i)) for i in range(4)]
        audit = fit_scaling(balls, 1.0)
        assert audit.c_prime_constrained
        assert audit.slope == pytest.approx(-1.0)
        assert audit.c_prime == pytest.approx(1.0)
        assert audit.c_linear == pytest.approx(1.0)
        assert audit.violations == 0

    def test_c_prime_is_the_largest_admissible_value(self):
        balls = [
            audit_ball(1.0, 1.0, 0.0),
            audit_ball(0.5, 0.25, 1.0),
            audit_ball(0.25, 0.25 * math.exp(-3.0), 2.0),
        ]
        audit = fit_scaling(balls, 1.0)
        assert audit.c_linear == pytest.approx(1.0)
        assert audit.c_prime == pytest.approx(math.log(2.0))
        assert exponential_slack(audit) == pytest.approx(1.0)
        assert audit.violations == 0

    def test_growth_clips_c_prime_at_zero(self):
        balls = [audit_ball(1.0, 0.1 * math.exp(i), float(i)) for i in range(3)]
        audit = fit_scaling(balls, 1.0)
        assert audit.slope == pytest.approx(1.0)
        assert audit.c_prime_constrained
        assert audit.c_prime == 0.0
        assert audit.c_linear == pytest.approx(0.1 * math.exp(2.0))

    def test_constant_integral_is_unconstrained(self):
        balls = [audit_ball(r, r, 0.0) for r in (0.1, 0.2, 0.4)]
        audit = fit_scaling(balls, 2.0)
        assert not audit.c_prime_constrained
        assert audit.slope is None
        assert audit.c_prime == 0.0
        assert audit.c_linear == pytest.approx(2.0)
        assert audit.c_unnormalised == pytest.approx(1.0)

    def test_massless_balls_do_not_bound_c_prime(self):
        balls = [audit_ball(1.0, 1.0, 0.0), audit_ball(0.5, 0.0, 2.0)]
        audit = fit_scaling(balls, 1.0)
        assert not audit.c_prime_constrained
        assert audit.violations == 0

    def test_two_balls_have_no_slope(self):
        balls = [audit_ball(0.5, 0.5, 0.0), audit_ball(0.25, 0.1, 1.0)]
        audit = fit_scaling(balls, 1.0)
        assert audit.slope is None
        assert audit.c_prime_constrained
        assert audit.c_prime == pytest.approx(math.log(2.5))


class TestScalingAudit:
    def test_segment_measure_is_linear(self, segment_builder):
        measure = segment_builder.build_corona()
        audit = segment_builder.scaling_audit(measure, probe_count=200, seed=1)
        assert len(audit.probes) == 200
        assert audit.root_radius == 1.0
        assert 0.5 <= audit.c_linear <= 4.0
        assert not audit.c_prime_constrained
        assert audit.violations == 0
        assert all(p.integral == pytest.approx(0.0, abs=1e-12) for p in audit.probes)

    def test_same_seed_same_balls(self, segment_builder):
        measure = segment_builder.build_corona()
        first = segment_builder.scaling_audit(measure, probe_count=20, seed=5)
        second = segment_builder.scaling_audit(measure, probe_count=20, seed=5)
        assert [p.x for p in first.probes] == [p.x for p in second.probes]

    def test_ball_radii_cycle_from_the_root(self, segment_builder):
        measure = segment_builder.build_corona()
        audit = segment_builder.scaling_audit(measure, probe_count=9, seed=0)
        radii = [p.r for p in audit.probes]
        np.testing.assert_allclose(radii[:7], 0.5 ** np.arange(7))
        np.testing.assert_allclose(radii[7:], [1.0, 0.5])

    def test_refined_koch_measure(self, koch_builder):
        measure = koch_builder.build_corona(budget=SMALL_BUDGET, n_max=3)
        assert measure.depth == 3
        audit = koch_builder.scaling_audit(measure, probe_count=200, seed=0)
        assert audit.c_prime_constrained
        assert audit.c_prime >= 0.0
        assert audit.violations == 0
        # no larger C′ keeps every bound
        assert exponential_slack(audit) == pytest.approx(1.0)
