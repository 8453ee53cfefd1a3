"""Test fixtures for dimension unit tests."""

import numpy as np
import pytest

from wiggly_continua.corona import CoronaBuilder, CoronaConfig
from wiggly_continua.dimension import DimensionConfig, DimensionEstimator
from wiggly_continua.generators import koch, segment
from wiggly_continua.geometry import GeometryConfig, TaggedSample
from wiggly_continua.multiscale import MultiscaleConfig

MULTISCALE = MultiscaleConfig(lam=0.5, beta0=0.05, porosity_epsilon=1 / 6)
GEOMETRY = GeometryConfig(
    resolution_guard=10.0, kernel_tolerance=1e-9, beta_cache_size=4096
)


@pytest.fixture
def make_estimator():
    """Build a dimension estimator with explicit configs."""

    def _make(sample, config=None):
        return DimensionEstimator(
            sample, config or DimensionConfig(), MULTISCALE, GEOMETRY
        )

    return _make


@pytest.fixture
def make_corona():
    """Build the universal corona measure of a sample at the default M."""

    def _make(sample):
        builder = CoronaBuilder(
            sample, CoronaConfig(n_max=3, probe_count=200), MULTISCALE, GEOMETRY
        )
        return builder.build_corona()

    return _make


@pytest.fixture(scope="module")
def segment_sample():
    """The level-10 segment: 1025 points, h = 2^-10."""
    return segment(level=10).sample


@pytest.fixture(scope="module")
def koch7_sample():
    """The level-7 Koch polyline: 16385 points, h = 3^-7."""
    return koch(level=7).sample


@pytest.fixture
def square_sample():
    """A 101 x 101 lattice filling the unit square."""
    ticks = np.linspace(0.0, 1.0, 101)
    xx, yy = np.meshgrid(ticks, ticks)
    return TaggedSample.from_points(np.c_[xx.ravel(), yy.ravel()], 0.01)
