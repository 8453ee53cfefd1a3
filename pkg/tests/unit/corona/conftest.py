"""Test fixtures for corona unit tests."""

import numpy as np
import pytest

from wiggly_continua.corona import CoronaBuilder, CoronaConfig
from wiggly_continua.generators import koch, segment
from wiggly_continua.generators.cantor import four_corners
from wiggly_continua.geometry import GeometryConfig, TaggedSample
from wiggly_continua.models.corona import CoronaVariant
from wiggly_continua.multiscale import MultiscaleConfig


@pytest.fixture
def corona_config():
    """Universal variant with the standing defaults M = 4 log 10, ε = 1/100."""
    return CoronaConfig(variant=CoronaVariant.UNIVERSAL, n_max=3, probe_count=200)


@pytest.fixture
def make_builder(corona_config):
    """Build a corona builder for a sample, optionally overriding the config."""

    def _make(sample, config=None):
        return CoronaBuilder(
            sample,
            config or corona_config,
            MultiscaleConfig(lam=0.5, beta0=0.05, porosity_epsilon=1 / 6),
            GeometryConfig(
                resolution_guard=10.0, kernel_tolerance=1e-9, beta_cache_size=4096
            ),
        )

    return _make


@pytest.fixture(scope="module")
def koch_sample():
    """The level-5 Koch polyline: 1025 points, h = 3^-5."""
    return koch(level=5).sample


@pytest.fixture
def koch_builder(make_builder, koch_sample):
    return make_builder(koch_sample)


@pytest.fixture
def segment_builder(make_builder):
    return make_builder(segment(level=10).sample)


@pytest.fixture
def corners_builder(make_builder):
    config = CoronaConfig(variant=CoronaVariant.AVOIDING, n_max=2)
    return make_builder(four_corners(level=3).sample, config)


@pytest.fixture
def origin():
    return np.array([0.0, 0.0])


@pytest.fixture(scope="module")
def star_sample():
    """
    Six rays from the origin with points at radii 2^(-m/4), m = 0..120.

    Around the origin the hexagon of outermost points gives β = √3/2 at every
    grid scale, and the declared resolution leaves thirty halvings above the
    floor, enough for the default budget to run out near 2^-17.
    """
    radii = 2.0 ** (-np.arange(121) / 4.0)
    angles = np.arange(6) * np.pi / 3.0
    rays = radii[None, :, None] * np.stack([np.cos(angles), np.sin(angles)], 1)[
        :, None, :
    ]
    points = np.vstack([np.zeros((1, 2)), rays.reshape(-1, 2)])
    return TaggedSample.from_points(points, 1e-10)
