"""Test fixtures for multiscale unit tests."""

import pytest

from wiggly_continua.generators import circle, koch, segment
from wiggly_continua.generators.cantor import cantor_third
from wiggly_continua.geometry import GeometryConfig
from wiggly_continua.multiscale import MultiscaleAnalyzer, MultiscaleConfig


@pytest.fixture
def multiscale_config():
    """λ = 1/2, β₀ = 0.05, ε = 1/6."""
    return MultiscaleConfig(lam=0.5, beta0=0.05, porosity_epsilon=1 / 6)


@pytest.fixture
def geometry_config():
    return GeometryConfig(
        resolution_guard=10.0, kernel_tolerance=1e-9, beta_cache_size=4096
    )


@pytest.fixture
def make_analyzer(multiscale_config, geometry_config):
    """Build an analyzer for a sample with the test configuration."""

    def _make(sample):
        return MultiscaleAnalyzer(sample, multiscale_config, geometry_config)

    return _make


@pytest.fixture
def segment_analyzer(make_analyzer):
    return make_analyzer(segment(level=10).sample)


@pytest.fixture
def circle_analyzer(make_analyzer):
    return make_analyzer(circle(level=12).sample)


@pytest.fixture(scope="module")
def koch_sample():
    """The level-7 Koch polyline, shared across a module."""
    return koch(level=7).sample


@pytest.fixture
def koch_analyzer(make_analyzer, koch_sample):
    return make_analyzer(koch_sample)


@pytest.fixture
def cantor_analyzer(make_analyzer):
    return make_analyzer(cantor_third(level=8).sample)
