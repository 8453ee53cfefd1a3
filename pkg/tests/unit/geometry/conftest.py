"""Test fixtures for geometry unit tests."""

import numpy as np
import pytest

from wiggly_continua.generators import cantor_third, circle, koch, segment
from wiggly_continua.geometry import GeometryConfig, SampleGeometry, TaggedSample


@pytest.fixture
def geometry_config():
    """A geometry configuration independent of the environment."""
    return GeometryConfig(
        resolution_guard=10.0, kernel_tolerance=1e-9, beta_cache_size=4096
    )


@pytest.fixture
def segment_sample():
    """The unit segment on the x-axis, 1025 equispaced points."""
    xs = np.linspace(0.0, 1.0, 1025)
    return TaggedSample.from_points(np.c_[xs, np.zeros_like(xs)], resolution=1 / 1024)


@pytest.fixture
def circle_sample():
    """The unit circle, 4096 equispaced points."""
    n = 4096
    theta = 2 * np.pi * np.arange(n) / n
    h = 2 * np.sin(np.pi / n)
    return TaggedSample.from_points(np.c_[np.cos(theta), np.sin(theta)], resolution=h)


@pytest.fixture
def filled_square_sample():
    """A full lattice of pitch 0.01 over the unit square."""
    axis = np.linspace(0.0, 1.0, 101)
    xx, yy = np.meshgrid(axis, axis, indexing="ij")
    return TaggedSample.from_points(np.c_[xx.ravel(), yy.ravel()], resolution=0.01)


@pytest.fixture
def segment_geometry(segment_sample, geometry_config):
    return SampleGeometry(segment_sample, geometry_config)


@pytest.fixture
def circle_geometry(circle_sample, geometry_config):
    return SampleGeometry(circle_sample, geometry_config)


@pytest.fixture(scope="module")
def corpus_samples():
    """Generated planar samples: segment, circle, Koch curve and Cantor set."""
    return [
        segment(level=10).sample,
        circle(level=12).sample,
        koch(level=6).sample,
        cantor_third(level=8).sample,
    ]
