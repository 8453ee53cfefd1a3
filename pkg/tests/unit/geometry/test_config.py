"""Tests for the geometry config module."""

import os
from unittest.mock import patch

import pytest

from wiggly_continua.geometry.config import GeometryConfig


def test_from_env_defaults():
    """Test that from_env falls back to the documented defaults."""
    with patch.dict(os.environ, {}, clear=True):
        config = GeometryConfig.from_env()
        assert config.resolution_guard == 10.0
        assert config.kernel_tolerance == 1e-9
        assert config.beta_cache_size == 65536


def test_from_env_overrides():
    """Test that from_env reads every WIGGLY_* geometry variable."""
    with patch.dict(
        os.environ,
        {
            "WIGGLY_RESOLUTION_GUARD": "4",
            "WIGGLY_KERNEL_TOLERANCE": "1e-6",
            "WIGGLY_BETA_CACHE_SIZE": "128",
        },
        clear=True,
    ):
        config = GeometryConfig.from_env()
        assert config.resolution_guard == 4.0
        assert config.kernel_tolerance == 1e-6
        assert config.beta_cache_size == 128


def test_from_env_invalid_number():
    """Test that a malformed value is reported with the variable name."""
    with patch.dict(os.environ, {"WIGGLY_RESOLUTION_GUARD": "ten"}, clear=True):
        with pytest.raises(ValueError, match="WIGGLY_RESOLUTION_GUARD"):
            GeometryConfig.from_env()


def test_non_positive_guard_rejected():
    with pytest.raises(ValueError, match="resolution_guard"):
        GeometryConfig(resolution_guard=0.0)
