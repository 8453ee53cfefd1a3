"""Tests for the environment variable helpers."""

import os
from unittest.mock import patch

import pytest

from wiggly_continua.utils.env import env_float, env_int, is_env_flag_enabled


@pytest.mark.parametrize(
    ("value", "expected"),
    [("true", True), ("TRUE", True), ("1", True), ("yes", True), ("no", False)],
)
def test_flag_values(value, expected):
    with patch.dict(os.environ, {"WIGGLY_FLAG": value}, clear=True):
        assert is_env_flag_enabled("WIGGLY_FLAG") is expected


def test_flag_default():
    with patch.dict(os.environ, {}, clear=True):
        assert is_env_flag_enabled("WIGGLY_FLAG") is False
        assert is_env_flag_enabled("WIGGLY_FLAG", "true") is True


class TestNumbers:
    def test_unset_and_blank_use_default(self):
        with patch.dict(os.environ, {"WIGGLY_BLANK": "  "}, clear=True):
            assert env_float("WIGGLY_MISSING", 0.5) == 0.5
            assert env_float("WIGGLY_BLANK", 0.5) == 0.5
            assert env_int("WIGGLY_MISSING", 6) == 6

    def test_parsed(self):
        with patch.dict(os.environ, {"WIGGLY_M": "3.5", "WIGGLY_N": " 4 "}, clear=True):
            assert env_float("WIGGLY_M", 1.0) == 3.5
            assert env_int("WIGGLY_N", 1) == 4

    def test_malformed_float(self):
        with patch.dict(os.environ, {"WIGGLY_M": "lots"}, clear=True):
            with pytest.raises(ValueError, match="WIGGLY_M must be a number"):
                env_float("WIGGLY_M", 1.0)

    def test_malformed_int(self):
        with patch.dict(os.environ, {"WIGGLY_N": "2.5"}, clear=True):
            with pytest.raises(ValueError, match="WIGGLY_N must be an integer"):
                env_int("WIGGLY_N", 1)
