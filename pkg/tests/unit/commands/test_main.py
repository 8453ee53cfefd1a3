"""Tests for the command group: version, verbosity and environment files."""

import logging
import os

import pytest

from wiggly_continua import __version__, main
from wiggly_continua.formats import read_report


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert result.output == f"wiggly-continua, version {__version__}\n"


def test_help_lists_commands(runner):
    result = runner.invoke(main, ["--help"])
    assert result.exit_code == 0
    for command in ("generate", "analyze", "plot", "corpus"):
        assert command in result.output


@pytest.mark.parametrize(
    ("flags", "env", "level"),
    [
        ([], {}, logging.WARNING),
        (["-v"], {}, logging.INFO),
        (["-vv"], {}, logging.DEBUG),
        ([], {"WIGGLY_VERBOSE": "true"}, logging.INFO),
        ([], {"WIGGLY_VERY_VERBOSE": "1"}, logging.DEBUG),
    ],
)
def test_verbosity(runner, tmp_path, flags, env, level):
    os.environ.update(env)
    output = tmp_path / "s.jsonl"
    args = ["generate", "--family", "segment", "--level", "2", "-o", str(output)]
    result = runner.invoke(main, [*flags, *args])
    assert result.exit_code == 0, result.output
    assert logging.getLogger("wiggly-continua.generators").level == level


def test_env_file_configures_commands(runner, segment_path, tmp_path):
    env_file = tmp_path / "analysis.env"
    env_file.write_text("WIGGLY_LAMBDA=0.25\nWIGGLY_BETA0=0.1\n", encoding="utf-8")
    output = tmp_path / "report.json"
    result = runner.invoke(
        main,
        ["--env-file", str(env_file), "analyze", str(segment_path), "--density"]
        + ["--points", "2", "-o", str(output)],
    )
    assert result.exit_code == 0, result.output
    densities = read_report(output).densities
    assert densities.window.lam == 0.25
    assert densities.beta0 == 0.1


def test_malformed_environment_exits_2(runner, segment_path):
    os.environ["WIGGLY_LAMBDA"] = "half"
    result = runner.invoke(main, ["analyze", str(segment_path), "--beta"])
    assert result.exit_code == 2
    assert "WIGGLY_LAMBDA" in result.output


def test_missing_env_file(runner, tmp_path):
    result = runner.invoke(main, ["--env-file", str(tmp_path / "none.env"), "corpus"])
    assert result.exit_code == 2
