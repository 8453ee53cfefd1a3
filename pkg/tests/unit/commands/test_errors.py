"""Tests for the exit-code mapping."""

import click
import pytest
from click.testing import CliRunner

from wiggly_continua.commands import EXIT_CONSTRUCTION, EXIT_USAGE, exit_codes
from wiggly_continua.exceptions import (
    DatasetFormatError,
    MeasureConstructionStuckError,
    MissingReportSectionError,
)


def _command(error):
    @click.command()
    @exit_codes
    def failing():
        raise error

    return failing


@pytest.mark.parametrize(
    ("error", "code", "message"),
    [
        (ValueError("bad value"), EXIT_USAGE, "Error: bad value"),
        (DatasetFormatError("bad file"), EXIT_USAGE, "Error: bad file"),
        (MissingReportSectionError("no tree"), EXIT_USAGE, "Error: no tree"),
        (FileNotFoundError("gone"), EXIT_USAGE, "Error: gone"),
        (
            MeasureConstructionStuckError("stuck", {"level": 2}),
            EXIT_CONSTRUCTION,
            "Error: stuck",
        ),
        (
            AssertionError("mass drift"),
            EXIT_CONSTRUCTION,
            "Error: invariant check failed: mass drift",
        ),
    ],
)
def test_exit_codes(error, code, message):
    result = CliRunner().invoke(_command(error))
    assert result.exit_code == code
    assert message in result.output


def test_key_error_message_is_unquoted():
    result = CliRunner().invoke(_command(MissingReportSectionError("no tree")))
    assert "'no tree'" not in result.output


def test_success_passes_through():
    @click.command()
    @exit_codes
    def ok():
        click.echo("done")

    result = CliRunner().invoke(ok)
    assert result.exit_code == 0
    assert result.output == "done\n"


def test_other_errors_propagate():
    result = CliRunner().invoke(_command(RuntimeError("boom")))
    assert isinstance(result.exception, RuntimeError)
