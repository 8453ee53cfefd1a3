"""The ``plot`` command: draw a report section as SVG."""

import logging
from pathlib import Path

import click

from ..formats import read_report
from ..plotting import DEFAULT_TREE_DEPTH, PLOT_KINDS, plot_report
from .errors import exit_codes

logger = logging.getLogger("wiggly-continua.commands")


@click.command("plot")
@click.argument(
    "report_path",
    metavar="REPORT",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)
@click.option(
    "--kind", type=click.Choice(PLOT_KINDS), required=True, help="What to draw"
)
@click.option(
    "--index", type=click.IntRange(min=0), default=0, help="Profile to draw"
)
@click.option(
    "--max-depth",
    type=click.IntRange(min=0),
    default=DEFAULT_TREE_DEPTH,
    show_default=True,
    help="Deepest corona level drawn",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    help="SVG file (default: <report>.<kind>.svg)",
)
@exit_codes
def plot_command(
    report_path: Path, kind: str, index: int, max_depth: int, output: Path | None
) -> None:
    """Draw a log-log fit, a β profile or a corona tree from a report."""
    report = read_report(report_path)
    output = output or report_path.with_suffix(f".{kind}.svg")
    plot_report(report, kind, output, index=index, max_depth=max_depth)
    click.echo(f"{output}: {kind} plot written")
