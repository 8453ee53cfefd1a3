"""The ``corpus`` command: box dimensions and calibration over every family."""

import logging
from pathlib import Path

import click

from ..dimension import DimensionEstimator, calibrate_constants
from ..dimension.boxcount import known_dim_gap
from ..exceptions import DegenerateFitError, WigglyContinuaError
from ..formats import write_report
from ..generators import default_spec, generate
from ..models.constants import DEFAULT_PROBE_POINTS
from ..models.dimension import BoundInputs
from ..models.generators import Family
from ..models.report import CorpusEntry, CorpusReport
from ..multiscale import MultiscaleAnalyzer
from .analyze import beta_profiles, bound_inputs, density_section, probe_points
from .context import AnalysisContext
from .errors import exit_codes

logger = logging.getLogger("wiggly-continua.commands")


def corpus_entry(
    family: Family, context: AnalysisContext, points: int = DEFAULT_PROBE_POINTS
) -> CorpusEntry:
    """
    Generate the desk-scale set of one family and measure it.

    Generation and scan failures are recorded on the entry instead of
    raised.
    """
    spec = default_spec(family)
    try:
        generated = generate(spec)
    except (WigglyContinuaError, ValueError) as e:
        logger.warning(f"{family.value}: generation failed: {e}")
        return CorpusEntry(
            family=family,
            params=dict(spec.params),
            count=0,
            resolution=0.0,
            inputs=BoundInputs(),
            error=str(e),
        )

    sample = generated.sample
    truth = generated.truth
    analyzer = MultiscaleAnalyzer(sample, context.multiscale, context.geometry)
    estimator = DimensionEstimator(
        sample, context.dimension, context.multiscale, context.geometry
    )
    error = None
    box = None
    try:
        box = estimator.box_dimension(ratio=truth.box_ratio)
    except DegenerateFitError as e:
        logger.warning(f"{family.value}: box dimension failed: {e}")
        error = str(e)

    profiles = beta_profiles(analyzer, probe_points(sample, points))
    densities = density_section(
        analyzer, profiles, context.dimension.quantile, porosity=True, convex=True
    )
    return CorpusEntry(
        family=family,
        params=dict(spec.params),
        count=sample.count,
        resolution=sample.resolution,
        known_dim=truth.known_dim,
        box_dim=None if box is None else box.dim,
        stderr=None if box is None else box.stderr,
        known_dim_gap=None if box is None else known_dim_gap(box, truth.known_dim),
        wiggly_density=None if densities is None else densities.mean_wiggly,
        inputs=bound_inputs(analyzer, densities),
        error=error,
    )


def run_corpus(
    families: list[Family],
    context: AnalysisContext,
    points: int = DEFAULT_PROBE_POINTS,
) -> CorpusReport:
    """Measure every family and calibrate the bound constants on the results."""
    entries = [corpus_entry(family, context, points) for family in families]
    records = [(e.box_dim, e.inputs) for e in entries if e.box_dim is not None]
    return CorpusReport(entries=entries, calibration=calibrate_constants(records))


@click.command("corpus")
@click.option(
    "--family",
    "families",
    type=click.Choice([f.value for f in Family]),
    multiple=True,
    help="Restrict the corpus to these families (repeatable)",
)
@click.option(
    "--points",
    type=click.IntRange(min=1),
    default=DEFAULT_PROBE_POINTS,
    show_default=True,
    help="Sample points the density scan runs at",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("corpus.json"),
    show_default=True,
    help="Corpus report file",
)
@exit_codes
def corpus_command(families: tuple[str, ...], points: int, output: Path) -> None:
    """Generate every family, fit box dimensions and calibrate the constants."""
    context = AnalysisContext.from_env()
    selected = [Family(f) for f in families] if families else list(Family)
    report = run_corpus(selected, context, points)
    write_report(report, output)
    for entry in report.entries:
        box = "-" if entry.box_dim is None else f"{entry.box_dim:.4f}"
        known = "-" if entry.known_dim is None else f"{entry.known_dim:.4f}"
        click.echo(f"{entry.family.value:<14} box {box:>7}  known {known:>7}")
    constants = report.calibration.constants
    click.echo(
        f"{output}: c = {constants.c:.4g}, c' = {constants.c_prime:.4g}, "
        f"C = {constants.capital_c:.4g}"
    )
