"""The ``analyze`` command and the analysis pipeline behind it."""

import logging
from dataclasses import dataclass, fields
from pathlib import Path

import click
import numpy as np

from ..corona import CoronaBuilder, CoronaMeasure
from ..corona.tree import MASS_TOLERANCE
from ..dimension import DimensionEstimator
from ..exceptions import ScaleBelowResolutionError
from ..formats import (
    ATOMS_CSV,
    LOGLOG_CSV,
    POINTS_CSV,
    Dataset,
    read_dataset,
    write_atoms_csv,
    write_loglog_csv,
    write_points_csv,
    write_report,
)
from ..geometry import TaggedSample
from ..models.constants import DEFAULT_PROBE_POINTS
from ..models.corona import CoronaVariant
from ..models.dimension import BoundInputs
from ..models.generators import GroundTruth
from ..models.report import (
    BetaSection,
    CoronaSection,
    DatasetSummary,
    DensitySection,
    PointDensities,
    Report,
)
from ..multiscale import (
    BetaProfile,
    MultiscaleAnalyzer,
    flat_density,
    wiggliness_ratio,
    wiggly_density,
)
from ..utils.parallel import parallel_map
from .context import AnalysisContext
from .errors import exit_codes

logger = logging.getLogger("wiggly-continua.commands")


@dataclass(frozen=True)
class AnalysisSelection:
    """Which report sections to compute."""

    beta: bool = False
    density: bool = False
    porosity: bool = False
    convex: bool = False
    corona: bool = False
    dimension: bool = False

    @classmethod
    def everything(cls) -> "AnalysisSelection":
        return cls(**{f.name: True for f in fields(cls)})

    @property
    def any(self) -> bool:
        return any(getattr(self, f.name) for f in fields(self))

    @property
    def densities(self) -> bool:
        return self.density or self.porosity or self.convex


def probe_points(sample: TaggedSample, count: int = DEFAULT_PROBE_POINTS) -> np.ndarray:
    """
    Up to ``count`` W points spread evenly along the sample order.

    Falls back to every point when the sample has no W part.
    """
    candidates = np.flatnonzero(sample.w_mask)
    if len(candidates) == 0:
        candidates = np.arange(sample.count)
    picks = np.unique(
        np.linspace(0, len(candidates) - 1, num=min(count, len(candidates))).round()
    ).astype(np.int64)
    return sample.points[candidates[picks]]


def beta_profiles(
    analyzer: MultiscaleAnalyzer, probes: np.ndarray
) -> list[BetaProfile]:
    """β profiles at the probes; probes with no usable scale are dropped."""
    profiles = parallel_map(analyzer.beta_profile, list(probes))
    usable = [p for p in profiles if p.grid is not None]
    if len(usable) < len(profiles):
        logger.warning(
            f"{len(profiles) - len(usable)} of {len(profiles)} probe points have "
            "no scale above the resolution floor"
        )
    return usable


def beta_section(
    analyzer: MultiscaleAnalyzer,
    profiles: list[BetaProfile],
    truth: GroundTruth | None = None,
) -> BetaSection:
    """The β profiles and, for planar samples, the dyadic β sum."""
    tsp = None
    tsp_ratio = None
    if analyzer.sample.ambient_dim == 2:
        tsp = analyzer.tsp_functional()
        if truth is not None and truth.length:
            tsp_ratio = tsp.total / truth.length
    else:
        logger.info("Dyadic β sum skipped for a non-planar sample")
    return BetaSection(
        window=analyzer.default_grid().window(),
        tolerance=analyzer.config.kernel_tolerance,
        profiles=[p.to_model() for p in profiles],
        tsp=tsp,
        tsp_ratio=tsp_ratio,
    )


def _lower_quantile(values: list[float], quantile: float) -> float:
    return float(np.quantile(np.array(values, dtype=float), quantile))


def density_section(
    analyzer: MultiscaleAnalyzer,
    profiles: list[BetaProfile],
    quantile: float,
    *,
    porosity: bool = False,
    convex: bool = False,
) -> DensitySection | None:
    """
    Scale densities at every profiled point with their trimmed summaries.

    Args:
        analyzer: Scanner of the sample
        profiles: β profiles at the probe points
        quantile: Lower quantile used for the κ and d₀ summaries
        porosity: Also scan the nonporous density
        convex: Also scan the convex density

    Returns:
        The section, or None when no profile has a usable scale
    """
    if not profiles:
        logger.warning("No probe point supports a density scan")
        return None
    config = analyzer.multiscale_config

    def scan(profile: BetaProfile) -> PointDensities:
        x = np.array(profile.x)
        nonporous = None
        if porosity:
            try:
                nonporous = analyzer.porosity_density(x)
            except ValueError as e:
                logger.warning(f"Porosity density at {profile.x} skipped: {e}")
        convex_model = None
        if convex:
            convex_profile = analyzer.convex_density_profile(x)
            if convex_profile.grid is not None:
                convex_model = convex_profile.to_model()
        return PointDensities(
            x=list(profile.x),
            wiggly=wiggly_density(profile, config.beta0),
            flat=flat_density(profile, config.beta0),
            ratio=wiggliness_ratio(profile),
            nonporous=nonporous,
            convex=convex_model,
        )

    points = parallel_map(scan, profiles)
    wiggly = [p.wiggly.value for p in points]
    nonporous = [p.nonporous.extremum for p in points if p.nonporous is not None]
    convex_min = [min(p.convex.density) for p in points if p.convex is not None]
    section = DensitySection(
        window=analyzer.default_grid().window(),
        tolerance=analyzer.config.kernel_tolerance,
        beta0=config.beta0,
        porosity_epsilon=config.porosity_epsilon if porosity else None,
        quantile=quantile,
        points=points,
        mean_wiggly=float(np.mean(wiggly)),
        wiggly_fraction=float(np.mean(np.array(wiggly) > 0.5)),
        kappa_wiggly=_lower_quantile([p.wiggly.extremum for p in points], quantile),
        kappa_flat=_lower_quantile([p.flat.extremum for p in points], quantile),
        kappa_nonporous=_lower_quantile(nonporous, quantile) if nonporous else None,
        d0=_lower_quantile(convex_min, quantile) if convex_min else None,
        measured_beta0=_lower_quantile(
            [p.ratio.measured_beta0 for p in points], quantile
        ),
    )
    logger.info(
        f"Mean wiggly density {section.mean_wiggly:.3f} over {len(points)} points, "
        f"{section.wiggly_fraction:.0%} above 1/2"
    )
    return section


def bound_inputs(
    analyzer: MultiscaleAnalyzer, densities: DensitySection | None
) -> BoundInputs:
    """The measured quantities the bound formulas are evaluated on."""
    config = analyzer.multiscale_config
    inputs = BoundInputs(
        lam=config.lam,
        beta0=config.beta0,
        epsilon=config.porosity_epsilon,
        ambient_dim=analyzer.sample.ambient_dim,
    )
    if densities is None:
        return inputs
    return inputs.model_copy(
        update={
            "kappa": densities.kappa_wiggly,
            "kappa_flat": densities.kappa_flat,
            "kappa_nonporous": densities.kappa_nonporous,
            "d0": densities.d0,
        }
    )


def corona_section(builder: CoronaBuilder) -> tuple[CoronaSection, CoronaMeasure]:
    """
    Build the corona measure, check its invariants and audit its scaling.

    Raises:
        MeasureConstructionStuckError: If a ball cannot be refined
        AssertionError: If the finished measure breaks an invariant
    """
    config = builder.corona_config
    measure = builder.build_corona()
    measure.check_invariants(enforce_collapse=config.enforces_radius_collapse)
    try:
        audit = builder.scaling_audit(measure)
    except ScaleBelowResolutionError as e:
        logger.warning(f"Scaling audit skipped: {e}")
        audit = None
    section = CoronaSection(
        lam=builder.multiscale_config.lam,
        tolerance=MASS_TOLERANCE,
        tree=measure.to_model(),
        audit=audit,
    )
    return section, measure


def dataset_summary(dataset: Dataset, source: str | None = None) -> DatasetSummary:
    header = dataset.header
    sample = dataset.sample
    return DatasetSummary(
        source=source,
        family=header.family,
        params=dict(header.params),
        count=sample.count,
        w_count=int(np.count_nonzero(sample.w_mask)),
        resolution=sample.resolution,
        ambient_dim=sample.ambient_dim,
        diameter=sample.diameter,
        total_e_weight=sample.total_e_weight,
        truth=header.truth,
    )


def run_analysis(
    dataset: Dataset,
    context: AnalysisContext,
    selection: AnalysisSelection,
    points: int = DEFAULT_PROBE_POINTS,
    source: str | None = None,
) -> tuple[Report, CoronaMeasure | None]:
    """
    Compute the selected report sections on one dataset.

    Args:
        dataset: The dataset to analyse
        context: Resolved configuration
        selection: Sections to compute
        points: Number of probe points for the pointwise scans
        source: Dataset path recorded in the report

    Returns:
        The report and the corona measure when one was built
    """
    sample = dataset.sample
    builder = CoronaBuilder(
        sample, context.corona, context.multiscale, context.geometry
    )
    profiles: list[BetaProfile] = []
    if selection.beta or selection.densities:
        profiles = beta_profiles(builder, probe_points(sample, points))

    betas = None
    if selection.beta:
        betas = beta_section(builder, profiles, dataset.header.truth)

    densities = None
    if selection.densities:
        densities = density_section(
            builder,
            profiles,
            context.dimension.quantile,
            porosity=selection.porosity,
            convex=selection.convex,
        )

    corona = None
    measure = None
    if selection.corona:
        corona, measure = corona_section(builder)

    inputs = None
    dimension = None
    if selection.densities or selection.dimension:
        inputs = bound_inputs(builder, densities)
    if selection.dimension:
        estimator = DimensionEstimator(
            sample, context.dimension, context.multiscale, context.geometry
        )
        truth = dataset.header.truth
        dimension = estimator.dimension_report(
            measure=measure,
            inputs=inputs,
            box_ratio=None if truth is None else truth.box_ratio,
        )

    report = Report(
        dataset=dataset_summary(dataset, source),
        betas=betas,
        densities=densities,
        corona=corona,
        dimension=dimension,
        bound_inputs=inputs,
    )
    return report, measure


def write_csv_mirrors(
    directory: Path, report: Report, dataset: Dataset, measure: CoronaMeasure | None
) -> list[Path]:
    """Write the points, atoms and log-log CSV files that apply."""
    directory.mkdir(parents=True, exist_ok=True)
    written = [write_points_csv(dataset.sample, directory / POINTS_CSV)]
    if measure is not None:
        written.append(write_atoms_csv(measure, directory / ATOMS_CSV))
    if report.dimension is not None and report.dimension.box is not None:
        written.append(write_loglog_csv(report.dimension.box, directory / LOGLOG_CSV))
    return written


@click.command("analyze")
@click.argument(
    "dataset_path",
    metavar="DATASET",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)
@click.option("--beta", is_flag=True, help="β profiles and the dyadic β sum")
@click.option("--density", is_flag=True, help="Wiggly and flat scale densities")
@click.option("--porosity", is_flag=True, help="Nonporous scale density")
@click.option("--convex", is_flag=True, help="Convex density")
@click.option("--corona", is_flag=True, help="Corona measure and scaling audit")
@click.option("--dimension", is_flag=True, help="Box and local dimensions, bounds")
@click.option("--all", "run_all", is_flag=True, help="Every analysis")
@click.option(
    "--variant",
    type=click.Choice([v.value for v in CoronaVariant]),
    help="Corona variant",
)
@click.option("-M", "--budget", type=float, help="Wiggliness budget M")
@click.option("--lambda", "lam", type=float, help="Scale ratio λ")
@click.option("--beta0", type=float, help="Wiggliness cutoff β₀")
@click.option("--epsilon", type=float, help="E-density parameter ε of the corona")
@click.option("--porosity-epsilon", type=float, help="Porosity parameter")
@click.option(
    "--nonporous-epsilon", type=float, help="Porosity parameter of the nonporous corona"
)
@click.option("--n-max", type=int, help="Depth of the corona tree")
@click.option("--quantile", type=float, help="Lower quantile of the summaries")
@click.option("--probe-count", type=int, help="Probes of the scaling audit")
@click.option(
    "--points",
    type=click.IntRange(min=1),
    default=DEFAULT_PROBE_POINTS,
    show_default=True,
    help="Sample points the pointwise scans run at",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Report file (default: <dataset>.report.json)",
)
@click.option(
    "--csv-dir",
    type=click.Path(file_okay=False, path_type=Path),
    help="Directory for the CSV mirrors",
)
@exit_codes
def analyze_command(
    dataset_path: Path,
    beta: bool,
    density: bool,
    porosity: bool,
    convex: bool,
    corona: bool,
    dimension: bool,
    run_all: bool,
    variant: str | None,
    budget: float | None,
    lam: float | None,
    beta0: float | None,
    epsilon: float | None,
    porosity_epsilon: float | None,
    nonporous_epsilon: float | None,
    n_max: int | None,
    quantile: float | None,
    probe_count: int | None,
    points: int,
    output: Path | None,
    csv_dir: Path | None,
) -> None:
    """Analyse a dataset and write a JSON report."""
    selection = (
        AnalysisSelection.everything()
        if run_all
        else AnalysisSelection(beta, density, porosity, convex, corona, dimension)
    )
    if not selection.any:
        error_msg = "select at least one analysis, or --all"
        raise click.UsageError(error_msg)

    context = AnalysisContext.from_env(
        multiscale={"lam": lam, "beta0": beta0, "porosity_epsilon": porosity_epsilon},
        corona={
            "variant": variant,
            "budget": budget,
            "epsilon": epsilon,
            "n_max": n_max,
            "porosity_epsilon": nonporous_epsilon,
            "probe_count": probe_count,
        },
        dimension={"quantile": quantile},
    )
    dataset = read_dataset(dataset_path)
    report, measure = run_analysis(
        dataset, context, selection, points=points, source=str(dataset_path)
    )
    output = output or dataset_path.with_suffix(".report.json")
    write_report(report, output)
    if csv_dir is not None:
        write_csv_mirrors(csv_dir, report, dataset, measure)

    click.echo(f"{output}: report written")
    if report.densities is not None:
        click.echo(f"  mean wiggly density {report.densities.mean_wiggly:.4f}")
    if report.corona is not None:
        tree = report.corona.tree
        click.echo(f"  corona depth {tree.depth}, {tree.atom_count} atoms")
    if report.dimension is not None and report.dimension.box is not None:
        box = report.dimension.box
        click.echo(f"  box dimension {box.dim:.4f} +/- {box.stderr:.2g}")
