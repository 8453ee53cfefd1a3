"""
Models for dataset headers, analysis reports and corpus tables.

Numeric sections carry the scale window they were measured on and the
tolerance they are accurate to.
"""

from typing import Literal

from pydantic import Field

from .base import ReportModel
from .constants import CORPUS_FORMAT, DATASET_FORMAT, REPORT_FORMAT, SCHEMA_VERSION
from .corona import CoronaTreeModel, ScalingAuditModel
from .dimension import BoundInputs, Calibration, DimensionReport
from .generators import Family, GroundTruth, ParamValue
from .multiscale import (
    BetaProfileModel,
    ConvexDensityModel,
    DensityEstimate,
    RatioEstimate,
    ScaleWindow,
    TSPResult,
)

Tag = Literal["W", "E"]


class DatasetHeader(ReportModel):
    """First line of a dataset file."""

    format: Literal["wiggly-dataset"] = DATASET_FORMAT
    schema_version: int = SCHEMA_VERSION
    family: Family | None = None
    params: dict[str, ParamValue] = Field(default_factory=dict)
    resolution: float = Field(gt=0)
    ambient_dim: int = Field(ge=2)
    count: int = Field(ge=1)
    diameter: float = Field(ge=0)
    truth: GroundTruth | None = None


class PointRecord(ReportModel):
    """One sample point of a dataset file."""

    x: list[float]
    tag: Tag
    e_weight: float = Field(ge=0)


class DatasetSummary(ReportModel):
    """The analysed dataset, as recorded in a report."""

    source: str | None = None
    family: Family | None = None
    params: dict[str, ParamValue] = Field(default_factory=dict)
    count: int
    w_count: int
    resolution: float
    ambient_dim: int
    diameter: float
    total_e_weight: float
    truth: GroundTruth | None = None


class BetaSection(ReportModel):
    """β profiles at the probe points and the dyadic β sum."""

    window: ScaleWindow
    tolerance: float
    profiles: list[BetaProfileModel]
    tsp: TSPResult | None = None
    tsp_ratio: float | None = None


class PointDensities(ReportModel):
    """Scale densities at one probe point."""

    x: list[float]
    wiggly: DensityEstimate
    flat: DensityEstimate
    ratio: RatioEstimate
    nonporous: DensityEstimate | None = None
    convex: ConvexDensityModel | None = None


class DensitySection(ReportModel):
    """
    Scale densities at the probe points with their trimmed summaries.

    The ``kappa_*`` and ``d0`` summaries are lower quantiles over the probe
    points of the per-point liminf surrogates; ``wiggly_fraction`` is the
    share of probe points whose wiggly density exceeds 1/2.
    """

    window: ScaleWindow
    tolerance: float
    beta0: float
    porosity_epsilon: float | None = None
    quantile: float
    points: list[PointDensities]
    mean_wiggly: float
    wiggly_fraction: float
    kappa_wiggly: float
    kappa_flat: float
    kappa_nonporous: float | None = None
    d0: float | None = None
    measured_beta0: float


class CoronaSection(ReportModel):
    """A corona construction with its scaling audit."""

    lam: float
    tolerance: float
    tree: CoronaTreeModel
    audit: ScalingAuditModel | None = None


class Report(ReportModel):
    """The document written by ``analyze``."""

    format: Literal["wiggly-report"] = REPORT_FORMAT
    schema_version: int = SCHEMA_VERSION
    dataset: DatasetSummary
    betas: BetaSection | None = None
    densities: DensitySection | None = None
    corona: CoronaSection | None = None
    dimension: DimensionReport | None = None
    bound_inputs: BoundInputs | None = None


class CorpusEntry(ReportModel):
    """One corpus family at its desk-scale parameters."""

    family: Family
    params: dict[str, ParamValue] = Field(default_factory=dict)
    count: int
    resolution: float
    known_dim: float | None = None
    box_dim: float | None = None
    stderr: float | None = None
    known_dim_gap: float | None = None
    wiggly_density: float | None = None
    inputs: BoundInputs
    error: str | None = None


class CorpusReport(ReportModel):
    """The document written by ``corpus``."""

    format: Literal["wiggly-corpus"] = CORPUS_FORMAT
    schema_version: int = SCHEMA_VERSION
    entries: list[CorpusEntry]
    calibration: Calibration
