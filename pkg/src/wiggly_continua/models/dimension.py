"""
Models for dimension estimates and the closed-form dimension bounds.
"""

from typing import Literal

from pydantic import Field

from .base import ReportModel
from .multiscale import ScaleWindow

BoundKind = Literal["lower", "upper"]
ConstantName = Literal["c", "c_prime", "capital_c"]


class BoxCountFit(ReportModel):
    """
    Least-squares fit of log N(λ^k) against k·log(1/λ).

    ``log_inv_scale`` and ``log_count`` are the fitted points, in window
    order from the coarsest scale.
    """

    dim: float
    stderr: float
    intercept: float
    window: ScaleWindow
    counts: list[int]
    log_inv_scale: list[float]
    log_count: list[float]


class LocalDimension(ReportModel):
    """Slope of log μ(B(x, r)) against log r at one atom."""

    x: list[float]
    slope: float | None = None
    stderr: float | None = None
    scales: int
    flagged: bool = False
    reason: str | None = None


class BoundConstantsModel(ReportModel):
    """The universal constants plugged into the bound formulas."""

    c: float = Field(gt=0)
    c_prime: float = Field(gt=0)
    capital_c: float = Field(gt=0)


class BoundInputs(ReportModel):
    """
    Measured quantities the bound formulas are evaluated on.

    ``kappa`` is the density of wiggly scales, ``kappa_flat`` that of flat
    scales and ``kappa_nonporous`` that of scales where the set is not
    ε-porous. ``d0`` is a lower bound on the convex density and
    ``ambient_dim`` the dimension d of the ambient space.
    """

    lam: float | None = None
    beta0: float | None = None
    kappa: float | None = None
    kappa_flat: float | None = None
    kappa_nonporous: float | None = None
    epsilon: float | None = None
    d0: float | None = None
    ambient_dim: int | None = None


class TheoremBound(ReportModel):
    """
    One evaluated bound.

    The value is affine in its constant: ``offset + slope × constant``.
    ``consistent`` compares the bound with a measured box dimension when one
    was supplied.
    """

    bound: str
    kind: BoundKind
    formula: str
    constant: ConstantName
    constant_value: float
    inputs: dict[str, float] = Field(default_factory=dict)
    computed: bool
    value: float | None = None
    offset: float | None = None
    slope: float | None = None
    reason: str | None = None
    consistent: bool | None = None


class CalibrationEntry(ReportModel):
    """The tightest valid constant of one bound over a set of records."""

    bound: str
    kind: BoundKind
    constant: ConstantName
    value: float | None = None
    records: int
    feasible: bool


class Calibration(ReportModel):
    """Constants calibrated so that every lower bound stays below box_dim."""

    constants: BoundConstantsModel
    entries: list[CalibrationEntry]


class DimensionReport(ReportModel):
    """Box dimension, local dimensions of a measure and the bound table."""

    box: BoxCountFit | None = None
    local_dims: list[LocalDimension] = Field(default_factory=list)
    mass_bound: float | None = None
    quantile: float
    constants: BoundConstantsModel
    theorem_bounds: dict[str, TheoremBound] = Field(default_factory=dict)
