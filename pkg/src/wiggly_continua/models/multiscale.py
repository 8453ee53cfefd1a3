"""
Models for multiscale scans.

These models serialise β profiles and the scale densities derived from
them. Scale-indexed arrays are keyed by the grid exponent k, the scale
being λ^k.
"""

from typing import Literal

from pydantic import Field

from .base import ReportModel

DensityKind = Literal["wiggly", "flat", "nonporous", "wiggliness_ratio"]


class ScaleWindow(ReportModel):
    """The exponent window [k_min, k_max] of a grid with ratio λ."""

    lam: float = Field(gt=0, lt=1)
    k_min: int
    k_max: int


class BetaProfileModel(ReportModel):
    """β(x, λ^k) for every exponent of a window."""

    x: list[float]
    window: ScaleWindow
    exponents: list[int]
    beta: list[float]
    empty: list[int] = Field(default_factory=list)
    approximate: bool = False
    integral: float = 0.0


class DensityEstimate(ReportModel):
    """
    A scale density over a finite window.

    ``value`` is the fraction of qualifying scales over the whole window.
    ``running`` holds, for every prefix of the window, the running minimum
    (lower-density kinds) or maximum (upper-density kinds) of the prefix
    fractions; its last entry is the liminf/limsup surrogate. ``window`` is
    None when no scale of the profile lies above the resolution floor.
    """

    kind: DensityKind
    value: float
    window: ScaleWindow | None
    threshold: float
    running: list[float] = Field(default_factory=list)
    x: list[float] | None = None

    @property
    def extremum(self) -> float:
        return self.running[-1] if self.running else self.value


class ConvexDensityModel(ReportModel):
    """d(x, λ^k) = hull diameter of K ∩ B(x, λ^k) over 2λ^k, and its integral."""

    x: list[float]
    window: ScaleWindow
    exponents: list[int]
    density: list[float]
    integral: float


class TSPResult(ReportModel):
    """Dyadic β-sum over a root square, with per-depth partial sums."""

    root_corner: list[float]
    root_side: float
    depths: list[int]
    partial_sums: list[float]
    total: float
    squares: int


class RatioEstimate(ReportModel):
    """
    Mean β² over every prefix of a window.

    ``running_min`` and ``running_max`` are the liminf and limsup surrogates;
    ``measured_beta0`` is the square root of the final running minimum.
    """

    value: float
    window: ScaleWindow
    prefix_means: list[float]
    running_min: list[float]
    running_max: list[float]
    measured_beta0: float
