"""
Discretised wiggliness functionals on scale profiles.

The integral ∫ β²(x, t) dt/t over a window is replaced by its left-endpoint
Riemann sum: each annulus [λ^(k+1), λ^k) contributes log(1/λ)·β²(x, λ^k).
"""

import math
from dataclasses import dataclass

import numpy as np

from ..models.multiscale import (
    BetaProfileModel,
    ConvexDensityModel,
    DensityEstimate,
    DensityKind,
    RatioEstimate,
)
from .grid import ScaleGrid


@dataclass(frozen=True, eq=False)
class BetaProfile:
    """β(x, λ^k) along a grid window.

    ``grid`` is None when every scale fell below the resolution floor.
    """

    x: tuple[float, ...]
    grid: ScaleGrid | None
    beta: np.ndarray
    empty: np.ndarray
    approximate: bool = False

    def __len__(self) -> int:
        return len(self.beta)

    def to_model(self) -> BetaProfileModel:
        grid = _require_grid(self.grid)
        return BetaProfileModel(
            x=list(self.x),
            window=grid.window(),
            exponents=[int(k) for k in grid.exponents],
            beta=[float(b) for b in self.beta],
            empty=[int(k) for k in grid.exponents[self.empty]],
            approximate=self.approximate,
            integral=beta_integral(self),
        )


@dataclass(frozen=True, eq=False)
class ConvexProfile:
    """d(x, λ^k) along a grid window."""

    x: tuple[float, ...]
    grid: ScaleGrid | None
    density: np.ndarray

    def __len__(self) -> int:
        return len(self.density)

    @property
    def integral(self) -> float:
        if self.grid is None:
            return 0.0
        return self.grid.log_step * math.fsum(self.density**2)

    def to_model(self) -> ConvexDensityModel:
        grid = _require_grid(self.grid)
        return ConvexDensityModel(
            x=list(self.x),
            window=grid.window(),
            exponents=[int(k) for k in grid.exponents],
            density=[float(d) for d in self.density],
            integral=self.integral,
        )


def _require_grid(grid: ScaleGrid | None) -> ScaleGrid:
    if grid is None:
        error_msg = "empty profile: every scale lies below the resolution floor"
        raise ValueError(error_msg)
    return grid


def beta_integral(profile: BetaProfile) -> float:
    """
    log(1/λ) · Σ_k β(x, λ^k)² over the profile window.

    An empty profile integrates to 0.
    """
    if profile.grid is None:
        return 0.0
    return profile.grid.log_step * math.fsum(profile.beta**2)


def _prefix_fractions(flags: np.ndarray) -> np.ndarray:
    return np.cumsum(flags) / np.arange(1, len(flags) + 1)


def density_from_flags(
    kind: DensityKind,
    flags: np.ndarray,
    grid: ScaleGrid,
    threshold: float,
    x: tuple[float, ...] | None = None,
    *,
    lower: bool = True,
) -> DensityEstimate:
    """
    Build a density estimate from per-scale qualification flags.

    Args:
        kind: Density kind
        flags: One boolean per grid scale
        grid: The grid the flags were computed on
        threshold: The defining cutoff
        x: Optional base point
        lower: Report running minima (liminf) when True, maxima (limsup) otherwise
    """
    flags = np.asarray(flags, dtype=bool)
    prefix = _prefix_fractions(flags)
    running = np.minimum.accumulate(prefix) if lower else np.maximum.accumulate(prefix)
    return DensityEstimate(
        kind=kind,
        value=float(flags.mean()),
        window=grid.window(),
        threshold=threshold,
        running=[float(v) for v in running],
        x=None if x is None else list(x),
    )


def _empty_density(
    kind: DensityKind, profile: BetaProfile, threshold: float, value: float
) -> DensityEstimate:
    return DensityEstimate(
        kind=kind, value=value, window=None, threshold=threshold, x=list(profile.x)
    )


def wiggly_density(profile: BetaProfile, beta0: float) -> DensityEstimate:
    """
    Fraction of scales with β >= β₀, with running prefix minima.

    A profile without scales has no wiggly scale: its density is 0.
    """
    _check_beta0(beta0)
    if profile.grid is None:
        return _empty_density("wiggly", profile, beta0, 0.0)
    return density_from_flags(
        "wiggly", profile.beta >= beta0, profile.grid, beta0, profile.x
    )


def flat_density(profile: BetaProfile, beta0: float) -> DensityEstimate:
    """
    Fraction of scales with β <= β₀, with running prefix maxima.

    A profile without scales has flat density 1.
    """
    _check_beta0(beta0)
    if profile.grid is None:
        return _empty_density("flat", profile, beta0, 1.0)
    return density_from_flags(
        "flat", profile.beta <= beta0, profile.grid, beta0, profile.x, lower=False
    )


def wiggliness_ratio(profile: BetaProfile) -> RatioEstimate:
    """
    Mean β² over each window prefix.

    This is the discrete form of ∫_r β²(x, t) dt/t divided by log(1/r)
    measured from the top of the window.
    """
    grid = _require_grid(profile.grid)
    means = np.cumsum(profile.beta**2) / np.arange(1, len(profile) + 1)
    running_min = np.minimum.accumulate(means)
    return RatioEstimate(
        value=float(means[-1]),
        window=grid.window(),
        prefix_means=[float(m) for m in means],
        running_min=[float(m) for m in running_min],
        running_max=[float(m) for m in np.maximum.accumulate(means)],
        measured_beta0=math.sqrt(float(running_min[-1])),
    )


def annulus_lower_bound(lam: float, beta0: float) -> float:
    """The contribution λ⁴·β₀²·log(1/λ) guaranteed by each wiggly annulus."""
    return lam**4 * beta0**2 * math.log(1.0 / lam)


def _check_beta0(beta0: float) -> None:
    if not 0.0 < beta0 < 1.0:
        error_msg = f"beta0 must lie in (0, 1), got {beta0}"
        raise ValueError(error_msg)
