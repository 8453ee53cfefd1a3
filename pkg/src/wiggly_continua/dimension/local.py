"""Module for local dimensions of corona measures."""

import logging

import numpy as np
from scipy.stats import linregress

from ..corona import CoronaMeasure
from ..exceptions import DegenerateFitError
from ..models.dimension import LocalDimension
from ..multiscale import ScaleGrid
from ..utils.parallel import parallel_map
from .client import DimensionClient

logger = logging.getLogger("wiggly-continua.dimension")


def quantile_bound(local_dims: list[LocalDimension], quantile: float) -> float | None:
    """The quantile-trimmed infimum of the unflagged slopes, or None."""
    slopes = [d.slope for d in local_dims if not d.flagged and d.slope is not None]
    if not slopes:
        return None
    return float(np.quantile(np.array(slopes), quantile))


class LocalMixin(DimensionClient):
    """Mixin for local dimensions and the mass-distribution bound."""

    def local_grid(self, measure: CoronaMeasure) -> ScaleGrid:
        """
        The finest ``local_scales`` grid scales between the resolution floor
        and the root radius.

        Raises:
            ScaleBelowResolutionError: If the root ball is below the floor
        """
        grid = ScaleGrid.spanning(
            self.multiscale_config.lam, self.min_scale, measure.root_radius
        )
        k_min = max(grid.k_min, grid.k_max - self.dimension_config.local_scales + 1)
        return ScaleGrid(grid.lam, k_min, grid.k_max)

    def local_dimension(
        self,
        measure: CoronaMeasure,
        x: np.ndarray,
        grid: ScaleGrid | None = None,
    ) -> LocalDimension:
        """
        Regression slope of log μ(B(x, λ^k)) against log λ^k.

        Scales where the ball carries no mass are skipped. The estimate is
        flagged, with no slope, when fewer than 3 scales remain or the mass
        never changes across the window (no other atom comes within reach).

        Args:
            measure: The measure
            x: Base point, normally an atom
            grid: Scales (defaults to ``local_grid``)

        Returns:
            The estimate

        Raises:
            DegenerateFitError: If every ball of the window has zero mass
        """
        x = np.asarray(x, dtype=float)
        grid = grid or self.local_grid(measure)
        scales = grid.scales
        masses = np.array([measure.query(x, float(r)) for r in scales])
        valid = masses > 0
        key = [float(c) for c in x]
        if not np.any(valid):
            error_msg = f"every ball around {tuple(key)} has zero mass"
            raise DegenerateFitError(error_msg)

        log_r = np.log(scales[valid])
        log_mass = np.log(masses[valid])
        if len(log_r) < 3:
            return LocalDimension(
                x=key,
                scales=len(log_r),
                flagged=True,
                reason="fewer than 3 scales with positive mass",
            )
        if np.ptp(log_mass) == 0.0:
            return LocalDimension(
                x=key,
                scales=len(log_r),
                flagged=True,
                reason="no other atom within the window",
            )
        fit = linregress(log_r, log_mass)
        return LocalDimension(
            x=key,
            slope=float(fit.slope),
            stderr=float(fit.stderr),
            scales=len(log_r),
        )

    def local_dimensions(
        self,
        measure: CoronaMeasure,
        grid: ScaleGrid | None = None,
        max_atoms: int | None = None,
    ) -> list[LocalDimension]:
        """
        Local dimensions at up to ``max_atoms`` atoms, evenly spread over the
        atom list.
        """
        max_atoms = max_atoms or self.dimension_config.max_atoms
        grid = grid or self.local_grid(measure)
        count = len(measure.atom_masses)
        picks = np.unique(
            np.linspace(0, count - 1, num=min(count, max_atoms)).round()
        ).astype(np.int64)
        return parallel_map(
            lambda i: self.local_dimension(measure, measure.atom_points[i], grid),
            list(picks),
        )

    def mass_bound(
        self,
        measure: CoronaMeasure,
        grid: ScaleGrid | None = None,
        quantile: float | None = None,
    ) -> float | None:
        """
        The quantile-trimmed infimum of the local dimensions over atoms.

        Returns:
            The bound, or None when every estimate is flagged
        """
        quantile = self.dimension_config.quantile if quantile is None else quantile
        local_dims = self.local_dimensions(measure, grid)
        bound = quantile_bound(local_dims, quantile)
        if bound is None:
            logger.warning(
                f"Every one of {len(local_dims)} local dimensions is flagged; "
                "the measure is degenerate"
            )
        return bound
