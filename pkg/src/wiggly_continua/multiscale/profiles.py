"""Module for pointwise scale profiles."""

import logging

import numpy as np

from ..models.multiscale import DensityEstimate
from .client import MultiscaleClient
from .densities import BetaProfile, ConvexProfile, density_from_flags
from .grid import ScaleGrid

logger = logging.getLogger("wiggly-continua.multiscale")


class ProfilesMixin(MultiscaleClient):
    """Mixin for β, convex-density and porosity scans at a point."""

    def beta_profile(self, x: np.ndarray, grid: ScaleGrid | None = None) -> BetaProfile:
        """
        β(x, λ^k) for every scale of the grid.

        Scales below the resolution floor are dropped rather than raising.

        Args:
            x: Base point
            grid: Optional grid (defaults to the sample grid)

        Returns:
            The profile over the surviving window
        """
        x = np.asarray(x, dtype=float)
        key = tuple(float(c) for c in x)
        usable = self._usable(grid or self.default_grid(), self.min_scale)
        if usable is None:
            return BetaProfile(key, None, np.empty(0), np.empty(0, dtype=bool))
        values = [self.beta_ball(x, r) for _, r in usable]
        return BetaProfile(
            x=key,
            grid=usable,
            beta=np.array([v.beta for v in values]),
            empty=np.array([v.empty for v in values], dtype=bool),
            approximate=any(v.approximate for v in values),
        )

    def convex_density_profile(
        self, x: np.ndarray, grid: ScaleGrid | None = None
    ) -> ConvexProfile:
        """d(x, λ^k) for every scale of the grid, with its Riemann-sum integral."""
        x = np.asarray(x, dtype=float)
        key = tuple(float(c) for c in x)
        usable = self._usable(grid or self.default_grid(), self.min_scale)
        if usable is None:
            return ConvexProfile(key, None, np.empty(0))
        density = np.array([self.convex_density(x, r) for _, r in usable])
        return ConvexProfile(key, usable, np.clip(density, 0.0, 1.0))

    def porosity_density(
        self,
        x: np.ndarray,
        eps: float | None = None,
        grid: ScaleGrid | None = None,
    ) -> DensityEstimate:
        """
        Fraction of grid scales at which the sample is not ε-porous at x.

        Scales with εr below 2h are dropped.

        Raises:
            ValueError: If no scale of the grid supports a porosity probe
        """
        eps = self.multiscale_config.porosity_epsilon if eps is None else eps
        x = np.asarray(x, dtype=float)
        floor = 2.0 * self.sample.resolution / eps
        usable = self._usable(grid or self.default_grid(), floor)
        if usable is None:
            error_msg = f"no grid scale supports a porosity probe with eps={eps}"
            raise ValueError(error_msg)
        flags = np.array(
            [not self.porosity_probe(x, r, eps).porous for _, r in usable], dtype=bool
        )
        return density_from_flags(
            "nonporous", flags, usable, eps, tuple(float(c) for c in x)
        )
