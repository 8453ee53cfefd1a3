"""Module for convex-hull diameters of local pieces of the sample."""

import numpy as np

from .client import GeometryClient
from .hull import convex_hull_diameter


class ConvexityMixin(GeometryClient):
    """Mixin for the diameter of the convex hull of K ∩ B(x, r)."""

    def hull_diameter(self, x: np.ndarray, r: float) -> float:
        """
        Diameter of the convex hull of the sample inside B(x, r).

        Returns:
            The diameter, 0 for an empty or single-point ball

        Raises:
            ScaleBelowResolutionError: If r is below the resolution floor
            ValueError: If x lies farther from the sample than its diameter
        """
        x = np.asarray(x, dtype=float)
        self._check_scale(r)
        self._check_center(x)
        pts = self.ball_points(x, r)
        if len(pts) < 2:
            return 0.0
        return convex_hull_diameter(pts)

    def convex_density(self, x: np.ndarray, r: float) -> float:
        """Hull diameter of K ∩ B(x, r) divided by 2r, a value in [0, 1]."""
        return self.hull_diameter(x, r) / (2.0 * r)
