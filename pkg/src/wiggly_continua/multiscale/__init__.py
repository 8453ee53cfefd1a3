"""Multiscale scans for wiggly-continua.

This module provides scale grids, pointwise β/convex-density/porosity scans,
the dyadic β sums and the densities derived from profiles.
"""

from .client import MultiscaleClient
from .config import MultiscaleConfig
from .densities import (
    BetaProfile,
    ConvexProfile,
    annulus_lower_bound,
    beta_integral,
    density_from_flags,
    flat_density,
    wiggliness_ratio,
    wiggly_density,
)
from .dyadic import DyadicMixin
from .grid import ScaleGrid
from .profiles import ProfilesMixin


class MultiscaleAnalyzer(ProfilesMixin, DyadicMixin):
    """
    Scale scans over one tagged sample.

    This class inherits from the multiscale mixins:
    - ProfilesMixin: β, convex-density and porosity scans at a point
    - DyadicMixin: dyadic β sums
    """

    pass


__all__ = [
    "BetaProfile",
    "ConvexProfile",
    "MultiscaleAnalyzer",
    "MultiscaleClient",
    "MultiscaleConfig",
    "ScaleGrid",
    "annulus_lower_bound",
    "beta_integral",
    "density_from_flags",
    "flat_density",
    "wiggliness_ratio",
    "wiggly_density",
]
