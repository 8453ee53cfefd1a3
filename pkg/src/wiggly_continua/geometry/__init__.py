"""Geometry kernel for wiggly-continua.

This module provides the tagged sample type and the geometric queries run
against it: β numbers, local hull diameters and porosity probes.
"""

from .beta import BetaMixin
from .client import GeometryClient
from .config import GeometryConfig
from .convexity import ConvexityMixin
from .hull import convex_hull, convex_hull_diameter, min_width_strip
from .porosity import PorosityMixin
from .sample import ResolutionAudit, TaggedSample
from .types import Ball, BetaValue, DyadicSquare, PorosityResult, StripFit


class SampleGeometry(BetaMixin, ConvexityMixin, PorosityMixin):
    """
    Geometric queries on one tagged sample.

    This class inherits from the geometry mixins:
    - BetaMixin: β numbers on balls and dyadic squares
    - ConvexityMixin: hull diameters of K ∩ B(x, r)
    - PorosityMixin: empty-ball probes
    """

    pass


__all__ = [
    "Ball",
    "BetaValue",
    "DyadicSquare",
    "GeometryClient",
    "GeometryConfig",
    "PorosityResult",
    "ResolutionAudit",
    "SampleGeometry",
    "StripFit",
    "TaggedSample",
    "convex_hull",
    "convex_hull_diameter",
    "min_width_strip",
]
