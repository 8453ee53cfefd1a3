"""Dimension estimates for wiggly-continua.

This module provides box counting, local dimensions of corona measures,
the mass-distribution lower bound and the closed-form dimension bounds
with their calibration.
"""

from .bounds import (
    BOUNDS,
    BOUNDS_BY_NAME,
    BoundSpec,
    calibrate_constants,
    evaluate_bound,
    theorem_bounds,
)
from .boxcount import BoxCountMixin, occupied_boxes
from .client import DimensionClient
from .config import BoundConstants, DimensionConfig
from .local import LocalMixin, quantile_bound
from .report import ReportMixin


class DimensionEstimator(ReportMixin):
    """
    Dimension estimates over one tagged sample.

    This class inherits from the dimension mixins:
    - BoxCountMixin: box-counting dimension of the sample or a part of it
    - LocalMixin: local dimensions and the mass-distribution bound
    - ReportMixin: the combined report with the bound table
    """

    pass


__all__ = [
    "BOUNDS",
    "BOUNDS_BY_NAME",
    "BoundConstants",
    "BoundSpec",
    "BoxCountMixin",
    "DimensionClient",
    "DimensionConfig",
    "DimensionEstimator",
    "LocalMixin",
    "ReportMixin",
    "calibrate_constants",
    "evaluate_bound",
    "occupied_boxes",
    "quantile_bound",
    "theorem_bounds",
]
