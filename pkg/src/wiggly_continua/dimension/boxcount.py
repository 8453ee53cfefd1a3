"""Module for box-counting dimension fits."""

import logging
import math

import numpy as np
from scipy.stats import linregress

from ..exceptions import DegenerateFitError, ScaleBelowResolutionError
from ..geometry import convex_hull_diameter
from ..models.constants import BOX_COARSE_FRACTION
from ..models.dimension import BoxCountFit
from ..multiscale import ScaleGrid
from .client import DimensionClient

logger = logging.getLogger("wiggly-continua.dimension")

MIN_FIT_SCALES = 3
# Points within this fraction of a box side below a face count in the upper box
FACE_SLACK = 1e-9


def occupied_boxes(points: np.ndarray, side: float) -> int:
    """
    Number of grid boxes of the given side that hold a point.

    The grid starts at the lower corner of the bounding box and has
    ceil(extent/side) boxes per axis. A point on an inner face belongs to the
    box above it and points on the upper face fall into the last box.
    """
    pts = np.asarray(points, dtype=float)
    low = pts.min(axis=0)
    extent = pts.max(axis=0) - low
    boxes = np.maximum(1, np.ceil(extent / side - 1e-9)).astype(np.int64)
    idx = np.floor((pts - low) / side + FACE_SLACK).astype(np.int64)
    idx = np.clip(idx, 0, boxes - 1)
    return int(len(np.unique(idx, axis=0)))


class BoxCountMixin(DimensionClient):
    """Mixin for box-counting dimension."""

    def box_grid(
        self, diameter: float | None = None, ratio: float | None = None
    ) -> ScaleGrid:
        """
        The grid from box_guard·h up to a quarter of the diameter.

        Its ratio is ``ratio`` when given, λ otherwise.

        Raises:
            DegenerateFitError: If the range holds no scale
        """
        diameter = self.sample.diameter if diameter is None else diameter
        floor = self.dimension_config.box_guard * self.sample.resolution
        if not diameter > 0:
            error_msg = "box counting needs a sample of positive diameter"
            raise DegenerateFitError(error_msg)
        try:
            return ScaleGrid.spanning(
                self.multiscale_config.lam if ratio is None else ratio,
                floor,
                BOX_COARSE_FRACTION * diameter,
            )
        except ScaleBelowResolutionError as e:
            error_msg = f"no box side between {floor:.6g} and {diameter:.6g}: {e}"
            raise DegenerateFitError(error_msg) from e

    def box_dimension(
        self,
        grid: ScaleGrid | None = None,
        mask: np.ndarray | None = None,
        ratio: float | None = None,
    ) -> BoxCountFit:
        """
        Least-squares slope of log N(λ^k) against k·log(1/λ).

        Args:
            grid: Box sides (defaults to ``box_grid``); sides below
                box_guard·h are dropped
            mask: Optional selection of sample points, e.g. the E part
            ratio: Ratio of the default grid, e.g. the similarity ratio of a
                self-similar set

        Returns:
            The fit with its points, the dimension clipped to [0, d]

        Raises:
            DegenerateFitError: If fewer than 3 box sides remain
        """
        points = self.sample.points
        if mask is not None:
            points = points[np.asarray(mask, dtype=bool)]
            if len(points) == 0:
                error_msg = "box counting of an empty selection"
                raise DegenerateFitError(error_msg)
        if grid is None:
            diameter = None if mask is None else convex_hull_diameter(points)
            grid = self.box_grid(diameter, ratio)
        floor = self.dimension_config.box_guard * self.sample.resolution
        usable = grid.truncated(min_scale=floor)
        if usable is None or len(usable) < MIN_FIT_SCALES:
            error_msg = (
                f"box counting needs {MIN_FIT_SCALES} scales above {floor:.6g}, "
                f"got {0 if usable is None else len(usable)}"
            )
            raise DegenerateFitError(error_msg)
        if len(usable) < MIN_FIT_SCALES + 1:
            logger.warning(f"Box-count fit over only {len(usable)} scales")

        counts = [occupied_boxes(points, r) for _, r in usable]
        x = -np.log(usable.scales)
        y = np.log(np.array(counts, dtype=float))
        fit = linregress(x, y)
        dim = float(np.clip(fit.slope, 0.0, self.sample.ambient_dim))
        logger.info(
            f"Box dimension {dim:.4f} +/- {fit.stderr:.2g} over "
            f"{len(usable)} scales"
        )
        return BoxCountFit(
            dim=dim,
            stderr=float(fit.stderr),
            intercept=float(fit.intercept),
            window=usable.window(),
            counts=counts,
            log_inv_scale=[float(v) for v in x],
            log_count=[float(v) for v in y],
        )


def fit_points(fit: BoxCountFit) -> list[tuple[float, float]]:
    """The (log 1/scale, log count) pairs of a fit."""
    return list(zip(fit.log_inv_scale, fit.log_count, strict=True))


def known_dim_gap(fit: BoxCountFit, known_dim: float | None) -> float | None:
    """Absolute difference between a fitted and an analytic dimension."""
    if known_dim is None or math.isnan(known_dim):
        return None
    return abs(fit.dim - known_dim)
