"""Module for dyadic-square β sums."""

import logging
import math

import numpy as np

from ..geometry import DyadicSquare
from ..models.multiscale import TSPResult
from .client import MultiscaleClient

logger = logging.getLogger("wiggly-continua.multiscale")

DEFAULT_MAX_DEPTH = 24
# The cells i-1..i+2 of each axis cover the closed 3Q of square i.
_BLOCK = np.array([(di, dj) for di in (-2, -1, 0, 1) for dj in (-2, -1, 0, 1)])
# Fewer points than this span no strip of positive width.
_MIN_POINTS = 3


def busy_squares(
    points: np.ndarray, corner: np.ndarray, side: float, cells: int
) -> np.ndarray:
    """
    Indices (i, j) of the squares of one depth whose 3Q may hold three points.

    Counts are taken over the 4x4 block of cells around each square, a
    superset of its closed 3Q, so no square with three points in 3Q is missed.
    """
    occupied, counts = np.unique(
        np.clip(np.floor((points - corner) / side).astype(np.int64), 0, cells - 1),
        axis=0,
        return_counts=True,
    )
    around = (occupied[:, None, :] + _BLOCK[None, :, :]).reshape(-1, 2)
    weights = np.repeat(counts, len(_BLOCK))
    inside = np.all((around >= 0) & (around < cells), axis=1)
    keys = around[inside, 0] * cells + around[inside, 1]
    unique, inverse = np.unique(keys, return_inverse=True)
    totals = np.bincount(inverse.reshape(-1), weights=weights[inside])
    busy = unique[totals >= _MIN_POINTS]
    return np.stack([busy // cells, busy % cells], axis=1)


class DyadicMixin(MultiscaleClient):
    """Mixin for sums of β(Q)² over dyadic squares."""

    def root_square(self) -> DyadicSquare:
        """The smallest square with lower-left corner at the sample minimum."""
        self._require_planar()
        lo = self.sample.points.min(axis=0)
        extent = float((self.sample.points.max(axis=0) - lo).max())
        side = max(extent, self.sample.resolution) * (1.0 + 1e-9)
        return DyadicSquare((float(lo[0]), float(lo[1])), side)

    def _require_planar(self) -> None:
        if self.sample.ambient_dim != 2:
            error_msg = "dyadic β sums are defined for planar samples only"
            raise ValueError(error_msg)

    def _depth_limit(self, root: DyadicSquare, max_depth: int) -> int:
        usable = math.floor(math.log2(root.root_side / self.min_scale) + 1e-9)
        limit = min(max_depth, usable)
        if limit < max_depth:
            logger.debug(f"Dyadic depth truncated to {limit} at the resolution floor")
        return limit

    def tsp_functional(
        self, root: DyadicSquare | None = None, max_depth: int = DEFAULT_MAX_DEPTH
    ) -> TSPResult:
        """
        Σ β(Q)²·|Q| over the dyadic squares Q of the root whose 3Q meets the sample.

        A square whose 3Q holds at most two points has β(Q) = 0. The sum runs
        depth by depth until every tripled square is such a square, so it
        reaches the sample's own spacing instead of stopping at the
        resolution floor. ``squares`` counts the squares whose β was measured.

        Args:
            root: Root square (defaults to ``root_square()``)
            max_depth: Deepest level to include

        Returns:
            The total with one cumulative partial sum per depth
        """
        self._require_planar()
        root = root or self.root_square()
        corner = np.asarray(root.root_corner)
        pts = self.sample.points[:, :2]

        depths: list[int] = []
        partial: list[float] = []
        running = 0.0
        squares = 0
        for depth in range(max_depth + 1):
            cells = 2**depth
            side = root.root_side / cells
            busy = busy_squares(pts, corner, side, cells)
            if len(busy) == 0:
                break
            level = math.fsum(
                self._square_beta(
                    DyadicSquare(
                        root.root_corner, root.root_side, depth, (int(i), int(j))
                    )
                ).beta
                ** 2
                * side
                for i, j in busy
            )
            squares += len(busy)
            running += level
            depths.append(depth)
            partial.append(running)
        else:
            logger.debug(f"Dyadic sum cut at depth {max_depth}")

        return TSPResult(
            root_corner=list(root.root_corner),
            root_side=root.root_side,
            depths=depths,
            partial_sums=partial,
            total=running,
            squares=squares,
        )

    def beta_sum_at_point(
        self,
        x: np.ndarray,
        root: DyadicSquare | None = None,
        max_depth: int = DEFAULT_MAX_DEPTH,
    ) -> float:
        """Σ β(Q)² over the dyadic squares containing x, one per depth."""
        self._require_planar()
        root = root or self.root_square()
        x = np.asarray(x, dtype=float)
        lo = np.asarray(root.root_corner)
        if np.any(x < lo) or np.any(x > lo + root.root_side):
            error_msg = f"point {tuple(x)} is outside the root square"
            raise ValueError(error_msg)
        limit = self._depth_limit(root, max_depth)
        return math.fsum(
            self.beta_square(root.at_depth(x, depth)).beta ** 2
            for depth in range(limit + 1)
        )
