"""
Uniform-grid spatial index over a point sample.

Points are bucketed by their first two coordinates into square cells and
stored in cell order, so every grid row intersecting a query is one
contiguous slice of the sorted arrays.
"""

import math

import numpy as np

MAX_CELLS_PER_AXIS = 4096


class GridIndex:
    """Closed-ball and box range queries over a fixed point array."""

    def __init__(self, points: np.ndarray, pitch: float) -> None:
        """Bucket ``points`` into cells of side ``pitch``.

        The pitch is enlarged when needed so that neither axis holds more than
        ``MAX_CELLS_PER_AXIS`` cells.
        """
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 2 or len(pts) == 0 or pts.shape[1] < 2:
            error_msg = "grid index needs a non-empty (n, d) array with d >= 2"
            raise ValueError(error_msg)
        self.points = pts
        planar = pts[:, :2]
        self.origin = planar.min(axis=0)
        extent = float((planar.max(axis=0) - self.origin).max())
        self.pitch = max(float(pitch), extent / MAX_CELLS_PER_AXIS, 1e-300)
        cells = np.floor((planar - self.origin) / self.pitch).astype(np.int64)
        self.columns = int(cells[:, 0].max()) + 1
        self.rows = int(cells[:, 1].max()) + 1
        keys = cells[:, 1] * self.columns + cells[:, 0]
        self.order = np.argsort(keys, kind="stable")
        self.sorted_keys = keys[self.order]
        self._planar = planar

    def _candidates(self, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        c0 = math.floor((lo[0] - self.origin[0]) / self.pitch)
        c1 = math.floor((hi[0] - self.origin[0]) / self.pitch)
        r0 = math.floor((lo[1] - self.origin[1]) / self.pitch)
        r1 = math.floor((hi[1] - self.origin[1]) / self.pitch)
        c0, c1 = max(c0, 0), min(c1, self.columns - 1)
        r0, r1 = max(r0, 0), min(r1, self.rows - 1)
        if c0 > c1 or r0 > r1:
            return np.empty(0, dtype=np.int64)
        rows = np.arange(r0, r1 + 1, dtype=np.int64) * self.columns
        starts = np.searchsorted(self.sorted_keys, rows + c0, side="left")
        stops = np.searchsorted(self.sorted_keys, rows + c1, side="right")
        slices = [
            self.order[a:b] for a, b in zip(starts, stops, strict=True) if b > a
        ]
        if not slices:
            return np.empty(0, dtype=np.int64)
        return np.concatenate(slices)

    def query_ball(self, center: np.ndarray, radius: float) -> np.ndarray:
        """Indices of points in the closed ball, in ascending order."""
        c = np.asarray(center, dtype=float)
        planar_c = c[:2]
        reach = radius * (1.0 + 1e-9)
        idx = self._candidates(planar_c - reach, planar_c + reach)
        if idx.size == 0:
            return idx
        d2 = ((self.points[idx] - c) ** 2).sum(axis=1)
        hit = idx[d2 <= radius * radius * (1.0 + 1e-12)]
        return np.sort(hit)

    def query_box(self, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        """Indices of points in the closed axis-aligned box, in ascending order."""
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        idx = self._candidates(lo[:2], hi[:2])
        if idx.size == 0:
            return idx
        pts = self._planar[idx]
        inside = np.all((pts >= lo[:2]) & (pts <= hi[:2]), axis=1)
        return np.sort(idx[inside])
