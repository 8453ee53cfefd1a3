"""The tagged point sample every analysis runs on."""

import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.spatial import cKDTree

from ..exceptions import EmptyBallError, EmptyPointSetError
from ..models.constants import TAG_E, TAG_W, VALID_TAGS
from .hull import convex_hull_diameter
from .index import GridIndex
from .types import Ball

logger = logging.getLogger("wiggly-continua.geometry")

INDEX_PITCH_FACTOR = 4.0


@dataclass(frozen=True)
class ResolutionAudit:
    """Nearest-neighbour statistics compared with the declared resolution."""

    declared: float
    max_gap: float
    mean_gap: float

    @property
    def ok(self) -> bool:
        return self.max_gap <= self.declared * (1.0 + 1e-9)


@dataclass(frozen=True, eq=False)
class TaggedSample:
    """
    A finite point sample of a continuum, split into W and E parts.

    Every point carries a tag: ``W`` for the part the analysis is about and
    ``E`` for the exceptional part. E-points carry a non-negative length
    weight approximating the 1-dimensional measure of E near them; W-points
    carry weight exactly 0. ``resolution`` is the guaranteed Hausdorff
    distance between the sample and the continuum it stands for.

    Instances are immutable; the arrays are made read-only on construction.
    """

    points: np.ndarray
    tags: np.ndarray
    e_weight: np.ndarray
    resolution: float
    diameter: float

    def __post_init__(self) -> None:
        if self.points.ndim != 2 or len(self.points) == 0:
            error_msg = "sample needs at least one point"
            raise EmptyPointSetError(error_msg)
        if self.points.shape[1] < 2:
            error_msg = "sample points must live in the plane or higher"
            raise ValueError(error_msg)
        if not np.all(np.isfinite(self.points)):
            error_msg = "sample coordinates must be finite"
            raise ValueError(error_msg)
        n = len(self.points)
        if self.tags.shape != (n,) or self.e_weight.shape != (n,):
            error_msg = "tags and weights must have one entry per point"
            raise ValueError(error_msg)
        if not np.all(np.isin(self.tags, VALID_TAGS)):
            error_msg = f"tags must be one of {VALID_TAGS}"
            raise ValueError(error_msg)
        if np.any(self.e_weight[self.tags == TAG_W] != 0.0):
            error_msg = "W-tagged points must carry zero E-weight"
            raise ValueError(error_msg)
        if np.any(self.e_weight < 0) or not np.all(np.isfinite(self.e_weight)):
            error_msg = "E-weights must be finite and non-negative"
            raise ValueError(error_msg)
        if not self.resolution > 0:
            error_msg = "resolution must be positive"
            raise ValueError(error_msg)
        for array in (self.points, self.tags, self.e_weight):
            array.setflags(write=False)

    @classmethod
    def from_points(
        cls,
        points: np.ndarray,
        resolution: float,
        tags: np.ndarray | None = None,
        e_weight: np.ndarray | None = None,
        diameter: float | None = None,
    ) -> "TaggedSample":
        """Build a sample, defaulting to all-W tags and computing the diameter.

        Args:
            points: Coordinates, shape (n, d) with d >= 2
            resolution: Declared sampling resolution h
            tags: Optional per-point tags ("W" or "E")
            e_weight: Optional per-point E-weights
            diameter: Optional stored diameter, checked against the points

        Raises:
            ValueError: If the inputs violate the sample invariants
        """
        pts = np.array(points, dtype=float, copy=True)
        if pts.ndim == 1:
            pts = pts.reshape(1, -1)
        n = len(pts)
        tag_array = (
            np.full(n, TAG_W, dtype="<U1")
            if tags is None
            else np.array(tags, dtype="<U1", copy=True)
        )
        weights = (
            np.zeros(n, dtype=float)
            if e_weight is None
            else np.array(e_weight, dtype=float, copy=True)
        )
        measured = convex_hull_diameter(pts) if n else 0.0
        if diameter is not None and abs(diameter - measured) > 2 * resolution:
            error_msg = (
                f"stored diameter {diameter} differs from the sample diameter "
                f"{measured} by more than 2h"
            )
            raise ValueError(error_msg)
        return cls(pts, tag_array, weights, float(resolution), float(measured))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def count(self) -> int:
        return len(self.points)

    @property
    def ambient_dim(self) -> int:
        return int(self.points.shape[1])

    @cached_property
    def w_mask(self) -> np.ndarray:
        return self.tags == TAG_W

    @cached_property
    def e_mask(self) -> np.ndarray:
        return self.tags == TAG_E

    @property
    def total_e_weight(self) -> float:
        return math.fsum(self.e_weight)

    @cached_property
    def index(self) -> GridIndex:
        return GridIndex(self.points, INDEX_PITCH_FACTOR * self.resolution)

    @cached_property
    def kdtree(self) -> cKDTree:
        return cKDTree(self.points)

    @cached_property
    def length_weights(self) -> np.ndarray:
        """
        Local spacing around each point.

        The weight of a point is the mean distance to its two nearest
        neighbours, so that summing weights along a uniformly sampled arc
        approximates its length.
        """
        if self.count == 1:
            weights = np.array([self.resolution])
        else:
            k = min(3, self.count)
            dist, _ = self.kdtree.query(self.points, k=k)
            weights = dist[:, 1:].mean(axis=1)
        weights.setflags(write=False)
        return weights

    def ball_indices(self, center: np.ndarray, radius: float) -> np.ndarray:
        """Indices of sample points in the closed ball, ascending."""
        return self.index.query_ball(center, radius)

    def restricted(self, ball: Ball) -> "TaggedSample":
        """
        The sub-sample inside a closed ball.

        Raises:
            EmptyBallError: If no sample point lies in the ball
        """
        idx = self.ball_indices(ball.center_array, ball.radius)
        if idx.size == 0:
            error_msg = f"no sample point in ball {ball}"
            raise EmptyBallError(error_msg)
        return TaggedSample.from_points(
            self.points[idx],
            self.resolution,
            tags=self.tags[idx],
            e_weight=self.e_weight[idx],
        )

    def transformed(
        self,
        angle: float = 0.0,
        shift: np.ndarray | None = None,
        scale: float = 1.0,
    ) -> "TaggedSample":
        """
        Apply a planar similarity: rotate by ``angle``, scale, then shift.

        Resolution and E-weights scale with the map; coordinates beyond the
        first two are scaled and shifted only.
        """
        if scale <= 0:
            error_msg = "scale must be positive"
            raise ValueError(error_msg)
        pts = np.array(self.points, dtype=float) * scale
        c, s = math.cos(angle), math.sin(angle)
        planar = pts[:, :2].copy()
        pts[:, 0] = c * planar[:, 0] - s * planar[:, 1]
        pts[:, 1] = s * planar[:, 0] + c * planar[:, 1]
        if shift is not None:
            pts = pts + np.asarray(shift, dtype=float)
        return TaggedSample.from_points(
            pts,
            self.resolution * scale,
            tags=self.tags,
            e_weight=self.e_weight * scale,
        )

    def audit_resolution(self) -> ResolutionAudit:
        """Compare nearest-neighbour gaps with the declared resolution."""
        if self.count == 1:
            return ResolutionAudit(self.resolution, 0.0, 0.0)
        dist, _ = self.kdtree.query(self.points, k=2)
        gaps = dist[:, 1]
        audit = ResolutionAudit(self.resolution, float(gaps.max()), float(gaps.mean()))
        if not audit.ok:
            logger.warning(
                f"Largest nearest-neighbour gap {audit.max_gap:.3g} exceeds the "
                f"declared resolution {self.resolution:.3g}"
            )
        return audit
