"""
Assembly of generated samples.

Generators describe a set as polylines and point clouds; the builder
densifies polylines to the requested pitch and keeps track of the largest
spacing left along any generating curve.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from ..exceptions import ResolutionUnreachableError
from ..geometry import TaggedSample
from ..models.constants import TAG_E, TAG_W
from ..models.generators import GeneratorSpec, GroundTruth

logger = logging.getLogger("wiggly-continua.generators")


@dataclass(frozen=True, eq=False)
class GeneratedSet:
    """A generated sample with the spec that produced it and its known facts."""

    spec: GeneratorSpec
    sample: TaggedSample
    truth: GroundTruth


class SampleBuilder:
    """Collects tagged points for one generated sample."""

    def __init__(self, pitch: float) -> None:
        if not pitch > 0:
            error_msg = "pitch must be positive"
            raise ValueError(error_msg)
        self.pitch = pitch
        self.max_gap = 0.0
        self._points: list[np.ndarray] = []
        self._tags: list[np.ndarray] = []
        self._weights: list[np.ndarray] = []

    def add_points(
        self, points: np.ndarray, tag: str, weights: np.ndarray | None = None
    ) -> None:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if len(pts) == 0:
            return
        w = np.zeros(len(pts)) if weights is None else np.asarray(weights, dtype=float)
        if tag == TAG_W:
            w = np.zeros(len(pts))
        self._points.append(pts)
        self._tags.append(np.full(len(pts), tag, dtype="<U1"))
        self._weights.append(np.broadcast_to(w, (len(pts),)).astype(float))

    def add_segments(self, starts: np.ndarray, ends: np.ndarray, tag: str) -> float:
        """
        Add independent segments densified to spacing at most ``pitch``.

        W segments keep their start points; E segments are sampled at the
        midpoints of equal sub-segments, each carrying its sub-segment length
        as E-weight, so the weights add up to the segment length.

        Returns:
            The total segment length
        """
        a = np.atleast_2d(np.asarray(starts, dtype=float))
        b = np.atleast_2d(np.asarray(ends, dtype=float))
        if a.shape != b.shape:
            error_msg = "segment starts and ends must have the same shape"
            raise ValueError(error_msg)
        if len(a) == 0:
            return 0.0
        deltas = b - a
        lengths = np.linalg.norm(deltas, axis=1)
        pieces = np.maximum(1, np.ceil(lengths / self.pitch - 1e-9)).astype(np.int64)
        seg = np.repeat(np.arange(len(deltas)), pieces)
        offsets = np.concatenate([[0], np.cumsum(pieces)[:-1]])
        local = np.arange(int(pieces.sum())) - np.repeat(offsets, pieces)
        shift = 0.5 if tag == TAG_E else 0.0
        t = (local + shift) / pieces[seg]
        pts = a[seg] + t[:, None] * deltas[seg]
        step = lengths / pieces
        self.max_gap = max(self.max_gap, float(step.max()))
        self.add_points(pts, tag, step[seg] if tag == TAG_E else None)
        return float(math.fsum(lengths))

    def add_polyline(self, vertices: np.ndarray, tag: str) -> float:
        """Add a polyline; W polylines also keep their final vertex."""
        v = np.asarray(vertices, dtype=float)
        if len(v) < 2:
            self.add_points(v, tag)
            return 0.0
        length = self.add_segments(v[:-1], v[1:], tag)
        if tag == TAG_W:
            self.add_points(v[-1:], TAG_W)
        return length

    def build(self, resolution: float) -> TaggedSample:
        """
        Assemble the sample.

        Raises:
            ValueError: If nothing was added
        """
        if not self._points:
            error_msg = "generator produced no points"
            raise ValueError(error_msg)
        if self.max_gap > resolution * (1.0 + 1e-9):
            error_msg = (
                f"curve spacing {self.max_gap:.6g} exceeds the declared "
                f"resolution {resolution:.6g}"
            )
            raise ValueError(error_msg)
        sample = TaggedSample.from_points(
            np.vstack(self._points),
            resolution,
            tags=np.concatenate(self._tags),
            e_weight=np.concatenate(self._weights),
        )
        logger.debug(
            f"Built sample: {sample.count} points, resolution {resolution:.3g}, "
            f"E-weight {sample.total_e_weight:.6g}"
        )
        return sample


def level_for_target(
    resolution_of: Callable[[int], float],
    target: float | None,
    level: int | None,
    default: int,
    max_level: int,
) -> int:
    """
    Pick the generation level meeting a resolution target.

    An explicit level wins; otherwise the coarsest level whose resolution is
    at most the target is used, or the default when no target is given.

    Raises:
        ResolutionUnreachableError: If the target is finer than ``max_level``
            (or the explicit level) can deliver
    """
    if level is not None:
        if level < 0 or level > max_level:
            error_msg = f"level must lie in [0, {max_level}], got {level}"
            raise ValueError(error_msg)
        if target is not None and resolution_of(level) > target * (1.0 + 1e-12):
            achievable = resolution_of(level)
            error_msg = (
                f"level {level} reaches resolution {achievable:.6g}, "
                f"coarser than the target {target:.6g}"
            )
            raise ResolutionUnreachableError(
                error_msg, achievable_resolution=achievable, achievable_level=level
            )
        return level
    if target is None:
        return default
    for candidate in range(max_level + 1):
        if resolution_of(candidate) <= target * (1.0 + 1e-12):
            return candidate
    achievable = resolution_of(max_level)
    error_msg = (
        f"resolution target {target:.6g} is unreachable; the finest "
        f"achievable resolution is {achievable:.6g}"
    )
    raise ResolutionUnreachableError(
        error_msg, achievable_resolution=achievable, achievable_level=max_level
    )


def check_pitch(pitch: float, floor: float, family: str) -> None:
    """Raise when a pitch target is finer than the truncation of the family."""
    if pitch < floor * (1.0 - 1e-12):
        error_msg = (
            f"{family}: resolution target {pitch:.6g} is finer than the "
            f"truncation distance {floor:.6g}"
        )
        raise ResolutionUnreachableError(error_msg, achievable_resolution=floor)
