"""Base client binding geometric queries to one sample."""

import logging
import threading

import numpy as np
from cachetools import LRUCache

from ..exceptions import ScaleBelowResolutionError
from ..utils.logging import log_config_param
from .config import GeometryConfig
from .sample import TaggedSample
from .types import Ball, BetaValue

logger = logging.getLogger("wiggly-continua.geometry")


class GeometryClient:
    """Base client for geometric queries on a tagged sample."""

    config: GeometryConfig
    sample: TaggedSample

    def __init__(
        self, sample: TaggedSample, config: GeometryConfig | None = None
    ) -> None:
        """Initialize the client.

        Args:
            sample: The sample all queries run against
            config: Optional configuration object (will use env vars if not provided)

        Raises:
            ValueError: If configuration is invalid
        """
        self.config = config or GeometryConfig.from_env()
        self.sample = sample
        self._beta_cache: LRUCache[tuple, BetaValue] = LRUCache(
            maxsize=self.config.beta_cache_size
        )
        self._cache_lock = threading.Lock()

        log_config_param(logger, "geometry", "points", sample.count)
        log_config_param(logger, "geometry", "resolution", sample.resolution)
        log_config_param(
            logger, "geometry", "resolution_guard", self.config.resolution_guard
        )

    @property
    def min_scale(self) -> float:
        """Smallest scale at which the sample stands in for the continuum."""
        return self.config.resolution_guard * self.sample.resolution

    def scale_supported(self, r: float) -> bool:
        return r >= self.min_scale * (1.0 - 1e-12)

    def _check_scale(self, r: float) -> None:
        if not self.scale_supported(r):
            error_msg = (
                f"scale {r:.6g} is below the resolution floor "
                f"{self.min_scale:.6g} (guard x h)"
            )
            raise ScaleBelowResolutionError(error_msg)

    def _check_center(self, x: np.ndarray) -> None:
        lo = self.sample.points.min(axis=0) - self.sample.diameter
        hi = self.sample.points.max(axis=0) + self.sample.diameter
        if np.any(x < lo) or np.any(x > hi):
            error_msg = f"point {tuple(x)} is farther than the sample diameter"
            raise ValueError(error_msg)

    def ball_points(
        self, x: np.ndarray, r: float, within: Ball | None = None
    ) -> np.ndarray:
        """Sample points in the closed ball B(x, r), optionally clipped."""
        idx = self.sample.ball_indices(x, r)
        pts = self.sample.points[idx]
        if within is not None and len(pts):
            d2 = ((pts - within.center_array) ** 2).sum(axis=1)
            pts = pts[d2 <= within.radius**2 * (1.0 + 1e-12)]
        return pts

    def _cached(self, key: tuple) -> BetaValue | None:
        with self._cache_lock:
            return self._beta_cache.get(key)

    def _store(self, key: tuple, value: BetaValue) -> None:
        with self._cache_lock:
            self._beta_cache[key] = value
