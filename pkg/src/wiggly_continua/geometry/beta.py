"""Module for Jones β numbers on balls and dyadic squares."""

import logging

import numpy as np

from .client import GeometryClient
from .hull import min_width_strip, principal_axis_fit
from .types import Ball, BetaValue, DyadicSquare, StripFit

logger = logging.getLogger("wiggly-continua.geometry")


class BetaMixin(GeometryClient):
    """Mixin for β numbers: normalised widths of the narrowest enclosing strip."""

    def _strip(self, pts: np.ndarray) -> StripFit:
        if self.sample.ambient_dim == 2:
            return min_width_strip(pts)
        return principal_axis_fit(pts)

    def _beta_of(self, pts: np.ndarray, scale: float) -> BetaValue:
        if len(pts) == 0:
            return BetaValue(beta=0.0, count=0, empty=True)
        fit = self._strip(pts)
        beta = fit.width / (2.0 * scale)
        if beta <= self.config.kernel_tolerance:
            beta = 0.0
        return BetaValue(beta=beta, count=len(pts), approximate=fit.approximate)

    def beta_ball(
        self, x: np.ndarray, r: float, within: Ball | None = None
    ) -> BetaValue:
        """
        β of the sample in the closed ball B(x, r).

        Args:
            x: Ball centre
            r: Ball radius, at least guard x h
            within: Optional enclosing ball; only sample points inside it count

        Returns:
            β = (width of narrowest strip) / (2r), flagged empty when the ball
            holds no sample point

        Raises:
            ScaleBelowResolutionError: If r is below the resolution floor
            ValueError: If x lies farther from the sample than its diameter
        """
        x = np.asarray(x, dtype=float)
        self._check_scale(r)
        self._check_center(x)
        if within is not None and within.contains_ball(Ball.around(x, r)):
            within = None
        key = (
            tuple(x.tolist()),
            float(r),
            None if within is None else (within.center, within.radius),
        )
        cached = self._cached(key)
        if cached is not None:
            return cached
        value = self._beta_of(self.ball_points(x, r, within), r)
        self._store(key, value)
        return value

    def beta_square(self, square: DyadicSquare) -> BetaValue:
        """
        β of the sample in 3Q, normalised by the side of Q.

        Raises:
            ScaleBelowResolutionError: If the side of Q is below the resolution floor
        """
        self._check_scale(square.side)
        return self._square_beta(square)

    def _square_beta(self, square: DyadicSquare) -> BetaValue:
        key = (
            "square",
            square.root_corner,
            square.root_side,
            square.depth,
            square.index,
        )
        cached = self._cached(key)
        if cached is not None:
            return cached
        lo, hi = square.tripled_bounds()
        idx = self.sample.index.query_box(lo, hi)
        value = self._beta_of(self.sample.points[idx], square.side)
        self._store(key, value)
        return value
