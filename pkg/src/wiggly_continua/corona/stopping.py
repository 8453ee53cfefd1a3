"""Module for stopping scales and the flat/wiggly split of a ball."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import EmptyBallError
from ..geometry import Ball
from ..utils.parallel import parallel_map
from .client import CoronaClient

logger = logging.getLogger("wiggly-continua.corona")

# Stopping scales are evaluated once per cell of side CANDIDATE_PITCH_FACTOR x
# the resolution floor; the other points of a cell share its value.
CANDIDATE_PITCH_FACTOR = 0.5


@dataclass(frozen=True)
class StoppingScale:
    """
    The stopping scale t_B(x) for a budget M.

    ``integral`` is the discretised ∫_t^{R_B} β² dt/t, or the integral over
    the whole window when t = 0. It is None when the window is too short
    for any β profile to exhaust the budget, in which case t = 0 without
    evaluating β.
    """

    x: tuple[float, ...]
    t: float
    budget: float
    integral: float | None


@dataclass(frozen=True, eq=False)
class ScaleField:
    """
    Stopping scales over K_B.

    ``indices`` are the sample indices of K_B, ``representatives`` the
    positions (into ``indices``) where t was evaluated, ``owner`` maps each
    point to its representative and ``t`` holds one value per point.
    """

    ball: Ball
    indices: np.ndarray
    representatives: np.ndarray
    owner: np.ndarray
    t: np.ndarray
    uniform: bool = False

    @property
    def representative_t(self) -> np.ndarray:
        return self.t[self.representatives]


@dataclass(frozen=True, eq=False)
class WigglySplit:
    """K_B split into Z(B) (t = 0) and W(B) (t > 0), as sample indices."""

    field: ScaleField
    z: np.ndarray
    w: np.ndarray
    z_length: float
    z_e_weight: float


def cell_representatives(
    points: np.ndarray, pitch: float
) -> tuple[np.ndarray, np.ndarray]:
    """
    One point per occupied grid cell.

    Returns:
        (positions of the representatives, representative slot of every point);
        representatives are ordered by cell
    """
    keys = np.floor(np.asarray(points, dtype=float) / pitch).astype(np.int64)
    _, first, owner = np.unique(keys, axis=0, return_index=True, return_inverse=True)
    return first, np.asarray(owner).reshape(-1)


def window_scales(radius: float, lam: float, floor: float) -> np.ndarray:
    """R·λ^j for j = 0, 1, ... while the scale stays at or above the floor."""
    if radius < floor * (1.0 - 1e-12):
        return np.empty(0)
    count = math.floor(math.log(floor / radius) / math.log(lam) + 1e-9) + 1
    return radius * lam ** np.arange(count, dtype=float)


class StoppingMixin(CoronaClient):
    """Mixin for stopping scales t_B(x) and the sets Z(B), W(B)."""

    def _ball_indices(self, ball: Ball) -> np.ndarray:
        idx = self.sample.ball_indices(ball.center_array, ball.radius)
        if idx.size == 0:
            error_msg = f"empty ball: no sample point in {ball}"
            raise EmptyBallError(error_msg)
        return idx

    def _check_budget(self, budget: float | None) -> float:
        budget = self.corona_config.budget if budget is None else budget
        if not budget > 0:
            error_msg = f"budget M must be positive, got {budget}"
            raise ValueError(error_msg)
        return budget

    def _budget_exceeds_window(self, ball: Ball, budget: float) -> bool:
        scales = window_scales(
            ball.radius, self.multiscale_config.lam, self.min_scale
        )
        return len(scales) * self.step <= budget

    def _stopping(self, ball: Ball, x: np.ndarray, budget: float) -> StoppingScale:
        key = tuple(float(c) for c in x)
        lam = self.multiscale_config.lam
        scales = window_scales(ball.radius, lam, self.min_scale)
        if len(scales) * self.step <= budget:
            return StoppingScale(key, 0.0, budget, None)

        collapse = ball.radius * math.exp(-budget)
        running = 0.0
        for j, r in enumerate(scales):
            beta = self.beta_ball(x, float(r), within=ball).beta
            following = running + self.step * beta * beta
            if following > budget:
                # t lies strictly below R_B and at most R_B·e^-M
                if j == 0:
                    t = min(ball.radius * lam, collapse)
                    return StoppingScale(key, t, budget, following)
                return StoppingScale(key, min(float(r), collapse), budget, running)
            running = following
        return StoppingScale(key, 0.0, budget, running)

    def stopping_scale(
        self, ball: Ball, x: np.ndarray, budget: float | None = None
    ) -> StoppingScale:
        """
        The smallest grid scale below R_B where ∫_t^{R_B} β² dt/t stays within M.

        β is measured on K_B, the sample inside the closed ball. Scales are
        R_B·λ^j down to the resolution floor; t = 0 when the integral over
        the whole window is at most M. A positive t is capped at R_B·e^-M.

        Args:
            ball: The ball B
            x: Point of K_B
            budget: Budget M (defaults to the configured value)

        Returns:
            The stopping scale

        Raises:
            EmptyBallError: If B holds no sample point
            ValueError: If M is not positive
        """
        budget = self._check_budget(budget)
        self._ball_indices(ball)
        return self._stopping(ball, np.asarray(x, dtype=float), budget)

    def stopping_scales(self, ball: Ball, budget: float | None = None) -> ScaleField:
        """
        Stopping scales for every point of K_B.

        Raises:
            EmptyBallError: If B holds no sample point
        """
        budget = self._check_budget(budget)
        idx = self._ball_indices(ball)
        pts = self.sample.points[idx]
        reps, owner = cell_representatives(
            pts, CANDIDATE_PITCH_FACTOR * self.min_scale
        )
        if self._budget_exceeds_window(ball, budget):
            t_reps = np.zeros(len(reps))
        else:
            t_reps = np.array(
                parallel_map(
                    lambda p: self._stopping(ball, pts[p], budget).t, list(reps)
                )
            )
        logger.debug(
            f"Stopping scales at {ball}: {len(reps)} cells, "
            f"{int(np.count_nonzero(t_reps))} positive"
        )
        t = t_reps[owner]
        return ScaleField(
            ball=ball,
            indices=idx,
            representatives=reps,
            owner=owner,
            t=t,
        )

    def wiggly_split(self, ball: Ball, budget: float | None = None) -> WigglySplit:
        """
        Split K_B into Z(B) = {t = 0} and W(B) = {t > 0}.

        Returns:
            Both parts as sample indices, with the discrete length and the
            E-weight of Z(B)

        Raises:
            EmptyBallError: If B holds no sample point
        """
        field = self.stopping_scales(ball, budget)
        return split_field(self, field)


def split_field(client: CoronaClient, field: ScaleField) -> WigglySplit:
    """Partition a scale field by the t = 0 predicate."""
    flat = field.t == 0.0
    z = field.indices[flat]
    w = field.indices[~flat]
    return WigglySplit(
        field=field,
        z=z,
        w=w,
        z_length=math.fsum(client.sample.length_weights[z]),
        z_e_weight=math.fsum(client.sample.e_weight[z]),
    )
