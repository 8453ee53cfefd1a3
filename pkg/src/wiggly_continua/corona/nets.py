"""Covering nets of W(B) and the E-mass filter applied to them."""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from ..geometry import TaggedSample
from ..models.constants import LEMMA_CONSTANT, LEMMA_DIAGNOSTIC_CONSTANT
from ..models.corona import LemmaCheck

logger = logging.getLogger("wiggly-continua.corona")


def select_net(points: np.ndarray, t: np.ndarray) -> np.ndarray:
    """
    Greedy net with pairwise disjoint balls B(x, 2t(x)).

    Points are visited by decreasing t, ties broken lexicographically by
    coordinates; a point is accepted when its 2t-ball misses every accepted
    2t-ball. Every rejected point lies within 4t of an accepted point with
    a larger or equal t, so the 10t-balls of the net cover the input.

    Args:
        points: Candidate points, shape (n, d)
        t: Positive scale per point

    Returns:
        Indices of the accepted points, in acceptance order

    Raises:
        ValueError: If some scale is not positive
    """
    t = np.asarray(t, dtype=float)
    if t.size == 0:
        return np.empty(0, dtype=np.int64)
    pts = np.asarray(points, dtype=float).reshape(len(t), -1)
    if np.any(t <= 0):
        error_msg = "net selection needs positive scales"
        raise ValueError(error_msg)

    keys = [pts[:, k] for k in range(pts.shape[1] - 1, -1, -1)]
    order = np.lexsort((*keys, -t))
    tree = cKDTree(pts)
    t_max = float(t.max())
    accepted = np.zeros(len(t), dtype=bool)
    chosen: list[int] = []
    for i in order:
        near = np.asarray(
            tree.query_ball_point(pts[i], 2.0 * t[i] + 2.0 * t_max), dtype=np.int64
        )
        near = near[accepted[near]]
        if near.size:
            gaps = np.linalg.norm(pts[near] - pts[i], axis=1)
            if np.any(gaps <= 2.0 * t[i] + 2.0 * t[near]):
                continue
        accepted[i] = True
        chosen.append(int(i))
    return np.array(chosen, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class NetFilter:
    """The kept part X(B) of a net and the checks made on it."""

    kept: np.ndarray
    e_mass: np.ndarray
    check: LemmaCheck


def lemma_check(
    t_kept: np.ndarray,
    e_kept: np.ndarray,
    dropped: int,
    radius: float,
    eps: float,
    lemma_constant: float = LEMMA_CONSTANT,
) -> LemmaCheck:
    """Compare Σt and the E-mass of a kept net with the required totals."""
    t_sum = math.fsum(t_kept)
    e_mass = math.fsum(e_kept)
    e_ok = e_mass <= 0.5 * eps * radius
    return LemmaCheck(
        t_sum=t_sum,
        e_mass=e_mass,
        kept=len(t_kept),
        dropped=dropped,
        passed=e_ok and t_sum >= lemma_constant * radius,
        passed_diagnostic=e_ok and t_sum >= LEMMA_DIAGNOSTIC_CONSTANT * radius,
    )


def filter_net(
    points: np.ndarray,
    t: np.ndarray,
    sample: TaggedSample,
    eps: float,
    radius: float,
    lemma_constant: float = LEMMA_CONSTANT,
    require_w: bool = False,
) -> NetFilter:
    """
    Keep the net points whose ball D(x, t) carries little E-weight.

    A point is kept when the E-weight of the sample in D(x, t) is below
    (ε/2)·t and, with ``require_w``, the ball holds a W-tagged point. The
    kept set is then checked against Σt >= C·R_B and total E-mass
    <= (ε/2)·R_B; a failed check is reported, not raised.

    Args:
        points: Net points, shape (n, d)
        t: Scale per point
        sample: Sample providing tags and E-weights
        eps: E-density parameter ε
        radius: Radius R_B of the ball the net lives in
        lemma_constant: Required ratio Σt / R_B
        require_w: Also require a W-tagged point in D(x, t)

    Returns:
        Positions of the kept points with their E-masses and the check
    """
    t = np.asarray(t, dtype=float)
    pts = np.asarray(points, dtype=float).reshape(len(t), -1)
    e_mass = np.zeros(len(t))
    keep = np.zeros(len(t), dtype=bool)
    for i in range(len(t)):
        idx = sample.ball_indices(pts[i], float(t[i]))
        e_mass[i] = math.fsum(sample.e_weight[idx])
        keep[i] = e_mass[i] < 0.5 * eps * t[i]
        if require_w:
            keep[i] = keep[i] and bool(np.any(sample.w_mask[idx]))
    kept = np.flatnonzero(keep)
    check = lemma_check(
        t[kept], e_mass[kept], len(t) - len(kept), radius, eps, lemma_constant
    )
    if not check.passed:
        logger.debug(
            f"Net filter kept {check.kept} of {len(t)} balls, "
            f"sum t = {check.t_sum:.3g} against {lemma_constant:g} x {radius:.3g}"
        )
    return NetFilter(kept=kept, e_mass=e_mass[kept], check=check)
