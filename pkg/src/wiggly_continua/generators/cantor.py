"""Cantor sets: two-map Cantor sets on the axis and the four-corners set."""

import math

import numpy as np

from ..models.constants import TAG_E, TAG_W
from ..models.generators import Family, GeneratorSpec, GroundTruth
from .builder import GeneratedSet, SampleBuilder, level_for_target

CANTOR_MAX_LEVEL = 16


def cantor_left_endpoints(ratio: float, level: int) -> np.ndarray:
    """
    Left endpoints of the 2**level intervals of the two-map Cantor set.

    The maps are x -> ratio·x and x -> ratio·x + (1 - ratio), so every
    level-n interval has length ratio**n.
    """
    lefts = np.array([0.0])
    for _ in range(level):
        lefts = np.concatenate([ratio * lefts, ratio * lefts + (1.0 - ratio)])
    return np.sort(lefts)


def cantor_points(ratio: float, level: int) -> np.ndarray:
    """Both endpoints of every level-n interval, as x-coordinates."""
    lefts = cantor_left_endpoints(ratio, level)
    return np.sort(np.concatenate([lefts, lefts + ratio**level]))


def _cantor(
    family: Family,
    ratio: float,
    level: int | None,
    resolution_target: float | None,
    params: dict,
) -> GeneratedSet:
    level = level_for_target(
        lambda n: ratio**n, resolution_target, level, 9, CANTOR_MAX_LEVEL
    )
    h = ratio**level
    xs = cantor_points(ratio, level)
    builder = SampleBuilder(pitch=h)
    builder.add_points(np.c_[xs, np.zeros_like(xs)], TAG_W)
    return GeneratedSet(
        spec=GeneratorSpec(
            family=family,
            params={**params, "level": level},
            resolution_target=resolution_target,
        ),
        sample=builder.build(h),
        truth=GroundTruth(
            known_dim=math.log(2.0) / math.log(1.0 / ratio),
            total_E_length=0.0,
            uniformly_wiggly=False,
            box_ratio=ratio,
        ),
    )


def cantor_third(
    level: int | None = None, resolution_target: float | None = None
) -> GeneratedSet:
    """The middle-thirds Cantor set at level n: 2**(n+1) interval endpoints."""
    return _cantor(Family.CANTOR_THIRD, 1.0 / 3.0, level, resolution_target, {})


def cantor_alpha(
    alpha: float = 0.5,
    level: int | None = None,
    resolution_target: float | None = None,
) -> GeneratedSet:
    """
    The α-Cantor set: the central fraction α of every interval is removed.

    Level-n intervals have length ((1 - α)/2)**n; α = 1/3 is the
    middle-thirds set.

    Raises:
        ValueError: If alpha is outside (0, 1)
    """
    if not 0.0 < alpha < 1.0:
        error_msg = f"alpha must lie in (0, 1), got {alpha}"
        raise ValueError(error_msg)
    return _cantor(
        Family.CANTOR_ALPHA,
        (1.0 - alpha) / 2.0,
        level,
        resolution_target,
        {"alpha": alpha},
    )


FOUR_CORNERS_MAX_LEVEL = 6
FOUR_CORNERS_SCHEDULES = ("quadratic", "standard")


def four_corners_sides(schedule: str, level: int) -> np.ndarray:
    """
    Side lengths s_0, ..., s_level of the four-corners generations.

    Children of a square of side s sit in its corners with side a_n·s/4,
    where a_n = n²/(n+1)² for the quadratic schedule and a_n = 1 for the
    standard one.
    """
    if schedule not in FOUR_CORNERS_SCHEDULES:
        error_msg = (
            f"schedule must be one of {FOUR_CORNERS_SCHEDULES}, got {schedule!r}"
        )
        raise ValueError(error_msg)
    sides = [1.0]
    for n in range(1, level + 1):
        a_n = (n / (n + 1)) ** 2 if schedule == "quadratic" else 1.0
        sides.append(sides[-1] * a_n / 4.0)
    return np.array(sides)


def four_corners(
    level: int | None = None,
    schedule: str = "quadratic",
    pitch: float | None = None,
    resolution_target: float | None = None,
) -> GeneratedSet:
    """
    The four-corners Cantor set W together with all square diagonals E.

    W is represented by the corners of the level-n squares; E holds both
    diagonals of every square of generations 0..n, sampled at ``pitch``
    with E-weights adding up to the truncated diagonal length
    2√2·Σ 4^k·s_k.
    """
    all_sides = four_corners_sides(schedule, FOUR_CORNERS_MAX_LEVEL)
    level = level_for_target(
        lambda n: math.sqrt(2.0) * all_sides[n],
        resolution_target,
        level,
        3,
        FOUR_CORNERS_MAX_LEVEL,
    )
    sides = all_sides[: level + 1]
    if pitch is None:
        pitch = resolution_target or math.sqrt(2.0) * sides[-1]
    resolution = max(pitch, math.sqrt(2.0) * sides[-1])

    builder = SampleBuilder(pitch=pitch)
    corners = np.zeros((1, 2))
    for k, s in enumerate(sides):
        if k > 0:
            offset = sides[k - 1] - s
            shifts = np.array(
                [[0.0, 0.0], [offset, 0.0], [0.0, offset], [offset, offset]]
            )
            corners = (corners[:, None, :] + shifts[None, :, :]).reshape(-1, 2)
        builder.add_segments(corners, corners + s, TAG_E)
        builder.add_segments(corners + [s, 0.0], corners + [0.0, s], TAG_E)

    s = sides[-1]
    square_corners = np.array([[0.0, 0.0], [s, 0.0], [0.0, s], [s, s]])
    builder.add_points(
        (corners[:, None, :] + square_corners[None, :, :]).reshape(-1, 2), TAG_W
    )

    truncated_length = 2.0 * math.sqrt(2.0) * math.fsum(
        4.0**k * s_k for k, s_k in enumerate(sides)
    )
    if schedule == "quadratic":
        total_length: float | None = truncated_length
        notes = (
            "quadratic schedule a_n = n²/(n+1)²; full diagonal length "
            f"2√2·π²/6 = {2.0 * math.sqrt(2.0) * math.pi**2 / 6.0:.6f}"
        )
    else:
        total_length = None
        notes = "standard schedule; diagonal length grows by 2√2 per generation"
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.FOUR_CORNERS,
            params={"level": level, "schedule": schedule, "pitch": pitch},
            resolution_target=resolution_target,
        ),
        sample=builder.build(resolution),
        truth=GroundTruth(
            known_dim=1.0,
            total_E_length=total_length,
            uniformly_wiggly=True,
            notes=f"{notes}; truncated diagonal length {truncated_length:.6f}",
        ),
    )
