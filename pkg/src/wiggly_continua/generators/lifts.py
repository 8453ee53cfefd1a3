"""Sets built over a Cantor base: the cone to an apex and the product with [0, 1]."""

import math

import numpy as np

from ..models.constants import TAG_W
from ..models.generators import Family, GeneratorSpec, GroundTruth
from .builder import GeneratedSet, SampleBuilder, level_for_target
from .cantor import cantor_left_endpoints

LIFT_MAX_LEVEL = 8
CONE_APEX = (1.0, 1.0)


def _cantor_midpoints(base_level: int) -> np.ndarray:
    """One point at the middle of every level-n middle-thirds interval."""
    pitch = 3.0**-base_level
    return cantor_left_endpoints(1.0 / 3.0, base_level) + 0.5 * pitch


def _heights(base_level: int) -> np.ndarray:
    return np.arange(3**base_level) / 3**base_level


def _product_resolution(base_level: int) -> float:
    return 3.0**-base_level / math.sqrt(2.0)


def _cone_resolution(base_level: int) -> float:
    return 0.5 * math.sqrt(5.0) * 3.0**-base_level


def _lifted_truth(notes: str) -> GroundTruth:
    return GroundTruth(
        known_dim=1.0 + math.log(2.0) / math.log(3.0),
        total_E_length=0.0,
        uniformly_wiggly=False,
        box_ratio=1.0 / 3.0,
        notes=notes,
    )


def cone_join(
    base_level: int | None = None, resolution_target: float | None = None
) -> GeneratedSet:
    """
    The cone over the middle-thirds Cantor set with apex (1, 1).

    Every base point (x, 0) is joined to the apex. The base is sampled at the
    midpoints of the level-n intervals and the cone on horizontal slices
    3**-n apart, so both factors share the Cantor pitch.
    """
    base_level = level_for_target(
        _cone_resolution, resolution_target, base_level, 5, LIFT_MAX_LEVEL
    )
    xs = _cantor_midpoints(base_level)
    heights = _heights(base_level)
    apex_x, apex_y = CONE_APEX
    px = xs[None, :] + heights[:, None] * (apex_x - xs[None, :])
    py = np.broadcast_to(heights[:, None] * apex_y, px.shape)
    h = _cone_resolution(base_level)
    builder = SampleBuilder(pitch=h)
    builder.add_points(np.c_[px.ravel(), py.ravel()], TAG_W)
    builder.add_points(np.array([CONE_APEX]), TAG_W)
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.CONE_JOIN,
            params={"base_level": base_level},
            resolution_target=resolution_target,
        ),
        sample=builder.build(h),
        truth=_lifted_truth("cone over the middle-thirds Cantor set"),
    )


def product_lift(
    base_level: int | None = None, resolution_target: float | None = None
) -> GeneratedSet:
    """
    The product of the middle-thirds Cantor set with [0, 1].

    Interval midpoints of level n times the heights j·3**-n, 0 ≤ j ≤ 3**n.
    """
    base_level = level_for_target(
        _product_resolution, resolution_target, base_level, 5, LIFT_MAX_LEVEL
    )
    xs = _cantor_midpoints(base_level)
    ys = np.arange(3**base_level + 1) / 3**base_level
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    h = _product_resolution(base_level)
    builder = SampleBuilder(pitch=h)
    builder.add_points(np.c_[gx.ravel(), gy.ravel()], TAG_W)
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.PRODUCT_LIFT,
            params={"base_level": base_level},
            resolution_target=resolution_target,
        ),
        sample=builder.build(h),
        truth=_lifted_truth("middle-thirds Cantor set times [0, 1]"),
    )
