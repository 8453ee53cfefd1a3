"""
Comb-like continua built over [0, 1].

The hairy segment carries vertical hairs at every dyadic point; the comb
of blocks and the Cantor comb are the two sets that are non-porous along a
whole segment or Cantor set while having finite length.
"""

import math

import numpy as np

from ..models.constants import TAG_E, TAG_W
from ..models.generators import Family, GeneratorSpec, GroundTruth
from .builder import GeneratedSet, SampleBuilder, check_pitch, level_for_target
from .cantor import cantor_left_endpoints, cantor_points

HAIRY_MAX_LEVEL = 14
COMB_BLOCKS_MAX_LEVELS = 5
COMB_R_ALPHA_MAX_LEVELS = 6
COMB_R_ALPHA_MAX_COPIES = 6
DEFAULT_CANTOR_COMB_PITCH = 2.0**-11

_UNIT_SEGMENT = np.array([[0.0, 0.0], [1.0, 0.0]])


def hairy_segment(
    level: int | None = None, resolution_target: float | None = None
) -> GeneratedSet:
    """
    [0, 1] (tagged W) with vertical hairs of length 2**-m centred at the odd
    multiples of 2**-m, for m = 1..level (tagged E).
    """
    level = level_for_target(
        lambda n: 2.0**-n, resolution_target, level, 8, HAIRY_MAX_LEVEL
    )
    h = 2.0**-level
    builder = SampleBuilder(pitch=h)
    builder.add_polyline(_UNIT_SEGMENT, TAG_W)
    for m in range(1, level + 1):
        centres = np.arange(1, 2**m, 2) * 2.0**-m
        half = 2.0 ** -(m + 1)
        builder.add_segments(
            np.c_[centres, np.full_like(centres, -half)],
            np.c_[centres, np.full_like(centres, half)],
            TAG_E,
        )
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.HAIRY_SEGMENT,
            params={"level": level},
            resolution_target=resolution_target,
        ),
        sample=builder.build(h),
        truth=GroundTruth(
            known_dim=1.0,
            total_E_length=None,
            uniformly_wiggly=True,
            notes=(
                "every hair generation adds length 1/2; "
                f"{level / 2:.6g} sampled"
            ),
        ),
    )


def comb_blocks(
    levels: int | None = None, resolution_target: float | None = None
) -> GeneratedSet:
    """
    [0, 1] with rows of short blocks above and below it.

    Generation m places, at each height ±(2**-m + k·2**-2m) for
    k = 0..2**m - 1, the blocks [0, 2**-4m] translated to the points
    j·2**-2m, j = 1..2**2m - 1. Blocks shorter than the pitch are sampled by
    a single point.
    """
    levels = level_for_target(
        lambda n: 2.0**-n, resolution_target, levels, 4, COMB_BLOCKS_MAX_LEVELS
    )
    h = 2.0**-levels
    builder = SampleBuilder(pitch=h / 2.0)
    builder.add_polyline(_UNIT_SEGMENT, TAG_W)
    block_length = 0.0
    for m in range(1, levels + 1):
        starts_x = np.arange(1, 2 ** (2 * m)) * 2.0 ** (-2 * m)
        heights = 2.0**-m + np.arange(2**m) * 2.0 ** (-2 * m)
        heights = np.concatenate([heights, -heights])
        sx, sy = np.meshgrid(starts_x, heights, indexing="ij")
        starts = np.c_[sx.ravel(), sy.ravel()]
        block_length += builder.add_segments(
            starts, starts + [2.0 ** (-4 * m), 0.0], TAG_E
        )
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.COMB_BLOCKS,
            params={"levels": levels},
            resolution_target=resolution_target,
        ),
        sample=builder.build(h),
        truth=GroundTruth(
            known_dim=1.0,
            total_E_length=block_length,
            uniformly_wiggly=False,
            length=1.0 + block_length,
            notes="non-porous at scales of density 1 at every point of (0, 1)",
        ),
    )


def cantor_skeleton(ratio: float, levels: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Segments of the square skeletons over a two-map Cantor set, without [0, 1].

    Over every generation-n interval J stands the square with base J, cut
    by n horizontal rungs at heights (k/n)·|J|, k = 1..n (the last rung is
    the top side), together with its reflection in the real axis. Vertical
    sides are added only at the generation where their foot first appears
    as an interval endpoint, so nested sides are not counted twice.

    Returns:
        Segment start and end points
    """
    starts: list[np.ndarray] = []
    ends: list[np.ndarray] = []
    for n in range(1, levels + 1):
        lefts = cantor_left_endpoints(ratio, n)
        size = ratio**n
        rights = lefts + size
        feet = (
            np.concatenate([lefts, rights])
            if n == 1
            else np.concatenate([rights[0::2], lefts[1::2]])
        )
        starts.append(np.c_[feet, np.zeros_like(feet)])
        ends.append(np.c_[feet, np.full_like(feet, size)])
        rung_heights = size * np.arange(1, n + 1) / n
        lx, hy = np.meshgrid(lefts, rung_heights, indexing="ij")
        rx, _ = np.meshgrid(rights, rung_heights, indexing="ij")
        starts.append(np.c_[lx.ravel(), hy.ravel()])
        ends.append(np.c_[rx.ravel(), hy.ravel()])
    upper_starts = np.vstack(starts)
    upper_ends = np.vstack(ends)
    flip = np.array([1.0, -1.0])
    return (
        np.vstack([upper_starts, upper_starts * flip]),
        np.vstack([upper_ends, upper_ends * flip]),
    )


def comb_R_alpha(
    copies: int = 3,
    levels: int = 3,
    pitch: float | None = None,
    resolution_target: float | None = None,
) -> GeneratedSet:
    """
    Scaled Cantor combs attached to [0, 1].

    Copy k uses the α-Cantor set with α_k = 1/(k+1), carries the square
    skeletons of generations 1..levels, is scaled by β_k = 4**-k / H¹(R_k)
    and translated to 1/k. The Cantor endpoints of every copy are tagged W,
    the skeletons and [0, 1] are tagged E.

    Raises:
        ResolutionUnreachableError: If the truncation of the construction
            is coarser than ``resolution_target``
    """
    if not 1 <= copies <= COMB_R_ALPHA_MAX_COPIES:
        error_msg = f"copies must lie in [1, {COMB_R_ALPHA_MAX_COPIES}], got {copies}"
        raise ValueError(error_msg)
    if not 1 <= levels <= COMB_R_ALPHA_MAX_LEVELS:
        error_msg = f"levels must lie in [1, {COMB_R_ALPHA_MAX_LEVELS}], got {levels}"
        raise ValueError(error_msg)
    if pitch is None:
        pitch = resolution_target or DEFAULT_CANTOR_COMB_PITCH

    copies_data = []
    for k in range(1, copies + 1):
        ratio = (1.0 - 1.0 / (k + 1)) / 2.0
        seg_starts, seg_ends = cantor_skeleton(ratio, levels)
        skeleton_length = math.fsum(np.linalg.norm(seg_ends - seg_starts, axis=1))
        scale = 4.0**-k / (1.0 + skeleton_length)
        copies_data.append((k, ratio, scale, seg_starts, seg_ends))

    # omitted copies sit within 4**-k·ρ_k of the axis, omitted generations
    # inside the deepest squares
    deepest = max(math.sqrt(2.0) * c[2] * c[1] ** levels for c in copies_data)
    truncation = max(0.5 * 4.0 ** -(copies + 1), deepest)
    if resolution_target is not None:
        check_pitch(resolution_target, truncation, Family.COMB_R_ALPHA.value)
    resolution = max(pitch, truncation)

    builder = SampleBuilder(pitch=pitch)
    e_length = builder.add_polyline(_UNIT_SEGMENT, TAG_E)
    for k, ratio, scale, seg_starts, seg_ends in copies_data:
        offset = np.array([1.0 / k, 0.0])
        if k == 1:
            e_length += builder.add_polyline(scale * _UNIT_SEGMENT + offset, TAG_E)
        e_length += builder.add_segments(
            scale * seg_starts + offset, scale * seg_ends + offset, TAG_E
        )
        xs = cantor_points(ratio, levels)
        builder.add_points(np.c_[scale * xs + offset[0], np.zeros_like(xs)], TAG_W)

    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.COMB_R_ALPHA,
            params={"copies": copies, "levels": levels, "pitch": pitch},
            resolution_target=resolution_target,
        ),
        sample=builder.build(resolution),
        truth=GroundTruth(
            known_dim=1.0,
            total_E_length=e_length,
            uniformly_wiggly=False,
            notes=(
                "α_k = 1/(k+1); copy k scaled by 4^-k / H¹(R_k) and placed at 1/k"
            ),
        ),
    )
