"""Curves: segment, circle, the Koch curve and the topologist's sine curve."""

import math

import numpy as np

from ..models.constants import TAG_E, TAG_W
from ..models.generators import Family, GeneratorSpec, GroundTruth
from .builder import GeneratedSet, SampleBuilder, check_pitch, level_for_target

SEGMENT_MAX_LEVEL = 20
CIRCLE_MAX_LEVEL = 20
KOCH_MAX_LEVEL = 9
KOCH_DIMENSION = math.log(4.0) / math.log(3.0)


def segment(
    level: int | None = None, resolution_target: float | None = None
) -> GeneratedSet:
    """The unit segment [0, 1] × {0} with 2**level + 1 equispaced points."""
    level = level_for_target(
        lambda n: 2.0**-n, resolution_target, level, 10, SEGMENT_MAX_LEVEL
    )
    h = 2.0**-level
    builder = SampleBuilder(pitch=h)
    builder.add_polyline(np.array([[0.0, 0.0], [1.0, 0.0]]), TAG_W)
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.SEGMENT,
            params={"level": level},
            resolution_target=resolution_target,
        ),
        sample=builder.build(h),
        truth=GroundTruth(
            known_dim=1.0, length=1.0, total_E_length=0.0, uniformly_wiggly=False
        ),
    )


def _chord(n: int) -> float:
    return 2.0 * math.sin(math.pi / 2**n)


def circle(
    level: int | None = None, resolution_target: float | None = None
) -> GeneratedSet:
    """The unit circle sampled at 2**level equispaced angles."""
    level = level_for_target(_chord, resolution_target, level, 12, CIRCLE_MAX_LEVEL)
    level = max(level, 2)
    n = 2**level
    theta = 2.0 * math.pi * np.arange(n) / n
    h = _chord(level)
    builder = SampleBuilder(pitch=h)
    builder.add_points(np.c_[np.cos(theta), np.sin(theta)], TAG_W)
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.CIRCLE,
            params={"level": level},
            resolution_target=resolution_target,
        ),
        sample=builder.build(h),
        truth=GroundTruth(
            known_dim=1.0,
            length=2.0 * math.pi,
            total_E_length=0.0,
            uniformly_wiggly=False,
        ),
    )


def koch_vertices(level: int) -> np.ndarray:
    """Vertices of the level-n Koch polyline from (0, 0) to (1, 0)."""
    vertices = np.array([[0.0, 0.0], [1.0, 0.0]])
    c, s = math.cos(math.pi / 3.0), math.sin(math.pi / 3.0)
    rotate = np.array([[c, -s], [s, c]])
    for _ in range(level):
        p, q = vertices[:-1], vertices[1:]
        third = (q - p) / 3.0
        a = p + third
        b = p + 2.0 * third
        peak = a + third @ rotate.T
        refined = np.stack([p, a, peak, b], axis=1).reshape(-1, 2)
        vertices = np.vstack([refined, vertices[-1:]])
    return vertices


def koch(
    level: int | None = None, resolution_target: float | None = None
) -> GeneratedSet:
    """The level-n Koch polyline: 4**n + 1 vertices, segment length 3**-n."""
    level = level_for_target(
        lambda n: 3.0**-n, resolution_target, level, 7, KOCH_MAX_LEVEL
    )
    h = 3.0**-level
    builder = SampleBuilder(pitch=h)
    builder.add_polyline(koch_vertices(level), TAG_W)
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.KOCH,
            params={"level": level},
            resolution_target=resolution_target,
        ),
        sample=builder.build(h),
        truth=GroundTruth(
            known_dim=KOCH_DIMENSION,
            length=(4.0 / 3.0) ** level,
            total_E_length=0.0,
            uniformly_wiggly=True,
            box_ratio=1.0 / 3.0,
        ),
    )


WARSAW_MIN_PITCH = 1e-5
WARSAW_MAX_PITCH = 0.05


def warsaw_sine(
    pitch: float = 2e-3, resolution_target: float | None = None
) -> GeneratedSet:
    """
    The topologist's sine curve: the graph of sin(1/x) over (0, 1] and {0}×[-1, 1].

    The graph is resampled at equal arc-length steps on [x_min, 1] with
    x_min = sqrt(pitch/π); below x_min the oscillations are represented by
    a pitch-spaced grid of the strip [0, x_min]×[-1, 1]. Both are tagged E,
    the limit segment is tagged W.
    """
    if resolution_target is not None:
        pitch = resolution_target
    if pitch > WARSAW_MAX_PITCH:
        error_msg = f"pitch must be at most {WARSAW_MAX_PITCH}, got {pitch}"
        raise ValueError(error_msg)
    check_pitch(pitch, WARSAW_MIN_PITCH, Family.WARSAW_SINE.value)
    x_min = math.sqrt(pitch / math.pi)

    u = np.linspace(1.0, 1.0 / x_min, math.ceil((1.0 / x_min - 1.0) / (pitch / 2)) + 1)
    x, y = 1.0 / u, np.sin(u)
    arc = np.concatenate([[0.0], np.cumsum(np.hypot(np.diff(x), np.diff(y)))])
    stations = np.arange(0.0, arc[-1], pitch)
    if arc[-1] - stations[-1] > 1e-12:
        stations = np.append(stations, arc[-1])
    graph = np.c_[np.interp(stations, arc, x), np.interp(stations, arc, y)]

    builder = SampleBuilder(pitch=pitch)
    graph_length = builder.add_polyline(graph, TAG_E)
    columns = pitch * np.arange(1, math.floor(x_min / pitch) + 1)
    if len(columns):
        rows = np.linspace(-1.0, 1.0, math.ceil(2.0 / pitch) + 1)
        gx, gy = np.meshgrid(columns, rows, indexing="ij")
        builder.add_points(
            np.c_[gx.ravel(), gy.ravel()], TAG_E, np.full(gx.size, pitch)
        )
    builder.add_polyline(np.array([[0.0, -1.0], [0.0, 1.0]]), TAG_W)
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.WARSAW_SINE,
            params={"pitch": pitch},
            resolution_target=resolution_target,
        ),
        sample=builder.build(pitch),
        truth=GroundTruth(
            known_dim=1.0,
            total_E_length=None,
            uniformly_wiggly=False,
            notes=(
                "box dimension 3/2; the graph has infinite length, truncated at "
                f"x = {x_min:.6g} with {graph_length:.6f} sampled"
            ),
        ),
    )
