"""
Julia sets of z² + c sampled by inverse iteration.

Only a curated list of parameters is accepted: the circle and segment
cases, the basilica, and two Misiurewicz parameters whose critical orbits
are preperiodic.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import GeneratorDivergenceError
from ..geometry import TaggedSample
from ..models.generators import Family, GeneratorSpec, GroundTruth
from .builder import GeneratedSet

logger = logging.getLogger("wiggly-continua.generators")

MIN_DEPTH = 10
DEFAULT_JULIA_RESOLUTION = 2e-3
WALK_BURN_IN = 10
# a cell pitch of resolution/3 keeps neighbouring cells within one resolution
CELLS_PER_RESOLUTION = 3.0
PARAMETER_TOLERANCE = 1e-9
_KEY_OFFSET = 1 << 30


@dataclass(frozen=True)
class JuliaParameter:
    """A curated parameter with what is known about its Julia set."""

    c: complex
    label: str
    mean_wiggly: bool
    known_dim: float | None = None
    length: float | None = None


CURATED_PARAMETERS = (
    JuliaParameter(0j, "circle", mean_wiggly=False, known_dim=1.0, length=2 * math.pi),
    JuliaParameter(-2 + 0j, "segment", mean_wiggly=False, known_dim=1.0, length=4.0),
    JuliaParameter(-1 + 0j, "basilica", mean_wiggly=True),
    JuliaParameter(1j, "dendrite", mean_wiggly=True),
    JuliaParameter(-1.5436890126920764 + 0j, "real Misiurewicz", mean_wiggly=True),
)


def parse_parameter(value: complex | float | str) -> complex:
    """Parse ``c`` from a number or a string such as ``"i"`` or ``"-1+0.5i"``."""
    if isinstance(value, str):
        text = value.strip().replace(" ", "").replace("i", "j")
        try:
            return complex(text)
        except ValueError as e:
            error_msg = f"cannot parse Julia parameter {value!r}"
            raise ValueError(error_msg) from e
    return complex(value)


def curated_parameter(c: complex) -> JuliaParameter:
    """
    Look up a curated parameter.

    Raises:
        GeneratorDivergenceError: If ``c`` is not in the curated list
    """
    for entry in CURATED_PARAMETERS:
        if abs(entry.c - c) <= PARAMETER_TOLERANCE:
            return entry
    known = ", ".join(f"{entry.c}" for entry in CURATED_PARAMETERS)
    error_msg = f"Julia parameter {c} is not in the curated list ({known})"
    raise GeneratorDivergenceError(error_msg)


def repelling_fixed_point(c: complex) -> complex:
    """The fixed point (1 + sqrt(1 - 4c))/2 of z² + c."""
    return complex((1.0 + np.sqrt(complex(1.0 - 4.0 * c))) / 2.0)


def _cell_keys(z: np.ndarray, pitch: float) -> np.ndarray:
    kx = np.floor(z.real / pitch).astype(np.int64) + _KEY_OFFSET
    ky = np.floor(z.imag / pitch).astype(np.int64) + _KEY_OFFSET
    return kx * (2 * _KEY_OFFSET) + ky


def _fresh(
    z: np.ndarray, seen: np.ndarray, pitch: float
) -> tuple[np.ndarray, np.ndarray]:
    """One representative per grid cell not yet in ``seen``, and the new keys."""
    keys, first = np.unique(_cell_keys(z, pitch), return_index=True)
    unseen = ~np.isin(keys, seen, assume_unique=True)
    return z[first[unseen]], keys[unseen]


def julia_inverse(
    c: complex,
    depth: int = 20,
    seed_count: int = 0,
    resolution: float = DEFAULT_JULIA_RESOLUTION,
    seed: int = 0,
) -> TaggedSample:
    """
    Sample the Julia set of z² + c by backward orbits of its repelling fixed point.

    All preimages up to ``depth`` generations are taken under both branches
    ±sqrt(z - c); a preimage landing in an already visited grid cell is not
    pursued further. ``seed_count`` additional random backward walks, seeded
    with ``seed``, add one point per step after a short burn-in.

    Raises:
        ValueError: If depth is below 10 or resolution is not positive
        GeneratorDivergenceError: If ``c`` is not a curated parameter
    """
    if depth < MIN_DEPTH:
        error_msg = f"depth must be at least {MIN_DEPTH}, got {depth}"
        raise ValueError(error_msg)
    if not resolution > 0:
        error_msg = "resolution must be positive"
        raise ValueError(error_msg)
    entry = curated_parameter(c)
    pitch = resolution / CELLS_PER_RESOLUTION
    z0 = repelling_fixed_point(entry.c)

    frontier = np.array([z0])
    seen = _cell_keys(frontier, pitch)
    found = [frontier]
    for generation in range(depth):
        roots = np.sqrt(frontier - entry.c)
        frontier, keys = _fresh(np.concatenate([roots, -roots]), seen, pitch)
        if frontier.size == 0:
            logger.debug(f"Backward orbit exhausted after {generation + 1} generations")
            break
        seen = np.union1d(seen, keys)
        found.append(frontier)

    if seed_count > 0:
        rng = np.random.default_rng(seed)
        walkers = np.full(seed_count, z0)
        for step in range(depth + WALK_BURN_IN):
            signs = rng.choice(np.array([-1.0, 1.0]), size=seed_count)
            walkers = signs * np.sqrt(walkers - entry.c)
            if step >= WALK_BURN_IN:
                fresh, keys = _fresh(walkers, seen, pitch)
                seen = np.union1d(seen, keys)
                found.append(fresh)

    z = np.concatenate(found)
    logger.info(f"Julia set of z² + {entry.c} ({entry.label}): {z.size} points")
    return TaggedSample.from_points(np.c_[z.real, z.imag], resolution)


def julia(
    c: complex | float | str = "i",
    depth: int = 20,
    seed_count: int = 0,
    seed: int = 0,
    resolution_target: float | None = None,
) -> GeneratedSet:
    """Generate a curated Julia set with its ground truth."""
    value = parse_parameter(c)
    entry = curated_parameter(value)
    sample = julia_inverse(
        entry.c,
        depth=depth,
        seed_count=seed_count,
        resolution=resolution_target or DEFAULT_JULIA_RESOLUTION,
        seed=seed,
    )
    params: dict[str, int | float | str] = {
        "c": str(c),
        "depth": depth,
        "seed_count": seed_count,
        "seed": seed,
    }
    notes = f"{entry.label}; " + (
        "expected mean wiggly" if entry.mean_wiggly else "not wiggly"
    )
    return GeneratedSet(
        spec=GeneratorSpec(
            family=Family.JULIA, params=params, resolution_target=resolution_target
        ),
        sample=sample,
        truth=GroundTruth(
            known_dim=entry.known_dim,
            length=entry.length,
            uniformly_wiggly=False if not entry.mean_wiggly else None,
            notes=notes,
        ),
    )
