"""Small value types shared by the geometry kernel."""

import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Ball:
    """A closed Euclidean ball."""

    center: tuple[float, ...]
    radius: float

    def __post_init__(self) -> None:
        if not self.radius > 0:
            error_msg = f"ball radius must be positive, got {self.radius}"
            raise ValueError(error_msg)

    @classmethod
    def around(cls, center: "np.ndarray | tuple[float, ...]", radius: float) -> "Ball":
        return cls(tuple(float(c) for c in center), float(radius))

    @property
    def center_array(self) -> np.ndarray:
        return np.asarray(self.center, dtype=float)

    def contains_ball(self, other: "Ball") -> bool:
        """Closed containment of ``other`` in this ball, up to rounding."""
        gap = float(np.linalg.norm(other.center_array - self.center_array))
        return gap + other.radius <= self.radius * (1.0 + 1e-12)

    def is_disjoint(self, other: "Ball") -> bool:
        gap = float(np.linalg.norm(other.center_array - self.center_array))
        return gap > self.radius + other.radius


@dataclass(frozen=True)
class DyadicSquare:
    """
    A dyadic square inside a root square.

    The square at ``depth`` k with ``index`` (i, j) has side
    ``root_side / 2**k`` and lower-left corner
    ``root_corner + side * (i, j)``.
    """

    root_corner: tuple[float, float]
    root_side: float
    depth: int = 0
    index: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        if self.root_side <= 0:
            error_msg = "root_side must be positive"
            raise ValueError(error_msg)
        if self.depth < 0:
            error_msg = "depth must be non-negative"
            raise ValueError(error_msg)

    @property
    def side(self) -> float:
        return self.root_side / 2**self.depth

    @property
    def corner(self) -> tuple[float, float]:
        s = self.side
        return (
            self.root_corner[0] + s * self.index[0],
            self.root_corner[1] + s * self.index[1],
        )

    @property
    def center(self) -> tuple[float, float]:
        x, y = self.corner
        half = self.side / 2.0
        return (x + half, y + half)

    def tripled_bounds(self) -> tuple[np.ndarray, np.ndarray]:
        """Lower and upper corners of 3Q, the concentric square of triple side."""
        c = np.asarray(self.center)
        half = 1.5 * self.side
        return c - half, c + half

    def children(self) -> Iterator["DyadicSquare"]:
        i, j = self.index
        for di in (0, 1):
            for dj in (0, 1):
                yield DyadicSquare(
                    self.root_corner,
                    self.root_side,
                    self.depth + 1,
                    (2 * i + di, 2 * j + dj),
                )

    def at_depth(self, point: np.ndarray, depth: int) -> "DyadicSquare":
        """The square of the given depth, in the same root, containing ``point``."""
        side = self.root_side / 2**depth
        cells = 2**depth
        rel = (np.asarray(point[:2], dtype=float) - np.asarray(self.root_corner)) / side
        i = min(max(math.floor(rel[0]), 0), cells - 1)
        j = min(max(math.floor(rel[1]), 0), cells - 1)
        return DyadicSquare(self.root_corner, self.root_side, depth, (int(i), int(j)))


@dataclass(frozen=True)
class StripFit:
    """
    The narrowest strip enclosing a point set.

    For planar fits ``direction`` is the unit normal of the strip and the
    strip is ``{p : |p·direction - anchor| <= width / 2}``. Approximate fits
    (ambient dimension 3 or more) store the principal axis instead, with the
    width measured as a tube diameter around that axis.
    """

    direction: tuple[float, ...]
    width: float
    anchor: float
    approximate: bool = False


@dataclass(frozen=True)
class BetaValue:
    """A β number together with the flags describing how it was obtained."""

    beta: float
    count: int
    empty: bool = False
    approximate: bool = False


@dataclass(frozen=True)
class PorosityResult:
    """Outcome of a porosity probe at one scale."""

    porous: bool
    witness: tuple[float, ...] | None = None
    clearance: float = 0.0
