"""Geometric scale grids λ^k."""

import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from ..exceptions import ScaleBelowResolutionError
from ..models.multiscale import ScaleWindow

_SLACK = 1e-9


@dataclass(frozen=True)
class ScaleGrid:
    """
    The scales λ^k for k_min <= k <= k_max.

    Exponents are positive for scales below 1, so scale decreases as k grows.
    """

    lam: float
    k_min: int
    k_max: int

    def __post_init__(self) -> None:
        if not 0.0 < self.lam < 1.0:
            error_msg = f"lambda must lie in (0, 1), got {self.lam}"
            raise ValueError(error_msg)
        if self.k_min > self.k_max:
            error_msg = f"empty grid window [{self.k_min}, {self.k_max}]"
            raise ValueError(error_msg)

    @classmethod
    def spanning(cls, lam: float, min_scale: float, max_scale: float) -> "ScaleGrid":
        """
        The largest grid with every scale in [min_scale, max_scale].

        Raises:
            ScaleBelowResolutionError: If no power of λ fits in the range
        """
        log_lam = math.log(lam)
        k_min = math.ceil(math.log(max_scale) / log_lam - _SLACK)
        k_max = math.floor(math.log(min_scale) / log_lam + _SLACK)
        if k_min > k_max:
            error_msg = (
                f"no power of {lam} lies between the resolution floor "
                f"{min_scale:.6g} and {max_scale:.6g}"
            )
            raise ScaleBelowResolutionError(error_msg)
        return cls(lam, k_min, k_max)

    @classmethod
    def for_sample(
        cls, diameter: float, resolution: float, lam: float, guard: float
    ) -> "ScaleGrid":
        """The grid spanning [guard·h, diameter] for a sample."""
        return cls.spanning(lam, guard * resolution, diameter)

    @property
    def exponents(self) -> np.ndarray:
        return np.arange(self.k_min, self.k_max + 1)

    @property
    def scales(self) -> np.ndarray:
        return self.lam ** self.exponents.astype(float)

    @property
    def log_step(self) -> float:
        """log(1/λ), the measure dt/t of one annulus."""
        return -math.log(self.lam)

    def scale(self, k: int) -> float:
        return float(self.lam**k)

    def __len__(self) -> int:
        return self.k_max - self.k_min + 1

    def __iter__(self) -> Iterator[tuple[int, float]]:
        for k in range(self.k_min, self.k_max + 1):
            yield k, self.scale(k)

    def truncated(
        self, min_scale: float | None = None, max_scale: float | None = None
    ) -> "ScaleGrid | None":
        """The sub-grid with scales inside the given bounds, or None if empty."""
        k_min, k_max = self.k_min, self.k_max
        log_lam = math.log(self.lam)
        if max_scale is not None:
            k_min = max(k_min, math.ceil(math.log(max_scale) / log_lam - _SLACK))
        if min_scale is not None:
            k_max = min(k_max, math.floor(math.log(min_scale) / log_lam + _SLACK))
        if k_min > k_max:
            return None
        return ScaleGrid(self.lam, k_min, k_max)

    def shifted(self, steps: int) -> "ScaleGrid":
        return ScaleGrid(self.lam, self.k_min + steps, self.k_max + steps)

    def window(self) -> ScaleWindow:
        return ScaleWindow(lam=self.lam, k_min=self.k_min, k_max=self.k_max)
