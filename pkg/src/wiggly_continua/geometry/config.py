"""Configuration module for sample geometry."""

from dataclasses import dataclass

from ..models.constants import (
    DEFAULT_BETA_CACHE_SIZE,
    DEFAULT_KERNEL_TOLERANCE,
    DEFAULT_RESOLUTION_GUARD,
)
from ..utils.env import env_float, env_int


@dataclass
class GeometryConfig:
    """Geometry kernel configuration.

    Controls how far above the sample resolution geometric queries are
    allowed to go and how aggressively β values are memoised.
    """

    resolution_guard: float = DEFAULT_RESOLUTION_GUARD  # Smallest scale, in units of h
    kernel_tolerance: float = DEFAULT_KERNEL_TOLERANCE  # Relative width tolerance
    beta_cache_size: int = DEFAULT_BETA_CACHE_SIZE  # Memoised (point, scale) pairs

    def __post_init__(self) -> None:
        if self.resolution_guard <= 0:
            error_msg = "resolution_guard must be positive"
            raise ValueError(error_msg)
        if self.kernel_tolerance < 0:
            error_msg = "kernel_tolerance must be non-negative"
            raise ValueError(error_msg)
        if self.beta_cache_size < 1:
            error_msg = "beta_cache_size must be at least 1"
            raise ValueError(error_msg)

    @classmethod
    def from_env(cls) -> "GeometryConfig":
        """Create configuration from environment variables.

        Returns:
            GeometryConfig with values from WIGGLY_RESOLUTION_GUARD,
            WIGGLY_KERNEL_TOLERANCE and WIGGLY_BETA_CACHE_SIZE

        Raises:
            ValueError: If a variable is set to an invalid value
        """
        return cls(
            resolution_guard=env_float(
                "WIGGLY_RESOLUTION_GUARD", DEFAULT_RESOLUTION_GUARD
            ),
            kernel_tolerance=env_float(
                "WIGGLY_KERNEL_TOLERANCE", DEFAULT_KERNEL_TOLERANCE
            ),
            beta_cache_size=env_int("WIGGLY_BETA_CACHE_SIZE", DEFAULT_BETA_CACHE_SIZE),
        )
