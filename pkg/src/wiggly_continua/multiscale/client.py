"""Base client for multiscale scans."""

import logging

from ..geometry import GeometryConfig, SampleGeometry, TaggedSample
from .config import MultiscaleConfig
from .grid import ScaleGrid

logger = logging.getLogger("wiggly-continua.multiscale")


class MultiscaleClient(SampleGeometry):
    """Sample geometry extended with the scan configuration."""

    multiscale_config: MultiscaleConfig

    def __init__(
        self,
        sample: TaggedSample,
        config: MultiscaleConfig | None = None,
        geometry_config: GeometryConfig | None = None,
    ) -> None:
        """Initialize the client.

        Args:
            sample: The sample to scan
            config: Optional scan configuration (will use env vars if not provided)
            geometry_config: Optional geometry configuration

        Raises:
            ValueError: If configuration is invalid
        """
        super().__init__(sample, geometry_config)
        self.multiscale_config = config or MultiscaleConfig.from_env()

    def default_grid(self) -> ScaleGrid:
        """The λ-grid spanning [guard·h, diameter] for this sample."""
        return ScaleGrid.for_sample(
            self.sample.diameter,
            self.sample.resolution,
            self.multiscale_config.lam,
            self.config.resolution_guard,
        )

    def _usable(self, grid: ScaleGrid, min_scale: float) -> ScaleGrid | None:
        usable = grid.truncated(min_scale=min_scale)
        if usable is None:
            logger.warning(
                f"Every scale of [{grid.k_min}, {grid.k_max}] lies below "
                f"{min_scale:.3g}; returning an empty scan"
            )
        elif usable.k_max < grid.k_max:
            logger.debug(
                f"Grid truncated from k_max={grid.k_max} to {usable.k_max} "
                f"at the resolution floor {min_scale:.3g}"
            )
        return usable
