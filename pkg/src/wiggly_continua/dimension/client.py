"""Base client for dimension estimates."""

import logging

from ..geometry import GeometryConfig, TaggedSample
from ..multiscale import MultiscaleClient, MultiscaleConfig
from ..utils.logging import log_config_param
from .config import DimensionConfig

logger = logging.getLogger("wiggly-continua.dimension")


class DimensionClient(MultiscaleClient):
    """Scan configuration extended with the dimension settings."""

    dimension_config: DimensionConfig

    def __init__(
        self,
        sample: TaggedSample,
        config: DimensionConfig | None = None,
        multiscale_config: MultiscaleConfig | None = None,
        geometry_config: GeometryConfig | None = None,
    ) -> None:
        """Initialize the client.

        Args:
            sample: The sample whose dimension is estimated
            config: Optional dimension configuration (will use env vars if not
                provided)
            multiscale_config: Optional scan configuration
            geometry_config: Optional geometry configuration

        Raises:
            ValueError: If configuration is invalid
        """
        super().__init__(sample, multiscale_config, geometry_config)
        self.dimension_config = config or DimensionConfig.from_env()
        log_config_param(
            logger, "dimension", "box_guard", self.dimension_config.box_guard
        )
