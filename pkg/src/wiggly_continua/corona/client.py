"""Base client for corona constructions."""

import logging
import math

from ..geometry import GeometryConfig, TaggedSample
from ..multiscale import MultiscaleAnalyzer, MultiscaleConfig
from ..utils.logging import log_config_param
from .config import CoronaConfig

logger = logging.getLogger("wiggly-continua.corona")


class CoronaClient(MultiscaleAnalyzer):
    """Scale scans extended with the corona configuration."""

    corona_config: CoronaConfig

    def __init__(
        self,
        sample: TaggedSample,
        config: CoronaConfig | None = None,
        multiscale_config: MultiscaleConfig | None = None,
        geometry_config: GeometryConfig | None = None,
    ) -> None:
        """Initialize the client.

        Args:
            sample: The sample to build measures on
            config: Optional corona configuration (will use env vars if not provided)
            multiscale_config: Optional scan configuration
            geometry_config: Optional geometry configuration

        Raises:
            ValueError: If configuration is invalid
        """
        super().__init__(sample, multiscale_config, geometry_config)
        self.corona_config = config or CoronaConfig.from_env()
        log_config_param(logger, "corona", "epsilon", self.corona_config.epsilon)

    @property
    def step(self) -> float:
        """log(1/λ), the weight of one grid annulus."""
        return -math.log(self.multiscale_config.lam)
