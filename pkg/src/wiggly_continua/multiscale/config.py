"""Configuration module for multiscale scans."""

import logging
from dataclasses import dataclass

from ..models.constants import DEFAULT_BETA0, DEFAULT_LAMBDA, DEFAULT_POROSITY_EPSILON
from ..utils.env import env_float
from ..utils.logging import log_config_param

logger = logging.getLogger("wiggly-continua.multiscale")


@dataclass
class MultiscaleConfig:
    """Scale-grid ratio and the cutoffs used by the scale densities."""

    lam: float = DEFAULT_LAMBDA  # Grid ratio λ
    beta0: float = DEFAULT_BETA0  # Wiggliness cutoff β₀
    porosity_epsilon: float = DEFAULT_POROSITY_EPSILON  # Porosity parameter ε

    def __post_init__(self) -> None:
        if not 0.0 < self.lam < 1.0:
            error_msg = f"lambda must lie in (0, 1), got {self.lam}"
            raise ValueError(error_msg)
        if not 0.0 < self.beta0 < 1.0:
            error_msg = f"beta0 must lie in (0, 1), got {self.beta0}"
            raise ValueError(error_msg)
        if not 0.0 < self.porosity_epsilon < 0.5:
            error_msg = (
                f"porosity epsilon must lie in (0, 1/2), got {self.porosity_epsilon}"
            )
            raise ValueError(error_msg)

    @classmethod
    def from_env(cls) -> "MultiscaleConfig":
        """Create configuration from environment variables.

        Returns:
            MultiscaleConfig with values from WIGGLY_LAMBDA, WIGGLY_BETA0 and
            WIGGLY_POROSITY_EPSILON

        Raises:
            ValueError: If a variable is malformed or out of range
        """
        config = cls(
            lam=env_float("WIGGLY_LAMBDA", DEFAULT_LAMBDA),
            beta0=env_float("WIGGLY_BETA0", DEFAULT_BETA0),
            porosity_epsilon=env_float(
                "WIGGLY_POROSITY_EPSILON", DEFAULT_POROSITY_EPSILON
            ),
        )
        log_config_param(logger, "multiscale", "lambda", config.lam)
        log_config_param(logger, "multiscale", "beta0", config.beta0)
        return config
