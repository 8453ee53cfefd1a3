"""Configuration module for dimension estimates."""

import logging
from dataclasses import dataclass, field

from ..models.constants import (
    DEFAULT_BOX_GUARD,
    DEFAULT_LOCAL_SCALES,
    DEFAULT_MAX_AUDIT_ATOMS,
    DEFAULT_QUANTILE,
)
from ..models.dimension import BoundConstantsModel
from ..utils.env import env_float
from ..utils.logging import log_config_param

logger = logging.getLogger("wiggly-continua.dimension")


@dataclass
class BoundConstants:
    """The universal constants c, c′ and C of the bound formulas."""

    c: float = 1.0
    c_prime: float = 1.0
    capital_c: float = 1.0

    def __post_init__(self) -> None:
        for name in ("c", "c_prime", "capital_c"):
            value = getattr(self, name)
            if not value > 0:
                error_msg = f"bound constant {name} must be positive, got {value}"
                raise ValueError(error_msg)

    @classmethod
    def from_env(cls) -> "BoundConstants":
        """Create constants from WIGGLY_BOUND_C, WIGGLY_BOUND_C_PRIME and
        WIGGLY_BOUND_CAPITAL_C.

        Raises:
            ValueError: If a variable is malformed or not positive
        """
        return cls(
            c=env_float("WIGGLY_BOUND_C", 1.0),
            c_prime=env_float("WIGGLY_BOUND_C_PRIME", 1.0),
            capital_c=env_float("WIGGLY_BOUND_CAPITAL_C", 1.0),
        )

    @classmethod
    def from_model(cls, model: BoundConstantsModel) -> "BoundConstants":
        return cls(c=model.c, c_prime=model.c_prime, capital_c=model.capital_c)

    def to_model(self) -> BoundConstantsModel:
        return BoundConstantsModel(
            c=self.c, c_prime=self.c_prime, capital_c=self.capital_c
        )


@dataclass
class DimensionConfig:
    """Dimension estimator configuration.

    ``quantile`` trims the lowest local dimensions before taking the
    infimum; ``box_guard`` is the finest box side in units of the sample
    resolution and ``local_scales`` the number of scales, counted up from
    the resolution floor, a local dimension is fitted over.
    """

    quantile: float = DEFAULT_QUANTILE
    box_guard: float = DEFAULT_BOX_GUARD
    local_scales: int = DEFAULT_LOCAL_SCALES
    max_atoms: int = DEFAULT_MAX_AUDIT_ATOMS
    constants: BoundConstants = field(default_factory=BoundConstants)

    def __post_init__(self) -> None:
        if not 0.0 <= self.quantile < 1.0:
            error_msg = f"quantile must lie in [0, 1), got {self.quantile}"
            raise ValueError(error_msg)
        if not self.box_guard >= 1.0:
            error_msg = f"box guard must be at least 1, got {self.box_guard}"
            raise ValueError(error_msg)
        if self.local_scales < 3:
            error_msg = "local dimensions need at least 3 scales"
            raise ValueError(error_msg)
        if self.max_atoms < 1:
            error_msg = "max_atoms must be at least 1"
            raise ValueError(error_msg)

    @classmethod
    def from_env(cls) -> "DimensionConfig":
        """Create configuration from environment variables.

        Returns:
            DimensionConfig with the quantile from WIGGLY_QUANTILE and the
            constants from the WIGGLY_BOUND_* variables

        Raises:
            ValueError: If a variable is malformed or out of range
        """
        config = cls(
            quantile=env_float("WIGGLY_QUANTILE", DEFAULT_QUANTILE),
            constants=BoundConstants.from_env(),
        )
        log_config_param(logger, "dimension", "quantile", config.quantile)
        log_config_param(logger, "dimension", "constants", config.constants)
        return config
