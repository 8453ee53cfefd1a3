"""Configuration module for corona constructions."""

import logging
import math
import os
from dataclasses import dataclass

from ..models.constants import (
    DEFAULT_BUDGET,
    DEFAULT_EPSILON,
    DEFAULT_N_MAX,
    DEFAULT_PROBE_COUNT,
    LEMMA_CONSTANT,
)
from ..models.corona import CoronaVariant
from ..utils.env import env_float, env_int
from ..utils.logging import log_config_param

logger = logging.getLogger("wiggly-continua.corona")


@dataclass
class CoronaConfig:
    """Corona construction configuration.

    ``budget`` is the wiggliness budget M of the stopping scales and
    ``epsilon`` the E-density allowed in a seed ball. ``porosity_epsilon``
    is only used by the nonporous variant; when unset it is derived as
    2·e^(2M)·ε/λ².
    """

    variant: CoronaVariant = CoronaVariant.UNIVERSAL
    budget: float = DEFAULT_BUDGET
    epsilon: float = DEFAULT_EPSILON
    n_max: int = DEFAULT_N_MAX
    lemma_constant: float = LEMMA_CONSTANT
    probe_count: int = DEFAULT_PROBE_COUNT
    seed: int = 0
    porosity_epsilon: float | None = None

    def __post_init__(self) -> None:
        self.variant = CoronaVariant(self.variant)
        if not self.budget > 0:
            error_msg = f"budget M must be positive, got {self.budget}"
            raise ValueError(error_msg)
        if not 0.0 < self.epsilon <= 0.01:
            error_msg = f"epsilon must lie in (0, 1/100], got {self.epsilon}"
            raise ValueError(error_msg)
        if self.n_max < 0:
            error_msg = "n_max must be non-negative"
            raise ValueError(error_msg)
        if self.probe_count < 1:
            error_msg = "probe_count must be at least 1"
            raise ValueError(error_msg)
        if self.lemma_constant <= 0:
            error_msg = "lemma_constant must be positive"
            raise ValueError(error_msg)

    def resolved_porosity_epsilon(self, lam: float) -> float:
        """
        The porosity parameter ε′ of the nonporous variant.

        Raises:
            ValueError: If ε′ (given or derived) is outside (0, 1/2)
        """
        eps = self.porosity_epsilon
        if eps is None:
            eps = 2.0 * math.exp(2.0 * self.budget) * self.epsilon / lam**2
        if not 0.0 < eps < 0.5:
            error_msg = (
                f"nonporous epsilon must lie in (0, 1/2), got {eps:.6g}; "
                "set WIGGLY_NONPOROUS_EPSILON"
            )
            raise ValueError(error_msg)
        return eps

    @property
    def enforces_radius_collapse(self) -> bool:
        """True when M is large enough for the child-radius collapse."""
        return self.budget >= 4.0 * math.log(10.0)

    @classmethod
    def from_env(cls) -> "CoronaConfig":
        """Create configuration from environment variables.

        Returns:
            CoronaConfig with values from WIGGLY_VARIANT, WIGGLY_M,
            WIGGLY_EPSILON, WIGGLY_N_MAX, WIGGLY_PROBE_COUNT, WIGGLY_SEED and
            WIGGLY_NONPOROUS_EPSILON

        Raises:
            ValueError: If a variable is malformed or out of range
        """
        raw_variant = os.getenv("WIGGLY_VARIANT", CoronaVariant.UNIVERSAL.value)
        try:
            variant = CoronaVariant(raw_variant.strip().lower())
        except ValueError:
            choices = ", ".join(v.value for v in CoronaVariant)
            error_msg = f"WIGGLY_VARIANT must be one of {choices}, got {raw_variant!r}"
            raise ValueError(error_msg) from None
        raw_eps = os.getenv("WIGGLY_NONPOROUS_EPSILON")
        config = cls(
            variant=variant,
            budget=env_float("WIGGLY_M", DEFAULT_BUDGET),
            epsilon=env_float("WIGGLY_EPSILON", DEFAULT_EPSILON),
            n_max=env_int("WIGGLY_N_MAX", DEFAULT_N_MAX),
            probe_count=env_int("WIGGLY_PROBE_COUNT", DEFAULT_PROBE_COUNT),
            seed=env_int("WIGGLY_SEED", 0),
            porosity_epsilon=(
                env_float("WIGGLY_NONPOROUS_EPSILON", 0.0) if raw_eps else None
            ),
        )
        log_config_param(logger, "corona", "variant", config.variant.value)
        log_config_param(logger, "corona", "M", config.budget)
        log_config_param(logger, "corona", "n_max", config.n_max)
        return config
