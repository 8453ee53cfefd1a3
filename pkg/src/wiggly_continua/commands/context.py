"""Resolved configuration for one CLI run."""

import logging
from dataclasses import dataclass, replace
from typing import Any, TypeVar

from ..corona import CoronaConfig
from ..dimension import DimensionConfig
from ..geometry import GeometryConfig
from ..multiscale import MultiscaleConfig
from ..utils.logging import log_config_param

logger = logging.getLogger("wiggly-continua.commands")

ConfigType = TypeVar(
    "ConfigType", GeometryConfig, MultiscaleConfig, CoronaConfig, DimensionConfig
)


def _override(
    section: str, config: ConfigType, values: dict[str, Any] | None
) -> ConfigType:
    """Replace the fields given on the command line; None means not given."""
    given = {k: v for k, v in (values or {}).items() if v is not None}
    if not given:
        return config
    for name, value in given.items():
        log_config_param(logger, section, f"{name} (flag)", value)
    return replace(config, **given)


@dataclass(frozen=True)
class AnalysisContext:
    """
    Context holding the geometry, scan, corona and dimension configurations
    resolved from environment variables and command-line flags.
    """

    geometry: GeometryConfig
    multiscale: MultiscaleConfig
    corona: CoronaConfig
    dimension: DimensionConfig

    @classmethod
    def from_env(
        cls,
        multiscale: dict[str, Any] | None = None,
        corona: dict[str, Any] | None = None,
        dimension: dict[str, Any] | None = None,
    ) -> "AnalysisContext":
        """Load every configuration from the environment, then apply flags.

        Args:
            multiscale: MultiscaleConfig fields given on the command line
            corona: CoronaConfig fields given on the command line
            dimension: DimensionConfig fields given on the command line

        Raises:
            ValueError: If a variable or flag is malformed or out of range
        """
        return cls(
            geometry=GeometryConfig.from_env(),
            multiscale=_override(
                "multiscale", MultiscaleConfig.from_env(), multiscale
            ),
            corona=_override("corona", CoronaConfig.from_env(), corona),
            dimension=_override("dimension", DimensionConfig.from_env(), dimension),
        )
