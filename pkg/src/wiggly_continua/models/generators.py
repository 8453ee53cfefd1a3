"""
Generator specification and ground-truth models.
"""

from enum import Enum

from pydantic import Field, field_validator

from .base import ReportModel


class Family(str, Enum):
    """Corpus families that can be generated."""

    SEGMENT = "segment"
    CIRCLE = "circle"
    KOCH = "koch"
    CANTOR_ALPHA = "cantor_alpha"
    CANTOR_THIRD = "cantor_third"
    FOUR_CORNERS = "four_corners"
    WARSAW_SINE = "warsaw_sine"
    HAIRY_SEGMENT = "hairy_segment"
    COMB_BLOCKS = "comb_blocks"
    COMB_R_ALPHA = "comb_R_alpha"
    CONE_JOIN = "cone_join"
    PRODUCT_LIFT = "product_lift"
    JULIA = "julia"


ParamValue = int | float | str


class GeneratorSpec(ReportModel):
    """
    Parametric description of a corpus set.

    ``params`` holds family-specific values (level, alpha, c, depth, ...);
    missing entries fall back to the family defaults.
    """

    family: Family
    params: dict[str, ParamValue] = Field(default_factory=dict)
    resolution_target: float | None = None

    @field_validator("resolution_target")
    @classmethod
    def _positive_resolution(cls, value: float | None) -> float | None:
        if value is not None and value <= 0:
            error_msg = "resolution_target must be positive"
            raise ValueError(error_msg)
        return value


class GroundTruth(ReportModel):
    """Analytic facts known about a generated set."""

    known_dim: float | None = None
    total_E_length: float | None = None  # noqa: N815
    uniformly_wiggly: bool | None = None
    length: float | None = None
    # Similarity ratio of a self-similar set; box counts use it as the grid ratio
    box_ratio: float | None = None
    notes: str = ""
