"""Constructors for the example continua the analyses are validated on."""

from .builder import GeneratedSet, SampleBuilder
from .cantor import (
    FOUR_CORNERS_SCHEDULES,
    cantor_alpha,
    cantor_third,
    four_corners,
)
from .combs import comb_blocks, comb_R_alpha, hairy_segment
from .curves import circle, koch, segment, warsaw_sine
from .julia import CURATED_PARAMETERS, julia, julia_inverse, parse_parameter
from .lifts import cone_join, product_lift
from .registry import (
    FAMILY_BUILDERS,
    FAMILY_DEFAULTS,
    default_spec,
    family_parameters,
    generate,
)

__all__ = [
    "CURATED_PARAMETERS",
    "FOUR_CORNERS_SCHEDULES",
    "FAMILY_BUILDERS",
    "FAMILY_DEFAULTS",
    "GeneratedSet",
    "SampleBuilder",
    "cantor_alpha",
    "cantor_third",
    "circle",
    "comb_R_alpha",
    "comb_blocks",
    "cone_join",
    "default_spec",
    "family_parameters",
    "four_corners",
    "generate",
    "hairy_segment",
    "julia",
    "julia_inverse",
    "koch",
    "parse_parameter",
    "product_lift",
    "segment",
    "warsaw_sine",
]
