"""Dispatch from a GeneratorSpec to the family constructors."""

import inspect
import logging
from collections.abc import Callable

from ..models.generators import Family, GeneratorSpec, ParamValue
from .builder import GeneratedSet
from .cantor import cantor_alpha, cantor_third, four_corners
from .combs import comb_blocks, comb_R_alpha, hairy_segment
from .curves import circle, koch, segment, warsaw_sine
from .julia import julia
from .lifts import cone_join, product_lift

logger = logging.getLogger("wiggly-continua.generators")

FAMILY_BUILDERS: dict[Family, Callable[..., GeneratedSet]] = {
    Family.SEGMENT: segment,
    Family.CIRCLE: circle,
    Family.KOCH: koch,
    Family.CANTOR_ALPHA: cantor_alpha,
    Family.CANTOR_THIRD: cantor_third,
    Family.FOUR_CORNERS: four_corners,
    Family.WARSAW_SINE: warsaw_sine,
    Family.HAIRY_SEGMENT: hairy_segment,
    Family.COMB_BLOCKS: comb_blocks,
    Family.COMB_R_ALPHA: comb_R_alpha,
    Family.CONE_JOIN: cone_join,
    Family.PRODUCT_LIFT: product_lift,
    Family.JULIA: julia,
}

# Desk-scale parameters used when the whole corpus is generated at once
FAMILY_DEFAULTS: dict[Family, dict[str, ParamValue]] = {
    Family.SEGMENT: {"level": 10},
    Family.CIRCLE: {"level": 12},
    Family.KOCH: {"level": 7},
    Family.CANTOR_ALPHA: {"alpha": 0.5, "level": 8},
    Family.CANTOR_THIRD: {"level": 8},
    Family.FOUR_CORNERS: {"level": 3, "schedule": "quadratic"},
    Family.WARSAW_SINE: {"pitch": 2e-3},
    Family.HAIRY_SEGMENT: {"level": 8},
    Family.COMB_BLOCKS: {"levels": 4},
    Family.COMB_R_ALPHA: {"copies": 3, "levels": 3},
    Family.CONE_JOIN: {"base_level": 5},
    Family.PRODUCT_LIFT: {"base_level": 5},
    Family.JULIA: {"c": "i", "depth": 20},
}

_INTEGER_PARAMS = frozenset(
    {"level", "levels", "base_level", "copies", "depth", "seed_count", "seed"}
)
_FLOAT_PARAMS = frozenset({"alpha", "pitch"})


def family_parameters(family: Family) -> list[str]:
    """Names of the parameters a family accepts, besides resolution_target."""
    signature = inspect.signature(FAMILY_BUILDERS[family])
    return [name for name in signature.parameters if name != "resolution_target"]


def _coerce(name: str, value: ParamValue) -> ParamValue:
    if name in _INTEGER_PARAMS:
        if isinstance(value, float) and not value.is_integer():
            error_msg = f"parameter {name} must be an integer, got {value}"
            raise ValueError(error_msg)
        return int(value)
    if name in _FLOAT_PARAMS:
        return float(value)
    return value


def generate(spec: GeneratorSpec) -> GeneratedSet:
    """
    Generate the sample described by ``spec``.

    Missing parameters take the constructor defaults. The result is
    audited: its largest nearest-neighbour gap is compared with the
    declared resolution.

    Raises:
        ValueError: If ``spec`` names a parameter the family does not take
        ResolutionUnreachableError: If the resolution target cannot be met
        GeneratorDivergenceError: For a Julia parameter outside the curated list
    """
    accepted = family_parameters(spec.family)
    unknown = sorted(set(spec.params) - set(accepted))
    if unknown:
        error_msg = (
            f"unknown parameter(s) {', '.join(unknown)} for family "
            f"{spec.family.value}; accepted: {', '.join(accepted)}"
        )
        raise ValueError(error_msg)
    kwargs = {name: _coerce(name, value) for name, value in spec.params.items()}
    logger.info(f"Generating {spec.family.value} with {kwargs}")
    result = FAMILY_BUILDERS[spec.family](
        **kwargs, resolution_target=spec.resolution_target
    )
    audit = result.sample.audit_resolution()
    logger.debug(
        f"{spec.family.value}: {result.sample.count} points, max gap "
        f"{audit.max_gap:.3g}, resolution {result.sample.resolution:.3g}"
    )
    return result


def default_spec(family: Family) -> GeneratorSpec:
    """The desk-scale spec of a family."""
    return GeneratorSpec(family=family, params=dict(FAMILY_DEFAULTS[family]))
