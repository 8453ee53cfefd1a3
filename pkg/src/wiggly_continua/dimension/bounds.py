"""
Closed-form dimension bounds and their calibration.

Every bound is affine in one universal constant k: value = offset + slope·k.
Lower bounds are valid while value <= dim, upper bounds while value >= dim,
which turns calibration into intersecting half-lines.
"""

import logging
import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from ..models.dimension import (
    BoundInputs,
    BoundKind,
    Calibration,
    CalibrationEntry,
    ConstantName,
    TheoremBound,
)
from .config import BoundConstants

logger = logging.getLogger("wiggly-continua.dimension")

_SLACK = 1e-12


@dataclass(frozen=True)
class BoundSpec:
    """One bound formula with the inputs it needs."""

    name: str
    kind: BoundKind
    constant: ConstantName
    formula: str
    needs: tuple[str, ...]
    terms: Callable[[dict[str, float]], tuple[float, float]]
    grows: bool = True
    domain: Callable[[dict[str, float]], str | None] = lambda _: None


def _open_unit(name: str) -> Callable[[dict[str, float]], str | None]:
    def check(values: dict[str, float]) -> str | None:
        if not 0.0 < values[name] < 1.0:
            return f"{name} must lie in (0, 1) for this bound"
        return None

    return check


BOUNDS: tuple[BoundSpec, ...] = (
    BoundSpec(
        name="thm1",
        kind="lower",
        constant="c",
        formula="1 + c·β₀²",
        needs=("beta0",),
        terms=lambda v: (1.0, v["beta0"] ** 2),
    ),
    BoundSpec(
        name="thm2",
        kind="upper",
        constant="c",
        formula="1 + c·β₀²",
        needs=("beta0",),
        terms=lambda v: (1.0, v["beta0"] ** 2),
    ),
    BoundSpec(
        name="thm3",
        kind="lower",
        constant="c_prime",
        formula="1 + c′·λ⁴·β₀²·κ",
        needs=("lam", "beta0", "kappa"),
        terms=lambda v: (1.0, v["lam"] ** 4 * v["beta0"] ** 2 * v["kappa"]),
    ),
    BoundSpec(
        name="thm4",
        kind="upper",
        constant="c_prime",
        formula="1 + c′·λ⁻⁴·(1 − κ_flat + β₀²·κ_flat)",
        needs=("lam", "beta0", "kappa_flat"),
        terms=lambda v: (
            1.0,
            v["lam"] ** -4
            * (1.0 - v["kappa_flat"] + v["beta0"] ** 2 * v["kappa_flat"]),
        ),
    ),
    BoundSpec(
        name="thm5",
        kind="lower",
        constant="capital_c",
        formula="1 + κ_np·(d − 1 − C/|log ε|)",
        needs=("kappa_nonporous", "ambient_dim", "epsilon"),
        terms=lambda v: (
            1.0 + v["kappa_nonporous"] * (v["ambient_dim"] - 1.0),
            -v["kappa_nonporous"] / abs(math.log(v["epsilon"])),
        ),
        grows=False,
        domain=_open_unit("epsilon"),
    ),
    BoundSpec(
        name="thm7",
        kind="lower",
        constant="c",
        formula="c·d₀²",
        needs=("d0",),
        terms=lambda v: (0.0, v["d0"] ** 2),
    ),
    BoundSpec(
        name="thm9",
        kind="upper",
        constant="c",
        formula="c·d₀²",
        needs=("d0",),
        terms=lambda v: (0.0, v["d0"] ** 2),
    ),
    BoundSpec(
        name="flat_full",
        kind="upper",
        constant="capital_c",
        formula="d − κ_flat + C/|log β₀|",
        needs=("ambient_dim", "kappa_flat", "beta0"),
        terms=lambda v: (
            v["ambient_dim"] - v["kappa_flat"],
            1.0 / abs(math.log(v["beta0"])),
        ),
        domain=_open_unit("beta0"),
    ),
)

BOUNDS_BY_NAME = {spec.name: spec for spec in BOUNDS}


def _values(
    inputs: BoundInputs, spec: BoundSpec
) -> tuple[dict[str, float], str | None]:
    raw = inputs.model_dump()
    missing = [name for name in spec.needs if raw.get(name) is None]
    if missing:
        return {}, f"not computed: missing {', '.join(missing)}"
    values = {name: float(raw[name]) for name in spec.needs}
    problem = spec.domain(values)
    if problem is not None:
        return values, f"not computed: {problem}"
    return values, None


def evaluate_bound(
    spec: BoundSpec,
    inputs: BoundInputs,
    constants: BoundConstants,
    box_dim: float | None = None,
) -> TheoremBound:
    """Evaluate one bound; missing inputs give an uncomputed entry."""
    constant_value = float(getattr(constants, spec.constant))
    values, reason = _values(inputs, spec)
    if reason is not None:
        return TheoremBound(
            bound=spec.name,
            kind=spec.kind,
            formula=spec.formula,
            constant=spec.constant,
            constant_value=constant_value,
            inputs=values,
            computed=False,
            reason=reason,
        )
    offset, slope = spec.terms(values)
    value = offset + slope * constant_value
    consistent = None
    if box_dim is not None:
        consistent = (
            value <= box_dim + _SLACK
            if spec.kind == "lower"
            else value >= box_dim - _SLACK
        )
    return TheoremBound(
        bound=spec.name,
        kind=spec.kind,
        formula=spec.formula,
        constant=spec.constant,
        constant_value=constant_value,
        inputs=values,
        computed=True,
        value=value,
        offset=offset,
        slope=slope,
        consistent=consistent,
    )


def theorem_bounds(
    inputs: BoundInputs,
    constants: BoundConstants | None = None,
    box_dim: float | None = None,
) -> dict[str, TheoremBound]:
    """
    Evaluate every bound formula on one set of measurements.

    Args:
        inputs: Measured λ, β₀, κ, ε, d₀ and d; absent values leave the
            bounds needing them uncomputed
        constants: Universal constants (default 1)
        box_dim: Measured box dimension to check each bound against

    Returns:
        Bounds keyed by name
    """
    constants = constants or BoundConstants()
    bounds = {
        spec.name: evaluate_bound(spec, inputs, constants, box_dim) for spec in BOUNDS
    }
    broken = [
        name for name, bound in bounds.items() if bound.consistent is False
    ]
    if broken:
        logger.warning(f"Bounds on the wrong side of box_dim: {', '.join(broken)}")
    return bounds


def _calibrate(
    spec: BoundSpec, records: list[tuple[float, BoundInputs]]
) -> CalibrationEntry:
    # Feasible constants form the interval [low, high] within (0, inf).
    low, high = 0.0, math.inf
    used = 0
    for box_dim, inputs in records:
        values, reason = _values(inputs, spec)
        if reason is not None:
            continue
        used += 1
        offset, slope = spec.terms(values)
        gap = box_dim - offset
        if slope == 0.0:
            valid = gap >= -_SLACK if spec.kind == "lower" else gap <= _SLACK
            if not valid:
                low, high = math.inf, 0.0
            continue
        edge = gap / slope
        # lower bounds need slope·k <= gap, upper bounds slope·k >= gap
        if (spec.kind == "lower") == (slope > 0):
            high = min(high, edge)
        else:
            low = max(low, edge)

    feasible = used > 0 and low <= high and high > 0
    value: float | None = None
    if feasible:
        tight_high = (spec.kind == "lower") == spec.grows
        value = high if tight_high else low
        if math.isinf(value) or value <= 0:
            value = None
    return CalibrationEntry(
        bound=spec.name,
        kind=spec.kind,
        constant=spec.constant,
        value=value,
        records=used,
        feasible=feasible,
    )


def calibrate_constants(
    records: Iterable[tuple[float, BoundInputs]],
) -> Calibration:
    """
    Tightest constants keeping every bound on the right side of box_dim.

    Each record pairs a measured box dimension with the inputs measured on
    the same set; records lacking a bound's inputs are skipped for that
    bound. The returned constants are taken from the lower bounds: c is
    the smaller of the thm1 and thm7 values, c′ comes from thm3 and C from
    thm5. A constant with no feasible value stays at 1.

    Returns:
        The constants and one calibration entry per bound
    """
    records = list(records)
    entries = [_calibrate(spec, records) for spec in BOUNDS]
    by_name = {entry.bound: entry for entry in entries}

    def pick(*names: str) -> float:
        values = [by_name[n].value for n in names if by_name[n].value is not None]
        return min(values) if values else 1.0

    constants = BoundConstants(
        c=pick("thm1", "thm7"),
        c_prime=pick("thm3"),
        capital_c=pick("thm5"),
    )
    logger.info(
        f"Calibrated constants over {len(records)} records: c = {constants.c:.4g}, "
        f"c' = {constants.c_prime:.4g}, C = {constants.capital_c:.4g}"
    )
    return Calibration(constants=constants.to_model(), entries=entries)
