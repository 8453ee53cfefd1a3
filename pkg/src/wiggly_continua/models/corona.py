"""
Models for corona constructions and their scaling audits.

A construction is serialised as a nested ball tree; atoms are exported
separately as CSV rows.
"""

from enum import Enum
from typing import Literal

from pydantic import Field

from .base import ReportModel


class CoronaVariant(str, Enum):
    """Which measure construction to run."""

    AVOIDING = "avoiding"
    UNIVERSAL = "universal"
    NONPOROUS = "nonporous"


BallKind = Literal["good", "bad"]
BallStatus = Literal["expanded", "good", "flat", "unresolved", "depth"]


class LemmaCheck(ReportModel):
    """Outcome of the net filter at one ball."""

    t_sum: float
    e_mass: float
    kept: int
    dropped: int
    passed: bool
    passed_diagnostic: bool


class CoronaBallModel(ReportModel):
    """One ball of the tree with its subtree."""

    center: list[float]
    radius: float
    level: int
    mass: float
    kind: BallKind | None = None
    status: BallStatus
    lemma: LemmaCheck | None = None
    children: list["CoronaBallModel"] = Field(default_factory=list)


class CoronaTreeModel(ReportModel):
    """A finished construction."""

    variant: CoronaVariant
    budget: float
    epsilon: float
    n_max: int
    depth: int
    ball_count: int
    atom_count: int
    atom_e_weight: float
    lemma_failures: int
    root: CoronaBallModel


class ScalingProbe(ReportModel):
    """μ(B(x, r)) with the β² integral over [r, R] at the same point."""

    x: list[float]
    r: float
    mass: float
    integral: float


class ScalingAuditModel(ReportModel):
    """
    Fitted constants of the scaling bounds.

    ``c_linear`` is the smallest C with μ(B(x, r)) <= C·r/R on every probe,
    ``c_unnormalised`` the same without the seed radius R. ``c_prime`` is
    the largest value keeping μ <= C·(r/R)·exp(-C′·∫) on every probe with
    C = ``c_linear``. ``slope`` is the regression slope of log(μR/r) on the
    integral.
    """

    root_radius: float
    probes: list[ScalingProbe]
    c_linear: float
    c_unnormalised: float
    c_prime: float
    slope: float | None = None
    stderr: float | None = None
    c_prime_constrained: bool
    violations: int


CoronaBallModel.model_rebuild()
