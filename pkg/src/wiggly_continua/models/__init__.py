"""
Pydantic models for wiggly-continua artefacts.

This package re-exports the serialised models of every analysis area so
that callers can import them from a single place.
"""

from .base import ReportModel
from .corona import (
    CoronaBallModel,
    CoronaTreeModel,
    CoronaVariant,
    LemmaCheck,
    ScalingAuditModel,
    ScalingProbe,
)
from .dimension import (
    BoundConstantsModel,
    BoundInputs,
    BoxCountFit,
    Calibration,
    CalibrationEntry,
    DimensionReport,
    LocalDimension,
    TheoremBound,
)
from .generators import Family, GeneratorSpec, GroundTruth
from .multiscale import (
    BetaProfileModel,
    ConvexDensityModel,
    DensityEstimate,
    RatioEstimate,
    ScaleWindow,
    TSPResult,
)
from .report import (
    BetaSection,
    CoronaSection,
    CorpusEntry,
    CorpusReport,
    DatasetHeader,
    DatasetSummary,
    DensitySection,
    PointDensities,
    PointRecord,
    Report,
)

__all__ = [
    "BetaProfileModel",
    "BetaSection",
    "BoundConstantsModel",
    "BoundInputs",
    "BoxCountFit",
    "Calibration",
    "CalibrationEntry",
    "ConvexDensityModel",
    "CoronaBallModel",
    "CoronaSection",
    "CoronaTreeModel",
    "CoronaVariant",
    "CorpusEntry",
    "CorpusReport",
    "DatasetHeader",
    "DatasetSummary",
    "DensityEstimate",
    "DensitySection",
    "DimensionReport",
    "Family",
    "GeneratorSpec",
    "GroundTruth",
    "LemmaCheck",
    "LocalDimension",
    "PointDensities",
    "PointRecord",
    "RatioEstimate",
    "Report",
    "ReportModel",
    "ScaleWindow",
    "ScalingAuditModel",
    "ScalingProbe",
    "TSPResult",
    "TheoremBound",
]
