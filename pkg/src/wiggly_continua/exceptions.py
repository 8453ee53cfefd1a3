"""Exception types raised by wiggly-continua."""

from typing import Any


class WigglyContinuaError(Exception):
    """Base class for all errors raised by the package."""

    pass


class EmptyPointSetError(WigglyContinuaError, ValueError):
    """Raised when a geometric operation receives no points."""

    pass


class ScaleBelowResolutionError(WigglyContinuaError, ValueError):
    """Raised when a scale is too small for the sample to represent the continuum."""

    pass


class EmptyBallError(WigglyContinuaError, ValueError):
    """Raised when a ball that must carry sample points contains none."""

    pass


class DegenerateFitError(WigglyContinuaError, ValueError):
    """Raised when a log-log regression has too few usable points."""

    pass


class ResolutionUnreachableError(WigglyContinuaError, ValueError):
    """Raised when a generator cannot meet the requested resolution."""

    def __init__(
        self,
        message: str,
        achievable_resolution: float | None = None,
        achievable_level: int | None = None,
    ) -> None:
        super().__init__(message)
        self.achievable_resolution = achievable_resolution
        self.achievable_level = achievable_level


class GeneratorDivergenceError(WigglyContinuaError, ValueError):
    """Raised when a Julia parameter lies outside the curated list."""

    pass


class DatasetFormatError(WigglyContinuaError, ValueError):
    """Raised when a dataset or report file is unreadable or inconsistent."""

    pass


class MissingReportSectionError(WigglyContinuaError, KeyError):
    """Raised when a plot needs a report section that was not computed."""

    pass


class MeasureConstructionStuckError(WigglyContinuaError, RuntimeError):
    """Raised when a corona ball has neither a usable net nor a usable core."""

    def __init__(self, message: str, diagnostics: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics or {}
