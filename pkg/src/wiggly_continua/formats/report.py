"""JSON report files."""

import logging
from pathlib import Path
from typing import TypeVar

from pydantic import ValidationError

from ..exceptions import DatasetFormatError
from ..models.base import ReportModel
from ..models.report import Report

logger = logging.getLogger("wiggly-continua.formats")

ModelT = TypeVar("ModelT", bound=ReportModel)


def dump_report(model: ReportModel) -> str:
    """Serialise a report; equal reports give identical text."""
    return model.model_dump_json(indent=2, exclude_none=True) + "\n"


def write_report(model: ReportModel, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(dump_report(model), encoding="utf-8")
    logger.info(f"Wrote {type(model).__name__} to {path}")
    return path


def read_model(path: str | Path, model_type: type[ModelT]) -> ModelT:
    """
    Read and validate a JSON document.

    Raises:
        DatasetFormatError: If the file is missing or does not match the schema
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        error_msg = f"cannot read {path}: {e}"
        raise DatasetFormatError(error_msg) from e
    try:
        return model_type.model_validate_json(text)
    except ValidationError as e:
        error_msg = f"{path} is not a valid {model_type.__name__}: {e}"
        raise DatasetFormatError(error_msg) from e


def read_report(path: str | Path) -> Report:
    return read_model(path, Report)
