"""
JSONL dataset files.

The first line is a ``DatasetHeader``; every following line is one
``PointRecord``. Coordinates are written with 17 significant digits so that
reading a file back reproduces the sample bit for bit.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from ..exceptions import DatasetFormatError
from ..generators import GeneratedSet
from ..geometry import TaggedSample
from ..models.constants import COORDINATE_FORMAT
from ..models.generators import GeneratorSpec, GroundTruth
from ..models.report import DatasetHeader, PointRecord

logger = logging.getLogger("wiggly-continua.formats")


@dataclass(frozen=True, eq=False)
class Dataset:
    """A sample together with the header describing it."""

    header: DatasetHeader
    sample: TaggedSample

    @classmethod
    def from_sample(
        cls,
        sample: TaggedSample,
        spec: GeneratorSpec | None = None,
        truth: GroundTruth | None = None,
    ) -> "Dataset":
        header = DatasetHeader(
            family=None if spec is None else spec.family,
            params={} if spec is None else dict(spec.params),
            resolution=sample.resolution,
            ambient_dim=sample.ambient_dim,
            count=sample.count,
            diameter=sample.diameter,
            truth=truth,
        )
        return cls(header, sample)

    @classmethod
    def from_generated(cls, generated: GeneratedSet) -> "Dataset":
        return cls.from_sample(generated.sample, generated.spec, generated.truth)


def _number(value: float) -> str:
    return format(float(value), COORDINATE_FORMAT)


def format_record(point: np.ndarray, tag: str, e_weight: float) -> str:
    """One dataset body line."""
    coords = ", ".join(_number(c) for c in point)
    return f'{{"x": [{coords}], "tag": "{tag}", "e_weight": {_number(e_weight)}}}'


def write_dataset(dataset: Dataset, path: str | Path) -> Path:
    """Write a dataset file, header first."""
    path = Path(path)
    sample = dataset.sample
    with path.open("w", encoding="utf-8") as handle:
        handle.write(dataset.header.model_dump_json(exclude_none=True) + "\n")
        for point, tag, weight in zip(
            sample.points, sample.tags, sample.e_weight, strict=True
        ):
            handle.write(format_record(point, str(tag), float(weight)) + "\n")
    logger.info(f"Wrote {sample.count} records to {path}")
    return path


def read_dataset(path: str | Path) -> Dataset:
    """
    Read and validate a dataset file.

    Raises:
        DatasetFormatError: If the file is missing, malformed, or its body
            disagrees with its header
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        error_msg = f"cannot read dataset {path}: {e}"
        raise DatasetFormatError(error_msg) from e
    lines = [line for line in lines if line.strip()]
    if not lines:
        error_msg = f"dataset {path} is empty"
        raise DatasetFormatError(error_msg)

    try:
        header = DatasetHeader.model_validate_json(lines[0])
    except ValidationError as e:
        error_msg = f"invalid dataset header in {path}: {e}"
        raise DatasetFormatError(error_msg) from e

    body = lines[1:]
    if len(body) != header.count:
        error_msg = (
            f"dataset {path} declares {header.count} records but holds {len(body)}"
        )
        raise DatasetFormatError(error_msg)

    records = []
    for number, line in enumerate(body, start=2):
        try:
            record = PointRecord.model_validate(json.loads(line))
        except (json.JSONDecodeError, ValidationError) as e:
            error_msg = f"invalid record on line {number} of {path}: {e}"
            raise DatasetFormatError(error_msg) from e
        if len(record.x) != header.ambient_dim:
            error_msg = (
                f"record on line {number} of {path} has {len(record.x)} "
                f"coordinates, expected {header.ambient_dim}"
            )
            raise DatasetFormatError(error_msg)
        records.append(record)

    try:
        sample = TaggedSample.from_points(
            np.array([r.x for r in records], dtype=float),
            header.resolution,
            tags=[r.tag for r in records],
            e_weight=[r.e_weight for r in records],
            diameter=header.diameter,
        )
    except ValueError as e:
        error_msg = f"inconsistent dataset {path}: {e}"
        raise DatasetFormatError(error_msg) from e
    logger.info(f"Read {sample.count} records from {path}")
    return Dataset(header, sample)
