"""CSV mirrors of datasets, corona atoms and box-count fits."""

import csv
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path

from ..corona import CoronaMeasure
from ..dimension.boxcount import fit_points
from ..geometry import TaggedSample
from ..models.constants import COORDINATE_FORMAT
from ..models.dimension import BoxCountFit

logger = logging.getLogger("wiggly-continua.formats")

POINTS_CSV = "points.csv"
ATOMS_CSV = "atoms.csv"
LOGLOG_CSV = "loglog.csv"


def _coordinate_names(dim: int) -> list[str]:
    return ["x", "y", "z"][:dim] if dim <= 3 else [f"x{i}" for i in range(dim)]


def _write_rows(
    path: Path, columns: Sequence[str], rows: Iterable[Sequence[object]]
) -> Path:
    count = 0
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(columns)
        for row in rows:
            writer.writerow(
                format(v, COORDINATE_FORMAT) if isinstance(v, float) else v
                for v in row
            )
            count += 1
    logger.info(f"Wrote {count} rows to {path}")
    return path


def write_points_csv(sample: TaggedSample, path: str | Path) -> Path:
    """Coordinates, tag and E-weight of every sample point."""
    columns = [*_coordinate_names(sample.ambient_dim), "tag", "e_weight"]
    rows = (
        (*(float(c) for c in point), str(tag), float(weight))
        for point, tag, weight in zip(
            sample.points, sample.tags, sample.e_weight, strict=True
        )
    )
    return _write_rows(Path(path), columns, rows)


def write_atoms_csv(measure: CoronaMeasure, path: str | Path) -> Path:
    """Coordinates and mass of every atom of a corona measure."""
    dim = measure.atom_points.shape[1]
    columns = [*_coordinate_names(dim), "mass"]
    return _write_rows(Path(path), columns, measure.atom_rows())


def write_loglog_csv(fit: BoxCountFit, path: str | Path) -> Path:
    """The (log 1/scale, log count) points of a box-count fit."""
    exponents = range(fit.window.k_min, fit.window.k_min + len(fit.counts))
    rows = (
        (k, count, x, y)
        for k, count, (x, y) in zip(exponents, fit.counts, fit_points(fit), strict=True)
    )
    return _write_rows(Path(path), ["k", "count", "log_inv_scale", "log_count"], rows)
