"""File formats for wiggly-continua: JSONL datasets, JSON reports, CSV mirrors."""

from .dataset import Dataset, format_record, read_dataset, write_dataset
from .export import (
    ATOMS_CSV,
    LOGLOG_CSV,
    POINTS_CSV,
    write_atoms_csv,
    write_loglog_csv,
    write_points_csv,
)
from .report import dump_report, read_model, read_report, write_report

__all__ = [
    "ATOMS_CSV",
    "LOGLOG_CSV",
    "POINTS_CSV",
    "Dataset",
    "dump_report",
    "format_record",
    "read_dataset",
    "read_model",
    "read_report",
    "write_atoms_csv",
    "write_dataset",
    "write_loglog_csv",
    "write_points_csv",
]
