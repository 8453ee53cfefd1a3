"""Test fixtures for command-line unit tests."""

import os
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from wiggly_continua.commands import AnalysisContext, AnalysisSelection, run_analysis
from wiggly_continua.corona import CoronaConfig
from wiggly_continua.dimension import DimensionConfig
from wiggly_continua.formats import Dataset, write_dataset, write_report
from wiggly_continua.generators import four_corners, segment
from wiggly_continua.geometry import GeometryConfig
from wiggly_continua.multiscale import MultiscaleConfig


@pytest.fixture
def clean_env():
    """Run with no WIGGLY_* variables; restores the environment afterwards."""
    with patch.dict(os.environ, {}, clear=True):
        yield


@pytest.fixture
def runner(clean_env):
    return CliRunner()


@pytest.fixture
def context():
    """Default configuration with a short scaling audit."""
    return AnalysisContext(
        geometry=GeometryConfig(),
        multiscale=MultiscaleConfig(),
        corona=CoronaConfig(n_max=2, probe_count=50),
        dimension=DimensionConfig(),
    )


@pytest.fixture
def segment_path(tmp_path):
    """The level-8 segment written as a dataset: 257 points, h = 2^-8."""
    return write_dataset(
        Dataset.from_generated(segment(level=8)), tmp_path / "segment.jsonl"
    )


@pytest.fixture
def corners_path(tmp_path):
    """Level-3 four corners written as a dataset."""
    return write_dataset(
        Dataset.from_generated(four_corners(level=3)), tmp_path / "corners.jsonl"
    )


@pytest.fixture
def full_report_path(tmp_path, context):
    """A report of the level-8 segment with every section."""
    dataset = Dataset.from_generated(segment(level=8))
    report, _ = run_analysis(dataset, context, AnalysisSelection.everything(), 4)
    return write_report(report, tmp_path / "segment.report.json")
