"""Test fixtures for file format unit tests."""

import pytest

from wiggly_continua.formats import Dataset
from wiggly_continua.generators import four_corners, segment


@pytest.fixture
def segment_dataset():
    """The level-4 segment: 17 W points."""
    return Dataset.from_generated(segment(level=4))


@pytest.fixture
def corners_dataset():
    """Level-1 four corners: W corners and E diagonals with weights."""
    return Dataset.from_generated(four_corners(level=1))
