"""
Root pytest configuration file for wiggly-continua tests.
"""

import pytest


def pytest_addoption(parser):
    """Add command-line options for tests."""
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run corpus-scale tests marked as slow",
    )


def pytest_collection_modifyitems(config, items):
    """Skip tests marked slow unless --run-slow is given."""
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def run_slow(request):
    """True when the --run-slow flag is passed to pytest."""
    return request.config.getoption("--run-slow")
