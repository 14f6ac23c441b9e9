"""Test configuration for pytest."""

import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from ppx.config import Bounds  # noqa: E402
from ppx.fixtures.catalog import FixtureCatalog  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    """The shipped fixture catalog."""
    return FixtureCatalog()


@pytest.fixture(scope="session")
def expected(catalog):
    """The table of expected values."""
    return catalog.expected()


@pytest.fixture
def small_bounds():
    """Bounds small enough for whole-suite runs inside the test session."""
    return Bounds(max_dim=2, max_cells=8, max_oriental=3)


@pytest.fixture
def fixture_dir():
    """Directory of the shipped fixtures."""
    return project_root / "data" / "fixtures"
