"""Tests for size bounds and their environment overrides."""

import pytest

from ppx.config import DEFAULT_BOUNDS, ENV_MAX_CELLS, ENV_WORKERS, Bounds


def test_defaults():
    """Test the desk-scale defaults."""
    assert DEFAULT_BOUNDS == Bounds(max_dim=3, max_cells=12, max_oriental=5, max_snf_columns=2000, workers=1)


def test_invalid_bounds():
    """Test that non-positive limits are rejected."""
    with pytest.raises(ValueError):
        Bounds(max_dim=-1)
    with pytest.raises(ValueError):
        Bounds(max_cells=0)
    with pytest.raises(ValueError):
        Bounds(workers=0)


def test_from_env():
    """Test reading overrides from a mapping."""
    bounds = Bounds.from_env({ENV_MAX_CELLS: "20", ENV_WORKERS: "4"})
    assert bounds.max_cells == 20
    assert bounds.workers == 4
    assert Bounds.from_env({ENV_MAX_CELLS: ""}) == DEFAULT_BOUNDS


def test_from_env_rejects_garbage():
    """Test that non-integer variables raise ValueError."""
    with pytest.raises(ValueError, match=ENV_WORKERS):
        Bounds.from_env({ENV_WORKERS: "many"})


def test_from_process_environment(monkeypatch):
    """Test that os.environ is read by default."""
    monkeypatch.setenv(ENV_MAX_CELLS, "9")
    monkeypatch.delenv(ENV_WORKERS, raising=False)
    assert Bounds.from_env().max_cells == 9


def test_override_skips_none():
    """Test that explicit flags override only when given."""
    bounds = DEFAULT_BOUNDS.override(max_cells=None, workers=2)
    assert bounds.max_cells == DEFAULT_BOUNDS.max_cells
    assert bounds.workers == 2


def test_dict_round_trip():
    """Test the dictionary form of bounds."""
    bounds = Bounds(max_dim=2, max_cells=8)
    assert Bounds.from_dict(bounds.to_dict()) == bounds
