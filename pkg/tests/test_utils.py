"""Tests for utility functions."""
import pytest

from ppx.utils.helpers import (
    dump_json,
    format_grades,
    load_polygraph,
    load_semi_simplicial,
    save_json,
    sha256_file,
    sha256_text,
)
from ppx.utils.validators import (
    validate_cell_data,
    validate_expected,
    validate_polygraph_data,
    validate_simplicial_data,
    validate_term_data,
)


def test_validate_term_data():
    assert validate_term_data({"comp": [{"gen": 0}, {"gen": 1}, 0]}) is True
    assert validate_term_data({"gen": "x"}) is False
    assert validate_term_data(None) is False


def test_validate_cell_data():
    assert validate_cell_data({"id": 0, "dim": 0, "name": "x"}, 0) == []
    assert validate_cell_data({"id": 1, "dim": 1, "src": {"gen": 0}}, 1) == ["Cell at index 1 is missing tgt"]
    assert validate_cell_data({"id": 2, "dim": 0, "src": {"gen": 0}}, 2) == [
        "0-cell at index 2 cannot have a source or target"
    ]
    assert validate_cell_data("x", 3) == ["Cell at index 3 must be an object"]


def test_validate_polygraph_data():
    valid = {"cells": [{"id": 0, "dim": 0}, {"id": 1, "dim": 0}], "class": "positive"}
    assert validate_polygraph_data(valid) == (True, [])

    ok, errors = validate_polygraph_data({"cells": [{"id": 0, "dim": 0}, {"id": 0, "dim": 0}], "class": "wild"})
    assert ok is False
    assert "Unknown class 'wild'" in errors
    assert "Duplicate cell id 0" in errors

    assert validate_polygraph_data([]) == (False, ["A polygraph must be a JSON object"])
    assert validate_polygraph_data({"cells": [], "arrow": {"gen": "x"}}) == (False, ["Malformed arrow"])


def test_validate_simplicial_data():
    good = {"simplices": [["a", "b"], ["e"]], "faces": [[[], []], [[1, 0]]]}
    assert validate_simplicial_data(good) == (True, [])
    ok, errors = validate_simplicial_data({"simplices": [["a"], ["e"]], "faces": [[[]], [[1, 0]]]})
    assert ok is False
    assert errors == ["Simplex 0 of dimension 1 has a face out of range"]


def test_validate_expected():
    assert validate_expected({"ce1": {}}, ["ce1"]) == (True, [])
    assert validate_expected({}, ["ce1"]) == (False, ["Missing expected value 'ce1'"])


def test_json_helpers(tmp_path):
    assert dump_json({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    path = tmp_path / "nested" / "data.json"
    save_json({"Ω": 1}, path)
    assert path.read_text(encoding="utf-8") == '{\n  "Ω": 1\n}\n'
    assert sha256_file(path) == sha256_text('{\n  "Ω": 1\n}\n')


def test_load_polygraph(fixture_dir, tmp_path):
    p, arrow = load_polygraph(fixture_dir / "globes" / "d2.json")
    assert p.grades() == (2, 2, 1)
    assert arrow is not None
    _, none = load_polygraph(fixture_dir / "globes" / "d2_boundary.json")
    assert none is None

    bad = tmp_path / "bad.json"
    save_json({"cells": "none"}, bad)
    with pytest.raises(ValueError):
        load_polygraph(bad)


def test_load_semi_simplicial(fixture_dir, tmp_path):
    s = load_semi_simplicial(fixture_dir / "simplicial" / "triangle_boundary.json")
    assert s.counts == (3, 3)

    bad = tmp_path / "bad.json"
    save_json({"simplices": [["a"]], "faces": []}, bad)
    with pytest.raises(ValueError):
        load_semi_simplicial(bad)


def test_format_grades():
    assert format_grades((3, 4, 2)) == "3 + 4 + 2"
    assert format_grades(()) == "0"
