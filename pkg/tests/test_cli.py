"""Tests for the command-line interface."""

import json

import pytest

from ppx.cli import EXIT_FAILED, EXIT_OK, EXIT_PARSE, main
from ppx.config import Bounds
from ppx.verification.manifest import MANIFEST_NAME, RunManifest


@pytest.fixture
def small_env(monkeypatch):
    """Make every command read small bounds."""
    monkeypatch.setattr(
        Bounds, "from_env", classmethod(lambda cls, environ=None: Bounds(max_dim=1, max_cells=5, max_oriental=3))
    )


def test_check_non_regular(fixture_dir, capsys):
    """Test that the counterexample fails the regularity check."""
    code = main(["check", str(fixture_dir / "examples" / "ce1_Y.json"), "--regular"])
    assert code == EXIT_FAILED
    out = capsys.readouterr().out
    assert "regular: FAILED" in out
    assert "plex Ω lacks spherical boundary" in out


def test_check_globe(fixture_dir, capsys):
    """Test a globe passing every check."""
    path = fixture_dir / "globes" / "d3.json"
    assert main(["check", str(path), "--regular", "--spherical", "--polyplex", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert report["regular"] == {"ok": True, "issues": []}


def test_check_malformed_file(tmp_path, capsys):
    """Test that unreadable input is a parse error."""
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["check", str(bad)]) == EXIT_PARSE
    assert "Error" in capsys.readouterr().err
    assert main(["check", str(tmp_path / "missing.json")]) == EXIT_PARSE


def test_classify_composite(fixture_dir, capsys):
    """Test classifying the horizontal composite."""
    assert main(["classify", str(fixture_dir / "examples" / "ce1_X.json"), "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "polyplex"
    assert data["grades"] == [3, 4, 2]


def test_classify_without_arrow(fixture_dir):
    """Test that a file without an arrow needs --term."""
    assert main(["classify", str(fixture_dir / "globes" / "d2_boundary.json")]) == EXIT_PARSE


def test_oriental_json(small_env, capsys):
    """Test building an oriental from the command line."""
    assert main(["oriental", "2", "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert len(data["polygraph"]["cells"]) == 7
    assert "[0,1,2]" in data["based_complex"]["atoms"]


def test_oriental_too_large(small_env, capsys):
    """Test that the bounds apply to constructions."""
    assert main(["oriental", "4"]) == EXIT_FAILED
    assert "exceeds" in capsys.readouterr().err


def test_tensor_writes_file(fixture_dir, tmp_path, capsys):
    """Test the tensor command with an output file."""
    d1 = str(fixture_dir / "globes" / "d1.json")
    out = tmp_path / "square.json"
    assert main(["tensor", d1, d1, "--out", str(out)]) == EXIT_OK
    assert "4 + 4 + 1" in capsys.readouterr().out
    assert len(json.loads(out.read_text(encoding="utf-8"))["polygraph"]["cells"]) == 9


def test_realize_homology(fixture_dir, capsys):
    """Test the realization of D1 with its homology."""
    assert main(["realize", str(fixture_dir / "globes" / "d1.json"), "--homology"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "3 + 2 simplices" in out
    assert "H_0 = Z" in out
    assert "H_1 = 0" in out


def test_embed_fixture(fixture_dir, capsys):
    """Test gluing orientals along two triangles."""
    path = fixture_dir / "simplicial" / "two_triangles.json"
    assert main(["embed", str(path)]) == EXIT_OK
    assert "4 + 5 + 2 cells" in capsys.readouterr().out


def test_enumerate_with_manifest(small_env, tmp_path, capsys):
    """Test enumeration output files and manifest."""
    out = tmp_path / "items"
    assert main(["enumerate", "--dim", "1", "--max-cells", "5", "--out", str(out)]) == EXIT_OK
    manifest = RunManifest.load(out)
    assert manifest.counts["total"] == 3
    assert len(manifest.outputs) == 3
    assert all((out / name).exists() for name in manifest.outputs)
    assert "Enumerated 3 items" in capsys.readouterr().out


def test_enumerate_is_reproducible(small_env, tmp_path):
    """Test that two runs give the same manifest."""
    for name in ("a", "b"):
        main(["enumerate", "--dim", "1", "--max-cells", "5", "--out", str(tmp_path / name)])
    assert RunManifest.load(tmp_path / "a").same_run(RunManifest.load(tmp_path / "b"))
    a, b = (tmp_path / name / MANIFEST_NAME for name in ("a", "b"))
    assert a.read_bytes() == b.read_bytes()


def test_verify_paper_cone(small_env, tmp_path, capsys):
    """Test a suite run with a report and manifest."""
    assert main(["verify-paper", "cone", "--dim", "1", "--out", str(tmp_path)]) == EXIT_OK
    assert (tmp_path / "report.json").exists()
    manifest = RunManifest.load(tmp_path)
    assert manifest.counts["failed"] == 0
    assert "[PASS] oriental_binomials" in capsys.readouterr().out


def test_verify_paper_sigma(small_env, tmp_path, capsys):
    """Test the counterexample suite from the command line."""
    assert main(["verify-paper", "sigma", "--out", str(tmp_path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "[PASS] ce2_lambda_prime_not_generic" in out
    assert "[PASS] ce1_collapse_not_generic" in out
    assert RunManifest.load(tmp_path).counts["failed"] == 0


def test_no_command(capsys):
    """Test that a bare invocation prints help and fails."""
    assert main([]) == EXIT_FAILED
    assert "usage" in capsys.readouterr().out


def test_unknown_suite():
    """Test that argparse errors are parse errors."""
    assert main(["verify-paper", "everything"]) == EXIT_PARSE
