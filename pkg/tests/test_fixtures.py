"""Tests for the fixture catalog, the named examples and random generators."""

import pytest

from ppx.core.terms import Compose
from ppx.core.validation import validate
from ppx.fixtures.catalog import FixtureCatalog
from ppx.fixtures.examples import BUILDERS, Example, build_example, ce2_lambda
from ppx.fixtures.randomized import random_chain_complex, random_identifications, random_terms
from ppx.polyplex.enumerate import enumerate_polyplexes
from ppx.polyplex.regularity import is_regular
from ppx.steiner.construct import globe, oriental


def test_catalog_names(catalog):
    """Test that every shipped fixture has a builder."""
    names = catalog.names()
    assert "d_prime_star" in names
    assert "ce1_Y" in names
    assert set(names) <= set(BUILDERS)
    assert len(catalog) == len(names)


def test_catalog_is_current(catalog):
    """Test that fixture files match the in-code builders."""
    assert catalog.stale() == []


def test_catalog_get(catalog):
    """Test loading fixtures and their arrows."""
    ex = catalog.get("ce1_X")
    assert ex.polygraph.grades() == (3, 4, 2)
    assert isinstance(ex.arrow, Compose)
    assert catalog.get("d2").polygraph == globe(2)
    assert catalog.get_statistics()["d1"] == [2, 1]


def test_catalog_unknown_fixture(catalog):
    """Test lookups of missing fixtures."""
    with pytest.raises(KeyError):
        catalog.get("nope")
    with pytest.raises(KeyError):
        catalog.path("nope")


def test_catalog_rejects_invalid_file(tmp_path):
    """Test that a broken fixture file is refused."""
    (tmp_path / "broken.json").write_text('{"cells": [{"id": 0}]}', encoding="utf-8")
    catalog = FixtureCatalog(tmp_path)
    assert catalog.names() == ["broken"]
    with pytest.raises(ValueError):
        catalog.get("broken")


def test_catalog_regenerate(tmp_path):
    """Test writing fixtures from the builders."""
    catalog = FixtureCatalog(tmp_path)
    written = catalog.regenerate(["d1", "oriental_2"])
    assert [p.name for p in written] == ["d1.json", "oriental_2.json"]
    assert catalog.stale() == []
    assert catalog.get("oriental_2").polygraph == oriental(2)


def test_build_example():
    """Test the named example builders."""
    ex = build_example("d3")
    assert ex.arrow == globe(3).gen("3")
    assert Example.from_dict(ex.to_dict()).polygraph == ex.polygraph
    with pytest.raises(KeyError):
        build_example("d9")


def test_every_example_validates():
    """Test that the builders produce well formed polygraphs."""
    for name in BUILDERS:
        assert validate(build_example(name).polygraph).ok, name


def test_lambda_domain():
    """Test the loop morphism's domain and codomain."""
    lam = ce2_lambda()
    assert lam.domain.grades() == (1, 1, 1)
    assert lam.codomain.grades() == (2, 2, 2)


def test_random_terms_are_deterministic():
    """Test that a seed fixes the generated terms."""
    p = oriental(2)
    assert random_terms(p, 10, seed=7) == random_terms(p, 10, seed=7)
    assert len(random_terms(p, 10, seed=7)) == 10


def test_random_chain_complex_is_deterministic():
    """Test that a seed fixes the generated complex."""
    a = random_chain_complex(11, augmented=True)
    b = random_chain_complex(11, augmented=True)
    assert a.same_as(b)
    assert a.violations() == []
    assert a.dim <= 4


def test_random_identifications():
    """Test quotients of small polyplexes."""
    polyplexes = list(enumerate_polyplexes(1, 5))
    found = random_identifications(polyplexes, 5, seed=3)
    assert found == random_identifications(polyplexes, 5, seed=3)
    assert all(is_regular(q) for q, _ in found)
    assert random_identifications([], 5) == []
