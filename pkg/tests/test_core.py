"""Tests for polygraphs, terms and their algebra."""

import pytest

from ppx.core.algebra import arrows_equal, boundary, compose, dimension, is_positive, normalize
from ppx.core.constructions import identify_cells, pushout, sub_lattice
from ppx.core.morphism import (
    PolygraphMorphism,
    check_morphism,
    compose_morphisms,
    eval_morphism,
    identity_morphism,
)
from ppx.core.polygraph import Cell, ClassTag, Polygraph, PolygraphBuilder, SubPolygraph, disjoint_union
from ppx.core.terms import (
    Boundary,
    Compose,
    Gen,
    Sign,
    occurrence_counts,
    render,
    rename,
    term_from_json,
    term_to_json,
)
from ppx.core.validation import validate
from ppx.errors import BoundaryMismatch, ClosureViolation, NotACell, UnsupportedClass
from ppx.fixtures.examples import ce1_collapse, ce1_Y, ce2_lambda, ce2_X
from ppx.steiner.construct import globe


def test_sign_parse_and_flip():
    """Test the usual spellings of signs."""
    assert Sign.parse("-") is Sign.MINUS
    assert Sign.parse(1) is Sign.PLUS
    assert Sign.MINUS.flip() is Sign.PLUS
    assert Sign.PLUS.times(-1) is Sign.MINUS
    with pytest.raises(ValueError):
        Sign.parse("sideways")


def test_term_json_encoding():
    """Test the nested JSON form of a term."""
    t = Compose(Gen(1), Boundary(Gen(2), 0, Sign.PLUS), 0)
    data = term_to_json(t)
    assert data == {"comp": [{"gen": 1}, {"bnd": [{"gen": 2}, 0, "+"]}, 0]}
    assert term_from_json(data) == t


def test_term_from_json_rejects_garbage():
    """Test that malformed encodings raise ValueError."""
    for bad in ({"gen": "x"}, {"comp": [{"gen": 1}]}, [], {"gen": 1, "comp": []}):
        with pytest.raises(ValueError):
            term_from_json(bad)


def test_negative_composition_level():
    """Test that terms refuse negative levels."""
    with pytest.raises(ValueError):
        Compose(Gen(0), Gen(1), -1)


def test_render_and_occurrences():
    """Test rendering and the occurrence walk."""
    y = ce1_Y()
    t = Compose(y.gen("α"), y.gen("γ"), 0)
    assert render(t, y.names()) == "(α #0 γ)"
    counts = occurrence_counts(Compose(t, Boundary(t, 1, Sign.MINUS), 1))
    assert counts[y.cell_by_name("α").id] == 1


def test_rename_through_mapping():
    """Test renaming generators."""
    assert rename(Compose(Gen(1), Gen(2), 0), {1: 5, 2: 6}) == Compose(Gen(5), Gen(6), 0)
    assert rename(Compose(Gen(0), Gen(1), 0), [4, 3]) == Compose(Gen(4), Gen(3), 0)
    assert rename(Gen(1), (7, 8)) == Gen(8)
    assert rename(Gen(2), lambda x: x + 1) == Gen(3)


def test_builder_infers_dimensions():
    """Test PolygraphBuilder dimension inference."""
    b = PolygraphBuilder()
    x, y = b.add("x"), b.add("y")
    f = b.add("f", Gen(x), Gen(y))
    p = b.build()
    assert p.grades() == (2, 1)
    assert p.dim_of(f) == 1
    assert p.cell_by_name("f").id == f


def test_polygraph_lookups():
    """Test lookups on the counterexample polygraph."""
    y = ce1_Y()
    assert y.grades() == (3, 4, 4, 1)
    assert y.dim == 3
    assert len(y.cells_of_dim(2)) == 4
    with pytest.raises(NotACell):
        y.cell(999)
    with pytest.raises(NotACell):
        y.cell_by_name("nope")


def test_duplicate_ids_rejected():
    """Test that two cells cannot share an id."""
    with pytest.raises(ValueError):
        Polygraph([Cell(0, 0), Cell(0, 0)])


def test_polygraph_dict_round_trip():
    """Test that to_dict and from_dict agree on a fixture polygraph."""
    y = ce1_Y()
    assert Polygraph.from_dict(y.to_dict()) == y


def test_restrict_keeps_ids():
    """Test restriction to a set of cells."""
    d = globe(2)
    s = d.restrict([c.id for c in d if c.dim < 2])
    assert s.grades() == (2, 2)
    assert set(s.ids) <= set(d.ids)


def test_normalize_drops_units():
    """Test that composing with a lower-dimensional arrow is a unit."""
    d = globe(1)
    top = d.gen("1")
    assert normalize(d, Compose(d.gen("0-"), top, 0)) == top
    assert normalize(d, Boundary(top, 0, Sign.PLUS)) == d.gen("0+")


def test_boundary_of_globe():
    """Test iterated boundaries of the top cell of D2."""
    d = globe(2)
    top = d.gen("2")
    assert boundary(d, top, 1, Sign.MINUS) == d.gen("1-")
    assert boundary(d, top, 0, Sign.PLUS) == d.gen("0+")
    assert boundary(d, top, 5, Sign.PLUS) == top
    with pytest.raises(ValueError):
        boundary(d, top, -1, Sign.PLUS)


def test_boundary_of_horizontal_composite():
    """Test the 1-source of a horizontal composite."""
    y = ce1_Y()
    t = Compose(y.gen("α"), y.gen("γ"), 0)
    assert boundary(y, t, 1, Sign.MINUS) == Compose(y.gen("f"), y.gen("h"), 0)
    assert dimension(y, t) == 2


def test_compose_checks_boundaries():
    """Test that compose refuses mismatched boundaries."""
    y = ce1_Y()
    assert compose(y, y.gen("f"), y.gen("h"), 0) == Compose(y.gen("f"), y.gen("h"), 0)
    with pytest.raises(BoundaryMismatch):
        compose(y, y.gen("f"), y.gen("f"), 0)


def test_arrows_equal_on_positive():
    """Test arrow equality on the counterexample polygraph."""
    y = ce1_Y()
    assert is_positive(y)
    t = Compose(y.gen("α"), y.gen("γ"), 0)
    assert arrows_equal(y, t, t)
    assert not arrows_equal(y, t, Compose(y.gen("β"), y.gen("ε"), 0))


def test_arrows_equal_needs_positivity():
    """Test that a cell with an identity source makes the polygraph non-positive."""
    b = PolygraphBuilder()
    x = b.add("x")
    f = b.add("f", Gen(x), Gen(x))
    b.add("α", Gen(x), Gen(f), dim=2)
    p = b.build()
    assert not is_positive(p)
    with pytest.raises(UnsupportedClass):
        arrows_equal(p, Gen(f), Gen(f))


def test_validate_accepts_globes():
    """Test that globes are well formed regular polygraphs."""
    for n in range(4):
        assert validate(globe(n)).ok


def test_validate_reports_unknown_reference():
    """Test that dangling references are reported."""
    p = Polygraph([Cell(0, 0, name="x"), Cell(1, 1, Gen(0), Gen(5), "f")])
    report = validate(p)
    assert not report.ok
    assert "f references unknown cell 5" in report.issues


def test_validate_reports_non_spherical_plex():
    """Test that the regular tag rejects the counterexample 3-cell."""
    report = validate(ce1_Y().with_class(ClassTag.REGULAR))
    assert report.issues == ["plex Ω lacks spherical boundary"]
    assert validate(ce1_Y()).ok


def test_identify_cells():
    """Test the quotient identifying two 0-cells."""
    q, f = ce1_collapse()
    assert q.grades() == (2, 4, 4, 1)
    assert f.is_polygraphic()
    assert not f.is_mono()
    y = ce1_Y()
    with pytest.raises(ValueError):
        identify_cells(y, [(y.cell_by_name("x").id, y.cell_by_name("f").id)])


def test_identity_morphism():
    """Test the identity morphism."""
    d = globe(2)
    i = identity_morphism(d)
    assert i.is_bijective()
    assert eval_morphism(i, d.gen("2")) == d.gen("2")
    assert check_morphism(i) == []


def test_non_polygraphic_morphism():
    """Test a morphism sending a cell to a composite."""
    lam = ce2_lambda()
    assert check_morphism(lam) == []
    assert not lam.is_polygraphic()
    with pytest.raises(ValueError):
        lam.cell_map()
    x = ce2_X()
    assert lam(x.gen("f")) == Compose(lam.codomain.gen("g"), lam.codomain.gen("h"), 0)


def test_morphism_requires_every_image():
    """Test that a morphism needs an image for every cell."""
    with pytest.raises(ValueError):
        PolygraphMorphism(globe(1), globe(1), {0: Gen(0)})


def test_compose_morphisms_through_quotient():
    """Test composing a morphism with a quotient."""
    y = ce1_Y()
    q, f = ce1_collapse()
    g = compose_morphisms(identity_morphism(y), f)
    assert g.codomain is q
    assert g.image(y.cell_by_name("y").id) == Gen(y.cell_by_name("x").id)


def test_check_morphism_reports_wrong_boundary():
    """Test that a morphism breaking boundaries is reported."""
    d1 = globe(1)
    images = {c.id: Gen(c.id) for c in d1}
    images[d1.cell_by_name("0-").id] = d1.gen("0+")
    issues = check_morphism(PolygraphMorphism(d1, d1, images))
    assert issues == ["image of 1 does not respect its source"]


def test_pushout_glues_two_intervals():
    """Test gluing two intervals end to end."""
    d0, d1 = globe(0), globe(1)
    i = PolygraphMorphism.from_cell_map(d0, d1, {0: d1.cell_by_name("0+").id})
    j = PolygraphMorphism.from_cell_map(d0, d1, {0: d1.cell_by_name("0-").id})
    result = pushout(i, j)
    assert result.polygraph.grades() == (3, 2)
    assert result.left.domain == d1
    assert result.right.is_mono()


def test_disjoint_union():
    """Test the disjoint union of two globes."""
    union, left, right = disjoint_union(globe(1), globe(2))
    assert union.grades() == (4, 3, 1)
    assert len(set(left.values()) & set(right.values())) == 0


def test_sub_lattice():
    """Test union and intersection of sub-polygraphs."""
    d = globe(1)
    a = SubPolygraph.of(d, [d.cell_by_name("0-").id])
    b = SubPolygraph.of(d, [d.cell_by_name("0+").id])
    lattice = sub_lattice(a, b)
    assert len(lattice.union) == 2
    assert len(lattice.intersection) == 0


def test_sub_lattice_rejects_open_sets():
    """Test that a non-closed intersection is reported."""
    d = globe(1)
    top = d.cell_by_name("1").id
    a = SubPolygraph.of(d, [d.cell_by_name("0-").id, top])
    b = SubPolygraph.of(d, [d.cell_by_name("0+").id, top])
    with pytest.raises(ClosureViolation):
        sub_lattice(a, b)
