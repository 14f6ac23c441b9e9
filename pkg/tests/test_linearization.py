"""Tests for delta, sigma, the m-basis and globular groups."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ppx.core.algebra import boundary, dimension
from ppx.core.polygraph import SubPolygraph
from ppx.core.terms import SIGNS, Compose, Sign, occurrence_counts
from ppx.errors import BasisMismatch, GlobularRelationViolated, HypothesisFailed
from ppx.fixtures.examples import ce1_Y, ce2_lambda, ce2_lambda_prime
from ppx.fixtures.randomized import random_chain_complex, random_terms
from ppx.linearization.delta import (
    PositivityMode,
    apply_functor,
    closure_check,
    delta,
    delta_vector,
    from_m_basis,
    image_subpolygraph,
    in_subpolygraph,
    makkai_leq,
    pi_linear,
    positivity,
    preserves_alternate_positivity,
    preserves_sigma,
    sigma,
    to_m_basis,
)
from ppx.linearization.globular import (
    ChainComplex,
    DoubleSequence,
    GlobularGroup,
    chain_to_globular,
    from_double_sequence,
    globular_to_chain,
    linearize,
    pi_double_sequence,
    to_double_sequence,
)
from ppx.linearization.lincomb import Basis, LinComb
from ppx.linearization.vectors import Vector, basis_vector
from ppx.steiner.construct import globe, oriental
from tests.settings import QUICK_SETTINGS, SLOW_SETTINGS


def _named(v):
    names = v.polygraph.names()
    return {names[x]: c for x, c in v.items()}


def test_vector_cancels_zeros():
    """Test that vectors drop zero coefficients."""
    v = Vector({"a": 1, "b": 2}) - Vector({"a": 1})
    assert v == {"b": 2}
    assert v["a"] == 0
    assert (v * 0) == {}
    assert basis_vector("c", 3).map_keys(str.upper) == {"C": 3}


def test_delta_of_generator():
    """Test that delta of a cell is its basis vector."""
    d = globe(2)
    assert _named(delta(d, d.gen("2"))) == {"2": 1}


def test_delta_of_horizontal_composite():
    """Test delta on a composite along a 0-cell."""
    y = ce1_Y()
    t = Compose(y.gen("α"), y.gen("γ"), 0)
    assert _named(delta(y, t)) == {"y": -1, "α": 1, "γ": 1}


def test_delta_counts_top_cells():
    """Test that top-dimensional coefficients count occurrences."""
    y = ce1_Y()
    t = Compose(Compose(y.gen("α"), y.gen("γ"), 0), y.gen("Ω"), 2)
    d = delta_vector(y, t)
    occ = occurrence_counts(t)
    assert d[y.cell_by_name("Ω").id] == occ[y.cell_by_name("Ω").id] == 1


def test_sigma_render():
    """Test sigma of the interval and its rendering."""
    d = globe(1)
    assert sigma(d).render() == "0- + 0+ - 1"


def test_m_basis_of_globe():
    """Test m-coordinates of the top cell of D2."""
    d = globe(2)
    m = to_m_basis(delta(d, d.gen("2")))
    assert m.basis is Basis.M
    assert _named(m) == {"0-": 2, "0+": 2, "1-": 1, "1+": 1, "2": 1}
    assert from_m_basis(m) == delta(d, d.gen("2"))


def test_positivity_modes():
    """Test Makkai and alternate positivity."""
    d = globe(1)
    assert positivity(delta(d, d.gen("1")))
    assert positivity(sigma(d), PositivityMode.ALTERNATE)
    assert not positivity(delta(d, d.gen("1")), "alternate")
    assert not positivity(-delta(d, d.gen("0-")))


def test_makkai_order_on_boundaries():
    """Test that boundaries lie below the arrow in the Makkai order."""
    d = globe(2)
    top = delta(d, d.gen("2"))
    for sign in SIGNS:
        face = delta(d, boundary(d, d.gen("2"), 1, sign))
        assert makkai_leq(face, top)
        assert not makkai_leq(top, face)


def test_pi_linear_accepts_m_basis():
    """Test that pi converts m-coordinates first."""
    d = globe(2)
    v = delta(d, d.gen("2"))
    assert pi_linear(to_m_basis(v), 1, Sign.MINUS) == pi_linear(v, 1, Sign.MINUS)
    assert _named(pi_linear(v, 0, Sign.PLUS)) == {"0+": 1}


def test_lincomb_mixing_bases_fails():
    """Test that coordinates in different bases cannot be added."""
    d = globe(1)
    v = delta(d, d.gen("1"))
    with pytest.raises(BasisMismatch):
        v + to_m_basis(v)
    with pytest.raises(ValueError):
        LinComb.of(d, {42: 1})


def test_lincomb_by_name():
    """Test building combinations by cell names."""
    d = globe(1)
    v = LinComb.by_name(d, {"1": 2, "0-": -1})
    assert v.coefficient_of("1") == 2
    assert v.render() == "-0- + 21"
    assert LinComb.from_dict(d, v.to_dict()) == v


def test_closure_and_membership():
    """Test the linear tests for sub-polygraphs."""
    d = globe(1)
    top = d.cell_by_name("1").id
    ok, issues = closure_check(SubPolygraph.of(d, [top]))
    assert not ok
    assert issues == ["source of 1 uses cells outside: 0-", "target of 1 uses cells outside: 0+"]
    assert in_subpolygraph(d, d.gen("1"), SubPolygraph.full(d))
    assert not in_subpolygraph(d, d.gen("1"), SubPolygraph.of(d, [d.cell_by_name("0-").id]))


def test_sigma_defect_of_lambda():
    """Test the sigma defect of the loop morphism."""
    lam = ce2_lambda()
    assert _named(apply_functor(lam, sigma(lam.domain)) - sigma(lam.codomain)) == {"t": -1}
    assert not preserves_sigma(lam)
    assert preserves_sigma(ce2_lambda_prime())


def test_image_subpolygraph_checks_hypotheses():
    """Test that image_subpolygraph refuses morphisms off sigma."""
    lam = ce2_lambda()
    with pytest.raises(HypothesisFailed):
        image_subpolygraph(lam, SubPolygraph.full(lam.domain))
    image = image_subpolygraph(lam, SubPolygraph.full(lam.domain), check=False)
    assert image.members == frozenset(lam.codomain.ids)


def test_alternate_positivity_of_lambda_prime():
    """Test that the 2-cell of the loop picks up a negative 0-cell."""
    assert not preserves_alternate_positivity(ce2_lambda_prime())


def test_linearize_globe():
    """Test the globular group of D2."""
    g = linearize(globe(2))
    assert g.grade_counts() == (2, 2, 1)
    assert g.relation_violations() == []
    chain = globular_to_chain(g)
    assert chain.violations() == []
    top = globe(2).cell_by_name("2").id
    assert chain.boundary({top: 1}) == {
        globe(2).cell_by_name("1+").id: 1,
        globe(2).cell_by_name("1-").id: -1,
    }


def test_globular_group_requires_projections():
    """Test that missing projections are rejected."""
    with pytest.raises(ValueError):
        GlobularGroup({"a": 0, "b": 1}, {})


def test_globular_relations_are_checked():
    """Test that a broken projection table is reported."""
    bad = GlobularGroup(
        {"a": 0, "b": 1},
        {("b", 0, Sign.MINUS): {"b": 1}, ("b", 0, Sign.PLUS): {"a": 1}},
    )
    assert bad.relation_violations()
    with pytest.raises(GlobularRelationViolated):
        bad.check()


def test_chain_complex_dict_round_trip():
    """Test the matrix form of a chain complex."""
    k = ChainComplex({"a": 0, "b": 0, "e": 1}, {"e": Vector({"b": 1, "a": -1})}, {"a": 1, "b": 1})
    assert k.violations() == []
    assert k.matrix(1) == [[-1], [1]]
    assert ChainComplex.from_dict(k.to_dict()).same_as(k)


def test_chain_complex_rejects_negative_degrees():
    """Test that chain complexes live in nonnegative degrees."""
    with pytest.raises(ValueError):
        ChainComplex({"a": -1})


def test_double_sequence_of_globe():
    """Test the double sequence of the top cell of D1."""
    d = globe(1)
    g = linearize(d)
    ids = {c.label: c.id for c in d}
    seq = to_double_sequence(g, {ids["1"]: 1})
    assert seq.minus(0) == {ids["0-"]: 1}
    assert seq.plus(0) == {ids["0+"]: 1}
    assert seq.minus(1) == seq.plus(1) == {ids["1"]: 1}
    assert seq.violations(globular_to_chain(g)) == []
    assert from_double_sequence(g, seq) == {ids["1"]: 1}
    assert pi_double_sequence(seq, 0, Sign.PLUS) == DoubleSequence.of([({ids["0+"]: 1}, {ids["0+"]: 1})])


def test_double_sequence_drops_trailing_zeros():
    """Test that trailing zero pairs are not stored."""
    seq = DoubleSequence.of([({"a": 1}, {"a": 1}), ({}, {})])
    assert seq.length == 1
    assert (seq - seq).length == 0


@given(seed=st.integers(min_value=0, max_value=100_000), augmented=st.booleans())
@QUICK_SETTINGS
def test_random_complex_round_trip(seed, augmented):
    """Property: chain complexes survive the trip through globular groups."""
    k = random_chain_complex(seed, augmented=augmented)
    assert k.violations() == []
    g = chain_to_globular(k)
    assert g.relation_violations() == []
    assert globular_to_chain(g).same_as(k)
    for b in g.basis():
        seq = to_double_sequence(g, {b: 1})
        assert seq.violations(k) == []
        assert from_double_sequence(g, seq) == basis_vector(b)


@given(seed=st.integers(min_value=0, max_value=100_000))
@SLOW_SETTINGS
def test_random_terms_count_and_positivity(seed):
    """Property: delta counts top cells and has nonnegative m-coordinates."""
    p = oriental(2)
    for t in random_terms(p, 12, seed):
        n = dimension(p, t)
        d = delta_vector(p, t)
        occ = occurrence_counts(t)
        assert all(d[c.id] == occ[c.id] for c in p.cells_of_dim(n))
        assert positivity(delta(p, t))
