"""Tests for tensor products, cones, orientals and term extraction."""

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ppx.config import Bounds
from ppx.core.morphism import check_morphism
from ppx.core.terms import SIGNS, Compose, Gen, Sign
from ppx.errors import BoundExceeded, ExtractionFailed, NotSteinerRepresentable
from ppx.fixtures.examples import ce1_Y
from ppx.fixtures.randomized import random_chain_complex
from ppx.linearization.delta import delta_vector, pi_cell, sigma
from ppx.linearization.globular import GlobularGroup, globular_to_chain, linearize, to_double_sequence
from ppx.linearization.vectors import Vector
from ppx.polyplex.regularity import is_regular
from ppx.steiner.cone import ConeCell, ConeKind, cone_group
from ppx.steiner.construct import (
    build_cone,
    build_tensor,
    cone_polygraph,
    cube,
    globe,
    globe_arrow,
    globe_boundary,
    globe_to_tensor,
    oriental,
    oriental_cell,
    oriental_subsets,
    polygraph_from_group,
    subset_name,
    tensor_polygraph,
)
from ppx.steiner.extract import BasedComplex, based_complex, extract_term, extract_vector
from ppx.steiner.tensor import (
    BASE_POINT,
    Suspended,
    TensorCell,
    desuspend,
    join_group,
    reassociate,
    suspend,
    tensor_chain,
    tensor_globular,
    tensor_grades,
    tensor_pi,
    tensor_pi_symmetric,
    tensor_pi_vector,
    unit_group,
)
from tests.settings import QUICK_SETTINGS


def _join_to_cone(c):
    if c.right is None:
        return ConeCell.apex()
    if c.left is None:
        return ConeCell.base(c.right)
    return ConeCell.cone(c.right)


def test_globe_shapes():
    """Test globes and their boundaries."""
    assert globe(0).grades() == (1,)
    assert globe(3).grades() == (2, 2, 2, 1)
    assert globe_boundary(2).grades() == (2, 2)
    assert is_regular(globe(3))
    with pytest.raises(ValueError):
        globe(-1)


def test_interval_squared(expected):
    """Test the grades of the square D1 x D1."""
    d = globe(1)
    square = tensor_polygraph(d, d)
    assert list(square.grades()) == expected["tensor"]["d1_d1_grades"]
    assert "0-⊗1" in square.names().values()


def test_cube_grades(expected):
    """Test the cubes against their expected grades."""
    for n, grades in expected["tensor"]["cube_grades"].items():
        assert list(cube(int(n)).grades()) == grades
    with pytest.raises(BoundExceeded):
        cube(4, Bounds(max_oriental=3))


def test_tensor_grades_convolve():
    """Test that grades of a tensor are the convolution of the factors."""
    g, h = linearize(globe(1)), linearize(globe(2))
    assert tensor_grades(g, h) == (4, 6, 4, 1)
    assert tensor_globular(g, h).grade_counts() == (4, 6, 4, 1)


def test_tensor_projections_agree_on_square():
    """Test both expansions of the tensor projections on D1 x D1."""
    g = linearize(globe(1))
    for a in g.basis():
        for b in g.basis():
            for n in range(g.grades[a] + g.grades[b]):
                for sign in SIGNS:
                    assert tensor_pi(g, g, a, b, n, sign) == tensor_pi_symmetric(g, g, a, b, n, sign)


def test_square_source():
    """Test the 1-source of the square's top cell."""
    d = globe(1)
    g = linearize(d)
    lo, hi, top = (d.cell_by_name(x).id for x in ("0-", "0+", "1"))
    source = tensor_pi(g, g, top, top, 1, Sign.MINUS)
    assert source == Vector({TensorCell(lo, top): 1, TensorCell(top, hi): 1, TensorCell(lo, hi): -1})
    pair = Vector({TensorCell(top, top): 1, TensorCell(lo, top): 1})
    assert tensor_pi_vector(g, g, pair, 1, Sign.MINUS) == source + tensor_pi(g, g, lo, top, 1, Sign.MINUS)


def test_built_tensor_linearizes_to_product():
    """Test that the built square has the tensor projections and product sigma."""
    d = globe(1)
    res = build_tensor(d, d)
    g = linearize(d)
    keys = {i: key for key, i in res.cells.items()}
    for key, cid in res.cells.items():
        for k in range(res.polygraph.dim_of(cid)):
            for sign in SIGNS:
                got = pi_cell(res.polygraph, cid, k, sign).map_keys(keys.__getitem__)
                assert got == tensor_pi(g, g, key.left, key.right, k, sign)
    want = Vector((TensorCell(a, b), x * y) for a, x in sigma(d).items() for b, y in sigma(d).items())
    assert Vector((keys[i], c) for i, c in sigma(res.polygraph).items()) == want
    assert res.key_of(res.cells[TensorCell(0, 0)]) == TensorCell(0, 0)


def test_tensor_is_associative():
    """Test associativity on three intervals."""
    a = linearize(globe(1))
    left = tensor_globular(tensor_globular(a, a), a).rename(reassociate)
    right = tensor_globular(a, tensor_globular(a, a))
    assert left.same_as(right)


def test_tensor_is_unital():
    """Test the unit laws on D2."""
    g = linearize(globe(2))
    u = unit_group()
    assert tensor_globular(u, g).rename(lambda c: c.right).same_as(g)
    assert tensor_globular(g, u).rename(lambda c: c.left).same_as(g)


def test_tensor_chain_squares_to_zero():
    """Test the Koszul sign on the product of two intervals."""
    k = globular_to_chain(linearize(globe(1)))
    product = tensor_chain(k, k)
    assert product.violations() == []
    assert sorted(product.grades.values()) == [0, 0, 0, 0, 1, 1, 1, 1, 2]


@given(seed=st.integers(min_value=0, max_value=100_000))
@QUICK_SETTINGS
def test_random_tensor_chain_is_a_complex(seed):
    """Property: the tensor of random complexes is again a complex."""
    k = random_chain_complex(seed, max_grade=2, max_basis=3, augmented=True)
    m = random_chain_complex(seed + 1, max_grade=2, max_basis=3, augmented=True)
    assert tensor_chain(k, m).violations() == []


def test_globe_to_tensor_square():
    """Test the canonical map from D2 into the square."""
    f = globe_to_tensor(1, 1)
    assert f.preserves_sigma()
    assert f.preserves_alternate_positivity()
    assert len(f.images) == len(globe(2))


def test_suspension_round_trip():
    """Test that desuspension undoes suspension."""
    g = linearize(globe(2))
    s = suspend(g)
    assert s.grade_counts() == (1, 2, 2, 1)
    assert s.augmentation is None
    assert [b for b, n in s.grades.items() if n == 0] == [BASE_POINT]
    assert all(s.pi_basis(Suspended(b), 0, Sign.MINUS) == Vector() for b in g.grades)
    back = desuspend(s).rename(lambda c: c.cell)
    assert back.same_as(g)


def test_suspension_needs_augmentation():
    """Test the failure modes of suspension."""
    bare = GlobularGroup({"a": 0}, {})
    with pytest.raises(ValueError):
        suspend(bare)
    with pytest.raises(ValueError):
        desuspend(GlobularGroup({"a": 0, "b": 0}, {}))


def test_cone_on_point_is_join_with_unit():
    """Test that the cone on a point is the join of the unit with it."""
    g = linearize(globe(0))
    joined = join_group(unit_group(), g).rename(_join_to_cone)
    assert joined.same_as(cone_group(g))


def test_cone_on_interval():
    """Test the cone on D1."""
    g = linearize(globe(1))
    c = cone_group(g)
    assert c.grade_counts() == (3, 3, 1)
    assert c.relation_violations() == []
    assert join_group(unit_group(), g).grade_counts() == (3, 3, 1)
    assert cone_polygraph(globe(1)).grades() == (3, 3, 1)
    with pytest.raises(ValueError):
        cone_group(GlobularGroup({"a": 0}, {}))


def test_cone_names():
    """Test display names of cone cells."""
    res = build_cone(globe(1))
    assert res.cell(ConeCell.apex()).label == "*"
    top = globe(1).cell_by_name("1").id
    assert res.cell(ConeCell.cone(top)).label == "T1"
    assert res.cell(ConeCell.cone(top)).dim == 2
    assert ConeCell.cone(top).kind is ConeKind.T
    assert str(ConeCell.base(BASE_POINT)) == "pt"


def test_orientals_have_binomial_grades(expected):
    """Test the orientals against binomial coefficients."""
    for n in range(expected["orientals"]["max_n"] + 1):
        grades = list(oriental(n).grades())
        assert grades == [comb(n + 1, k + 1) for k in range(n + 1)]
        assert grades == expected["orientals"]["grades"][str(n)]


def test_oriental_names_and_bounds():
    """Test oriental cell names and the size bound."""
    assert oriental_subsets(2, 1) == ((0, 1), (0, 2), (1, 2))
    assert subset_name((0, 2, 3)) == "[0,2,3]"
    assert oriental_cell(2, (0, 1, 2)).dim == 2
    with pytest.raises(BoundExceeded):
        oriental(6)
    with pytest.raises(ValueError):
        oriental(-1)


def test_oriental_triangle_boundaries():
    """Test the source and target of the 2-simplex."""
    o = oriental(2)
    names = o.names()
    top = oriental_cell(2, (0, 1, 2)).id
    assert {names[x]: c for x, c in pi_cell(o, top, 1, Sign.MINUS).items()} == {"[0,2]": 1}
    assert {names[x]: c for x, c in pi_cell(o, top, 1, Sign.PLUS).items()} == {
        "[0,1]": 1,
        "[1,2]": 1,
        "[1]": -1,
    }


def test_globe_arrow_of_composite():
    """Test the globe picking a horizontal composite."""
    y = ce1_Y()
    f = globe_arrow(y, Compose(y.gen("α"), y.gen("γ"), 0))
    assert f.domain.grades() == (2, 2, 1)
    assert check_morphism(f) == []


def test_not_representable_group():
    """Test a group whose 1-cell has a doubled source."""
    bad = GlobularGroup(
        {"a": 0, "e": 1},
        {("e", 0, Sign.MINUS): Vector({"a": 2}), ("e", 0, Sign.PLUS): Vector({"a": 2})},
    )
    with pytest.raises(NotSteinerRepresentable):
        polygraph_from_group(bad)


def test_extract_generator():
    """Test that an atom is extracted as its cell."""
    d = globe(2)
    top = d.cell_by_name("2").id
    assert extract_vector(d, {top: 1}) == Gen(top)


def test_extract_horizontal_composite():
    """Test extraction of a composite along a 0-cell."""
    y = ce1_Y()
    t = Compose(y.gen("α"), y.gen("γ"), 0)
    v = delta_vector(y, t)
    term = extract_term(y, to_double_sequence(linearize(y), v))
    assert delta_vector(y, term) == v


def test_extract_rejects_negative_elements():
    """Test that negative elements are not arrows."""
    d = globe(1)
    top = d.cell_by_name("1").id
    with pytest.raises(ExtractionFailed):
        extract_vector(d, {top: -1})


def test_based_complex_atoms_agree():
    """Test the two descriptions of atoms on D2 and the 2-simplex."""
    for p in (globe(2), oriental(2)):
        k = based_complex(p)
        assert k.violations() == []
        assert k.atoms == BasedComplex.from_chain(k.chain).atoms
        assert k.globular().same_as(linearize(p))


def test_based_complex_dict_round_trip():
    """Test the dictionary form of a based complex."""
    data = based_complex(globe(2)).to_dict()
    k = BasedComplex.from_dict(data)
    assert k.violations() == []
    assert k.atoms == BasedComplex.from_chain(k.chain).atoms
    del data["atoms"]
    assert BasedComplex.from_dict(data).atoms == k.atoms
