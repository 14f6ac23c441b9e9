"""Tests for realizations, homology, horns and anodyne extensions."""

from concurrent.futures import ThreadPoolExecutor

import pytest
from sympy import Matrix

from ppx.core.morphism import identity_morphism
from ppx.core.polygraph import ClassTag, SubPolygraph
from ppx.core.terms import Sign
from ppx.errors import NotACell, PreconditionFailed, UnsupportedClass
from ppx.fixtures.examples import ce1_Y
from ppx.homotopy import realization
from ppx.homotopy.anodyne import (
    anodyne_steps,
    boundary_occurrences,
    cylinder_Dprime,
    cylinder_Dprime_base,
    cylinder_end,
    cylinder_relative,
    generating_cofibration,
    horn,
    horns,
    occurs_once,
    pushout_product,
    recognize_anodyne_pushout,
)
from ppx.homotopy.homology import (
    HomologyGroup,
    boundary_matrix,
    euler_characteristic,
    homology,
    is_acyclic,
    reduced_homology,
)
from ppx.homotopy.realization import (
    SemiSimplicialSet,
    check_mono,
    disjoint_union,
    horn_simplex,
    is_levelwise_injective,
    orientals_embed,
    realize,
    realize_morphism,
    simplex,
    simplex_boundary,
)
from ppx.polyplex.classify import classify_cell
from ppx.polyplex.polyplex import Polyplex
from ppx.polyplex.shape import REGISTRY
from ppx.steiner.construct import globe, oriental


def _projective_line():
    """One vertex, two loops e and x, and 2-simplices with boundaries 2e - x and x."""
    return SemiSimplicialSet(
        [["v"], ["e", "x"], ["s", "t"]],
        [[()], [(0, 0), (0, 0)], [(0, 1, 0), (1, 1, 1)]],
    )


def test_realize_small_globes(expected):
    """Test simplex counts of the realizations of D0 and D1."""
    assert list(realize(globe(0)).counts) == expected["realization"]["d0_counts"]
    assert list(realize(globe(1)).counts) == expected["realization"]["d1_counts"]


def test_realize_disk():
    """Test the realization of D2 is an acyclic disk."""
    r = realize(globe(2))
    assert r.counts == (5, 8, 4)
    assert r.violations() == []
    assert euler_characteristic(r) == 1
    assert is_acyclic(r)


def test_realize_from_threads():
    """Test that concurrent realizations share one memo of plex cells."""
    with ThreadPoolExecutor(max_workers=4) as pool:
        counts = list(pool.map(lambda _: realize(globe(2)).counts, range(8)))
    assert counts == [(5, 8, 4)] * 8
    assert REGISTRY.memo("plex_cells")
    assert not hasattr(realization, "_PLEX_MEMO")


def test_realize_needs_regularity():
    """Test that non-regular polygraphs are refused."""
    with pytest.raises(UnsupportedClass):
        realize(ce1_Y())


def test_triangle_boundary_homology(catalog, expected):
    """Test the homology of the boundary of a triangle, both ways."""
    o = oriental(2)
    circle = realize(o.restrict((c.id for c in o if c.dim < 2), ClassTag.REGULAR))
    want = expected["realization"]["triangle_boundary_homology"]
    assert [g.to_dict() for g in homology(circle, max_deg=1)] == want
    fixture = catalog.simplicial("triangle_boundary")
    assert [g.to_dict() for g in homology(fixture, max_deg=1)] == want
    assert not is_acyclic(fixture)


def test_simplices_and_horns():
    """Test the standard simplices, boundaries and horns."""
    assert simplex(2).counts == (3, 3, 1)
    assert is_acyclic(simplex(3))
    assert [str(g) for g in homology(simplex_boundary(2))] == ["Z", "Z"]
    assert is_acyclic(horn_simplex(2, 1))
    assert horn_simplex(2, 1).counts == (3, 2)
    with pytest.raises(ValueError):
        horn_simplex(2, 3)
    with pytest.raises(ValueError):
        simplex_boundary(0)


def test_torsion_is_detected():
    """Test a complex with a Z/2 in degree one."""
    s = _projective_line()
    assert s.violations() == []
    groups = homology(s)
    assert [str(g) for g in groups] == ["Z", "Z/2", "0"]
    assert reduced_homology(s)[0].is_trivial()
    assert not is_acyclic(s)


def test_boundary_matrix_of_edge():
    """Test the alternating face signs."""
    assert boundary_matrix(simplex(1), 1) == Matrix([[-1], [1]])


def test_homology_group_rendering():
    """Test the display of abelian groups."""
    assert str(HomologyGroup(0)) == "0"
    assert str(HomologyGroup(1)) == "Z"
    assert str(HomologyGroup(2, (2, 3))) == "Z^2 + Z/2 + Z/3"
    assert HomologyGroup(0, (4,)).to_dict() == {"rank": 0, "torsion": [4]}


def test_semi_simplicial_validation():
    """Test malformed face tables."""
    with pytest.raises(ValueError):
        SemiSimplicialSet([["a"]], [])
    with pytest.raises(ValueError):
        SemiSimplicialSet([["a"], ["e"]], [[()], [(0,)]])
    bad = {"simplices": [["a", "b"], ["e"], ["s"]], "faces": [[[], []], [[0, 1]], [[0, 0, 0]]]}
    with pytest.raises(ValueError):
        SemiSimplicialSet.from_dict(bad)


def test_semi_simplicial_dict_round_trip(catalog):
    """Test the JSON form of a fixture."""
    s = catalog.simplicial("two_triangles")
    again = SemiSimplicialSet.from_dict(s.to_dict())
    assert again.counts == s.counts == (4, 5, 2)
    assert again.faces == s.faces


def test_disjoint_union_counts():
    """Test that coproducts add counts."""
    u = disjoint_union(simplex(2), simplex(1))
    assert u.counts == (5, 4, 1)
    assert u.violations() == []
    assert homology(u)[0].rank == 2


def test_orientals_embed_fixtures(catalog, expected):
    """Test the colimit of orientals over the shipped simplicial sets."""
    grades = expected["realization"]
    assert list(orientals_embed(catalog.simplicial("two_triangles")).grades()) == grades["two_triangles_embed_grades"]
    assert list(orientals_embed(catalog.simplicial("triangle_boundary")).grades()) == grades[
        "triangle_boundary_embed_grades"
    ]


def test_orientals_embed_simplex():
    """Test that a simplex goes to its oriental."""
    x = orientals_embed(simplex(2))
    assert x.grades() == oriental(2).grades()
    assert is_acyclic(realize(x))


def test_realize_identity_and_mono():
    """Test the realization of morphisms."""
    d = globe(1)
    assert realize_morphism(identity_morphism(d)) == [(0, 1, 2), (0, 1)]
    top = globe(2).cell_by_name("2").id
    pp = Polyplex.of(classify_cell(globe(2), top).shape)
    inclusion = pp.boundary(1, Sign.MINUS)[1]
    maps = check_mono(inclusion)
    assert [len(m) for m in maps] == [3, 2]
    assert is_levelwise_injective(maps)
    assert not is_levelwise_injective([(0, 0)])


def test_occurrences_in_globe():
    """Test boundary occurrences in the top cell of D2."""
    d = globe(2)
    top = d.cell_by_name("2").id
    assert boundary_occurrences(d, top, d.cell_by_name("1-").id) == (1, 0)
    assert occurs_once(d, top, d.cell_by_name("1+").id)
    assert not occurs_once(d, top, d.cell_by_name("0-").id)
    assert boundary_occurrences(d, d.cell_by_name("0-").id, top) == (0, 0)


def test_horns_of_globe():
    """Test the horn inclusions of D1 and D2."""
    d = globe(2)
    assert len(horns(globe(1))) == 2
    assert horns(globe(0)) == []
    h = horn(d, "1-")
    assert h.missing == frozenset({d.cell_by_name("1-").id, d.cell_by_name("2").id})
    assert horn(globe(1), "0-").to_dict() == {"cell": "0-", "top": "1", "horn": ["0+"]}
    with pytest.raises(NotACell):
        horn(d, "0-")


def test_generating_cofibration():
    """Test the boundary inclusion of a plex."""
    sub = generating_cofibration(globe(2))
    assert len(sub) == 4
    assert len(generating_cofibration(globe(0))) == 0
    with pytest.raises(PreconditionFailed):
        generating_cofibration(globe(1).restrict([0, 1]))


def test_corner_of_intervals(expected):
    """Test the pushout product of the boundary and a horn of D1."""
    d = globe(1)
    sub = pushout_product(generating_cofibration(d), horn(d, "0-").inclusion)
    dims = sorted(sub.parent.dim_of(x) for x in sub.complement())
    assert dims == expected["anodyne"]["corner_missing_dims"]
    assert recognize_anodyne_pushout(sub)
    assert len(anodyne_steps(sub)) == 1


def test_d_prime_star_steps(expected):
    """Test the decomposition of the inclusion of the point into D'_*."""
    d = cylinder_Dprime()
    assert list(d.grades()) == expected["anodyne"]["d_prime_star_grades"]
    base = cylinder_Dprime_base()
    assert not recognize_anodyne_pushout(base)
    names = d.names()
    steps = anodyne_steps(base)
    assert [[names[s.cell], names[s.filler]] for s in steps] == expected["anodyne"]["d_prime_star_steps"]


def test_d_prime_star_fixture_matches(catalog):
    """Test that the shipped D'_* is the built one."""
    assert catalog.get("d_prime_star").polygraph == cylinder_Dprime()


def test_anodyne_steps_refuse_odd_extensions():
    """Test that an odd number of new cells has no decomposition."""
    d = globe(1)
    assert anodyne_steps(SubPolygraph.of(d, [d.cell_by_name("0-").id, d.cell_by_name("0+").id])) is None


def test_relative_cylinders():
    """Test the relative cylinders on D0 and D1."""
    for n, grades in ((0, (2, 1)), (1, (2, 2, 1))):
        cyl = cylinder_relative(globe(n))
        assert cyl.grades() == grades
        end = cylinder_end(cyl)
        assert recognize_anodyne_pushout(end)
        assert len(anodyne_steps(end)) == 1
