"""Tests for classification, sphericity, generic morphisms and enumeration."""

import pytest

from ppx.config import Bounds
from ppx.core.algebra import arrows_equal, normalize
from ppx.core.morphism import identity_morphism
from ppx.core.polygraph import PolygraphBuilder
from ppx.core.terms import Compose, Gen, Sign
from ppx.core.validation import validate
from ppx.errors import BoundExceeded, DecompositionMismatch, PreconditionFailed, UnsupportedClass
from ppx.fixtures.examples import ce1_X, ce1_Y, ce1_Y_prime, ce2_lambda, ce2_lambda_prime
from ppx.linearization.delta import sigma
from ppx.polyplex import shape as shapes
from ppx.polyplex.classify import classify, classify_cell
from ppx.polyplex.collapse import OwnerKind, collapse_single_top, inner_owner
from ppx.polyplex.enumerate import EnumerationKind, enumerate_polyplexes, occurrences
from ppx.polyplex.generic import generic_factorization, is_generic, syntactic_lift
from ppx.polyplex.polyplex import Polyplex, boundary_polyplex, polyplex_compose
from ppx.polyplex.regularity import (
    has_spherical_boundary,
    is_plex,
    is_polyplex,
    is_regular,
    is_regular_arrow,
    is_regular_morphism,
    non_spherical_cells,
    sigma_image,
)
from ppx.steiner.construct import globe, globe_arrow


def _globe_polyplex(n):
    d = globe(n)
    return Polyplex.of(classify_cell(d, d.cell_by_name(str(n)).id).shape)


def test_classify_globe_cells():
    """Test that the plex of a globe's top cell is the globe."""
    pp = _globe_polyplex(2)
    assert pp.is_plex()
    assert pp.shape.grades() == (2, 2, 1)
    assert pp.underlying.names()[0] == "c0"


def test_classify_labels_back_into_polygraph():
    """Test that the labelling morphism lands on the right cells."""
    y = ce1_Y()
    arrow = classify(y, Compose(y.gen("α"), y.gen("γ"), 0))
    assert arrow.polyplex.size == 9
    assert arrow.shape.grades() == (3, 4, 2)
    labels = {y.cell(i).label for i in arrow.label.cell_map().values()}
    assert labels == {"x", "y", "z", "f", "g", "h", "k", "α", "γ"}


def test_interchange_gives_the_same_arrow():
    """Test that whiskered composites equal the horizontal composite."""
    y = ce1_Y()
    horizontal = Compose(y.gen("α"), y.gen("γ"), 0)
    whiskered = Compose(
        Compose(y.gen("α"), y.gen("h"), 0),
        Compose(y.gen("g"), y.gen("γ"), 0),
        1,
    )
    assert normalize(y, horizontal) != normalize(y, whiskered)
    assert arrows_equal(y, horizontal, whiskered)


def test_classify_rejects_identity_boundaries():
    """Test classification of a cell with an identity source."""
    b = PolygraphBuilder()
    x = b.add("x")
    f = b.add("f", Gen(x), Gen(x))
    alpha = b.add("α", Gen(x), Gen(f), dim=2)
    with pytest.raises(UnsupportedClass):
        classify_cell(b.build(), alpha)


def test_shape_boundaries_are_interned():
    """Test that boundaries of globes are shared shapes."""
    d2 = _globe_polyplex(2).shape
    assert shapes.boundary(d2, 0, Sign.MINUS)[0] is shapes.point()
    assert shapes.boundary(d2, 1, Sign.PLUS)[0] is _globe_polyplex(1).shape
    assert shapes.boundary(d2, 3, Sign.PLUS)[0] is d2


def test_composed_shapes_materialize():
    """Test gluing globe shapes along dimensions 0 and 1."""
    d1 = _globe_polyplex(1).shape
    d2 = _globe_polyplex(2).shape
    path, _, _ = shapes.compose(d1, d1, 0)
    p = shapes.materialize(path)
    assert p.grades() == (3, 2)
    assert validate(p).ok
    whiskered, _, _ = shapes.compose(d2, d1, 0)
    assert shapes.materialize(whiskered).grades() == (3, 3, 1)
    vertical, _, _ = shapes.compose(d2, d2, 1)
    assert shapes.materialize(vertical).grades() == (2, 3, 2)
    assert not vertical.is_plex()


def test_polyplex_boundary_and_compose():
    """Test polyplex boundaries and gluing."""
    d1 = _globe_polyplex(1)
    inner, inclusion = _globe_polyplex(2).boundary(1, Sign.MINUS)
    assert inner is d1
    assert boundary_polyplex(_globe_polyplex(2), 1, Sign.MINUS) == (inner, inclusion)
    assert inclusion.is_mono()
    assert d1.boundary(4, Sign.PLUS)[0] is d1
    path, left, right = polyplex_compose(d1, d1, 0)
    assert path.size == 5
    assert not path.is_plex()
    assert path.to_dict()["kind"] == "polyplex"
    assert left.is_mono() and right.is_mono()


def test_sigma_defect_of_non_regular_cell(expected):
    """Test the sigma defect on the non-regular 3-cell."""
    y = ce1_Y()
    names = y.names()
    defect = sigma_image(y, y.gen("Ω")) - sigma(y)
    assert {names[x]: c for x, c in defect.items()} == expected["ce1"]["sigma_defect"]


def test_non_spherical_cells(expected):
    """Test which plexes lack spherical boundary."""
    y = ce1_Y()
    assert [c.label for c in non_spherical_cells(y)] == expected["ce1"]["non_spherical"]
    assert not is_regular(y)
    assert is_regular(globe(3))


def test_sigma_criterion_needs_regularity():
    """Test that the sigma test refuses non-regular polygraphs."""
    y = ce1_Y()
    with pytest.raises(UnsupportedClass):
        is_polyplex(y, y.gen("Ω"))


def test_composite_is_polyplex(expected):
    """Test the sigma criterion on the horizontal composite."""
    x, arrow = ce1_X()
    assert len(x) == expected["ce1"]["ce1_X_cells"]
    assert is_polyplex(x, arrow)
    assert not is_plex(x, arrow)
    assert is_plex(globe(2), globe(2).gen("2"))


def test_enumeration_small_counts():
    """Test enumeration at the smallest sizes."""
    assert len(list(enumerate_polyplexes(1, 3))) == 2
    assert len(list(enumerate_polyplexes(1, 5))) == 3
    assert len(list(enumerate_polyplexes(2, 5))) == 4
    assert len(list(enumerate_polyplexes(2, 5, EnumerationKind.PLEX))) == 3
    assert len(list(enumerate_polyplexes(2, 5, "spherical-polyplex"))) == 4


def test_enumeration_is_sorted_and_unique():
    """Test that enumerated polyplexes are distinct and ordered."""
    found = list(enumerate_polyplexes(2, 8))
    assert found[0].shape is shapes.point()
    keys = [(pp.dim, pp.size, pp.digest) for pp in found]
    assert keys == sorted(keys)
    assert len({pp.digest for pp in found}) == len(found)
    assert all(has_spherical_boundary(pp) for pp in found if pp.is_plex())


def test_enumeration_respects_bounds():
    """Test that enumeration refuses requests past the bounds."""
    with pytest.raises(BoundExceeded):
        list(enumerate_polyplexes(5, 4))
    with pytest.raises(BoundExceeded):
        list(enumerate_polyplexes(1, 4, bounds=Bounds(max_cells=3)))


def test_enumerated_polyplexes_pass_sigma_test():
    """Test soundness of the sigma test on enumerated polyplexes."""
    for pp in enumerate_polyplexes(2, 8):
        if is_regular(pp.underlying):
            assert is_polyplex(pp.underlying, pp.universal)


def test_occurrences_of_interval():
    """Test the occurrences of the interval in the counterexample."""
    found = occurrences(_globe_polyplex(1).shape, ce1_Y())
    assert len(found) == 4


def test_inner_owner_on_globe():
    """Test ownership of the lower cells of D2."""
    pp = _globe_polyplex(2)
    top = pp.shape.top_cells()[0]
    kinds = []
    for x, cell in enumerate(pp.shape.cells):
        if cell.dim < 2:
            own = inner_owner(pp, x)
            assert own.exclusive
            kinds.append(own.kind)
    assert kinds.count(OwnerKind.INNER_OF_TARGET) == 1
    assert kinds.count(OwnerKind.SOURCE) == 3
    with pytest.raises(PreconditionFailed):
        inner_owner(pp, top)


def test_collapse_single_top():
    """Test collapsing the top cell of globes."""
    assert collapse_single_top(_globe_polyplex(2)) is _globe_polyplex(1)
    assert collapse_single_top(_globe_polyplex(1)).shape is shapes.point()
    path = polyplex_compose(_globe_polyplex(1), _globe_polyplex(1), 0)[0]
    with pytest.raises(PreconditionFailed):
        collapse_single_top(path)


def test_generic_identity():
    """Test that identities are generic."""
    assert is_generic(identity_morphism(globe(2)))
    assert is_regular_morphism(identity_morphism(globe(2)))
    assert is_regular_arrow(globe(2), globe(2).gen("2"))


def test_lambda_is_generic_but_not_regular(expected):
    """Test the loop morphism against its expected genericity."""
    assert is_generic(ce2_lambda()) is expected["ce2"]["lambda_generic"]
    assert is_regular_morphism(ce2_lambda()) is expected["ce2"]["lambda_regular"]
    factorization = generic_factorization(ce2_lambda())
    assert factorization.middle.grades() == (2, 2, 2)
    assert factorization.polygraphic.is_bijective()


def test_lambda_prime_is_not_generic(expected):
    """Test the collapsed loop morphism."""
    assert is_generic(ce2_lambda_prime()) is expected["ce2"]["lambda_prime_generic"]
    factorization = generic_factorization(ce2_lambda_prime())
    assert not factorization.polygraphic.is_bijective()
    assert factorization.polygraphic.is_polygraphic()


def test_collapsed_three_cell_is_not_generic():
    """Test that gluing the inner 0-cell rebuilds the uncollapsed polygraph."""
    y = ce1_Y_prime()
    omega = y.gen("Ω")
    assert sigma_image(y, omega) == sigma(y)
    f = globe_arrow(y, omega)
    factorization = generic_factorization(f)
    assert factorization.middle.grades() == ce1_Y().grades()
    assert factorization.polygraphic.is_polygraphic()
    assert not factorization.polygraphic.is_bijective()
    assert is_generic(f) is False


def test_polygraphic_morphism_factors_trivially():
    """Test that a polygraphic morphism has an identity generic part."""
    f = identity_morphism(ce1_Y())
    factorization = generic_factorization(f)
    assert factorization.generic.is_bijective()
    assert factorization.polygraphic is f


def test_syntactic_lift():
    """Test lifting a horizontal decomposition along an identity."""
    y = ce1_Y()
    f = identity_morphism(y)
    v = Compose(y.gen("α"), y.gen("γ"), 0)
    assert syntactic_lift(f, v, y.gen("α"), y.gen("γ"), 0) == (y.gen("α"), y.gen("γ"))
    with pytest.raises(DecompositionMismatch):
        syntactic_lift(f, v, y.gen("β"), y.gen("γ"), 0)
    with pytest.raises(DecompositionMismatch):
        syntactic_lift(ce2_lambda(), v, y.gen("α"), y.gen("γ"), 0)
