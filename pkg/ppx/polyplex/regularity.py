"""
Sphericity, regularity and the sigma criterion for polyplexes.

A polyplex has spherical boundary when its iterated sources and targets
meet like the boundary spheres of a ball:

    S_0^- and S_0^+ are disjoint, and
    S_k^- n S_k^+ = S_{k-1}^- u S_{k-1}^+ for 0 < k < dim.

The same property is read off the linearization: the images of the
generators of the globe D_n under the universal arrow have pairwise
disjoint supports. Both tests are run and must agree.
"""

import logging
from typing import List

from ppx.core.algebra import boundary, dimension, is_positive, normalize
from ppx.core.morphism import PolygraphMorphism, eval_morphism
from ppx.core.polygraph import Cell, Polygraph
from ppx.core.terms import SIGNS, Gen, Sign, Term
from ppx.errors import MethodDisagreement, PolygraphError, UnsupportedClass
from ppx.linearization.delta import delta_vector, pi_vector, sigma
from ppx.linearization.lincomb import LinComb
from ppx.linearization.vectors import Vector
from ppx.polyplex import shape as shapes
from ppx.polyplex.classify import classify, classify_cell
from ppx.polyplex.polyplex import Polyplex
from ppx.polyplex.shape import REGISTRY, Shape

LOGGER = logging.getLogger(__name__)


def sigma_image(p: Polygraph, t: Term) -> LinComb:
    """
    Image of sigma of the globe D_n under the map D_n -> p* picking t.

    Equals (-1)^n delta(t) + sum over k < n of (-1)^k (delta(src_k t) + delta(tgt_k t)).
    No class restriction applies; this is the raw value of the sigma test.
    """
    n = dimension(p, t)
    total = Vector(delta_vector(p, t)) * (-1 if n % 2 else 1)
    for k in range(n):
        for sign in SIGNS:
            total.iadd_coef(-1 if k % 2 else 1, delta_vector(p, boundary(p, t, k, sign)))
    return LinComb(p, total)


def is_polyplex(p: Polygraph, t: Term) -> bool:
    """
    Whether t exhibits p as a polyplex with universal arrow t.

    Raises:
        UnsupportedClass: If p is not regular; the sigma test is neither
            sound nor complete outside that class
    """
    if not is_regular(p):
        raise UnsupportedClass("The sigma criterion is only valid for regular polygraphs")
    return sigma_image(p, t) == sigma(p)


def _spherical_by_support(shape: Shape) -> bool:
    pg = shapes.materialize(shape)
    du = delta_vector(pg, shape.universal)
    supports = [du.support()]
    for k in range(shape.dim):
        for sign in SIGNS:
            supports.append(pi_vector(pg, du, k, sign).support())
    seen: set = set()
    for s in supports:
        if seen & s:
            return False
        seen |= s
    return True


def _spherical_by_intersection(shape: Shape) -> bool:
    previous = frozenset()
    for k in range(shape.dim):
        minus = shapes.boundary_cells(shape, k, Sign.MINUS)
        plus = shapes.boundary_cells(shape, k, Sign.PLUS)
        if minus & plus != previous:
            return False
        previous = minus | plus
    return True


def shape_is_spherical(shape: Shape) -> bool:
    """
    Sphericity of a shape, computed both ways and cached per shape.

    Raises:
        MethodDisagreement: If the two methods give different answers
    """
    memo = REGISTRY.memo("spherical")
    if shape.sid not in memo:
        by_support = _spherical_by_support(shape)
        by_intersection = _spherical_by_intersection(shape)
        if by_support != by_intersection:
            raise MethodDisagreement(
                f"Sphericity of {shape!r}: support test says {by_support}, "
                f"intersection test says {by_intersection}"
            )
        memo[shape.sid] = by_support
    return memo[shape.sid]


def has_spherical_boundary(pp: Polyplex) -> bool:
    """
    Whether a polyplex has spherical boundary.

    Args:
        pp: The polyplex

    Returns:
        True if the iterated boundaries include like the spheres of a ball

    Raises:
        MethodDisagreement: If the linear and the set-theoretic tests differ
    """
    return shape_is_spherical(pp.shape)


def non_spherical_cells(p: Polygraph) -> List[Cell]:
    """Cells of a positive polygraph whose plex lacks spherical boundary."""
    return [c for c in p if c.dim >= 2 and not shape_is_spherical(classify_cell(p, c.id).shape)]


def is_regular(p: Polygraph) -> bool:
    """Whether p is positive and all its plexes have spherical boundary."""
    memo = p._cache
    if "regular" not in memo:
        try:
            memo["regular"] = is_positive(p) and not non_spherical_cells(p)
        except PolygraphError as e:
            LOGGER.debug("Regularity check failed: %s", e)
            memo["regular"] = False
    return memo["regular"]


def is_regular_arrow(p: Polygraph, t: Term) -> bool:
    """
    Whether an arrow of a regular polygraph is regular.

    An arrow is regular when the polyplex classifying it has spherical
    boundary.
    """
    return shape_is_spherical(classify(p, t).shape)


def is_regular_morphism(f: PolygraphMorphism) -> bool:
    """Whether f goes between regular polygraphs and sends cells to regular arrows."""
    if not (is_regular(f.domain) and is_regular(f.codomain)):
        return False
    return all(is_regular_arrow(f.codomain, eval_morphism(f, Gen(x))) for x in f.domain.ids)


def is_plex(p: Polygraph, t: Term) -> bool:
    """Whether t exhibits the regular polygraph p as a plex: a polyplex on one top generator."""
    n = normalize(p, t)
    return isinstance(n, Gen) and len(p.cells_of_dim(p.dim)) == 1 and is_polyplex(p, n)
