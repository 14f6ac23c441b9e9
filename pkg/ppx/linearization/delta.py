"""
The counting function delta: X* -> ZX and what is built on top of it.

delta sends a generator to its basis vector and a composite x #_k y to
delta(x) + delta(y) - pi_k^+(delta(x)). On top of it live the sigma
invariant, the m-basis of Makkai content, the two positivity predicates
and the linear tests for sub-polygraphs.
"""

from enum import Enum
from typing import List, Tuple, Union

from ppx.core.algebra import boundary, normalize
from ppx.core.morphism import PolygraphMorphism, eval_morphism
from ppx.core.polygraph import Polygraph, SubPolygraph
from ppx.core.terms import SIGNS, Compose, Gen, Sign, Term
from ppx.errors import ClosureViolation, HypothesisFailed
from ppx.linearization.lincomb import Basis, LinComb
from ppx.linearization.vectors import Vector, linear_extension


class PositivityMode(Enum):
    """Positivity notions on ZX."""
    MAKKAI = "makkai"
    ALTERNATE = "alternate"


def _memo(p: Polygraph, name: str) -> dict:
    return p._cache.setdefault(name, {})


def delta_vector(p: Polygraph, t: Term) -> Vector:
    """delta of a term as a raw vector over cell ids."""
    memo = _memo(p, "delta")
    if t in memo:
        return memo[t]
    n = normalize(p, t)
    if n != t:
        result = delta_vector(p, n)
    elif isinstance(n, Gen):
        p.cell(n.cell)
        result = Vector(((n.cell, 1),))
    elif isinstance(n, Compose):
        left = delta_vector(p, n.left)
        result = left + delta_vector(p, n.right)
        result.iadd_coef(-1, pi_vector(p, left, n.k, Sign.PLUS))
    else:
        raise ValueError("Boundary nodes do not survive normalization")
    memo[t] = result
    return result


def delta(p: Polygraph, t: Term) -> LinComb:
    """
    Image of an arrow in the linearization.

    Args:
        p: Ambient polygraph
        t: Term over p

    Returns:
        delta(t) in the delta basis
    """
    return LinComb(p, Vector(delta_vector(p, t)))


def pi_cell(p: Polygraph, cell_id: int, k: int, sign: Sign) -> Vector:
    """pi_k^sign of the basis vector of a cell."""
    memo = _memo(p, "pi_cell")
    key = (cell_id, k, sign)
    if key not in memo:
        if k >= p.dim_of(cell_id):
            memo[key] = Vector(((cell_id, 1),))
        else:
            memo[key] = delta_vector(p, boundary(p, Gen(cell_id), k, sign))
    return memo[key]


def pi_vector(p: Polygraph, v: Vector, k: int, sign: Sign) -> Vector:
    """Linear extension of pi_k^sign on raw vectors."""
    return linear_extension(v, lambda x: pi_cell(p, x, k, sign))


def pi_linear(v: LinComb, k: int, sign: Sign) -> LinComb:
    """
    Globular projection pi_k^sign on ZX.

    Raises:
        BasisMismatch: Never; m-basis input is converted first
    """
    if v.basis is Basis.M:
        v = from_m_basis(v)
    return LinComb(v.polygraph, pi_vector(v.polygraph, v.vector, k, sign))


def sigma(p: Polygraph) -> LinComb:
    """The alternating sum of all cells, sum of (-1)^dim x delta_x."""
    return LinComb(p, Vector((c.id, -1 if c.dim % 2 else 1) for c in p))


def m_vector(p: Polygraph, cell_id: int) -> Vector:
    """
    The m-basis element of a cell in delta coordinates.

    m_x = delta_x - delta(tgt x) - delta(src x) for dim x >= 1, and
    m_x = delta_x on 0-cells.
    """
    memo = _memo(p, "m_vector")
    if cell_id not in memo:
        d = p.dim_of(cell_id)
        m = Vector(((cell_id, 1),))
        if d > 0:
            for sign in SIGNS:
                m.iadd_coef(-1, pi_cell(p, cell_id, d - 1, sign))
        memo[cell_id] = m
    return memo[cell_id]


def to_m_basis(v: LinComb) -> LinComb:
    """
    Coordinates of a combination in the m-basis.

    m_x differs from delta_x by cells of lower dimension only, so the
    change of basis is solved top dimension first.
    """
    if v.basis is Basis.M:
        return v
    p = v.polygraph
    rest = Vector(v.vector)
    coords = Vector()
    for cell in reversed(p.cells):
        coef = rest[cell.id]
        if coef:
            coords.iadd_coef(coef, ((cell.id, 1),))
            rest.iadd_coef(-coef, m_vector(p, cell.id))
    return LinComb(p, coords, Basis.M)


def from_m_basis(v: LinComb) -> LinComb:
    """Inverse of to_m_basis."""
    if v.basis is Basis.DELTA:
        return v
    p = v.polygraph
    return LinComb(p, linear_extension(v.vector, lambda x: m_vector(p, x)))


def makkai_leq(u: LinComb, v: LinComb) -> bool:
    """Whether v - u has nonnegative m-basis coordinates."""
    return to_m_basis(from_m_basis(v) - from_m_basis(u)).vector.is_nonnegative()


def positivity(v: LinComb, mode: Union[PositivityMode, str] = PositivityMode.MAKKAI) -> bool:
    """
    Test a positivity notion.

    Args:
        v: Combination in either basis
        mode: "makkai" for nonnegative m-basis coordinates, "alternate"
            for coefficients of sign (-1)^dim

    Returns:
        True if v is positive in the requested sense
    """
    mode = PositivityMode(mode)
    if mode is PositivityMode.MAKKAI:
        return to_m_basis(v).vector.is_nonnegative()
    p = v.polygraph
    return all(
        coef * (-1 if p.dim_of(x) % 2 else 1) > 0 for x, coef in from_m_basis(v).vector.items()
    )


def in_subpolygraph(p: Polygraph, t: Term, sub: SubPolygraph) -> bool:
    """Whether an arrow of p lies in the sub-polygraph, read off delta(t)."""
    return delta_vector(p, t).support() <= sub.members


def closure_violations(sub: SubPolygraph) -> List[str]:
    """Members whose source or target reaches outside the sub-polygraph."""
    p = sub.parent
    issues: List[str] = []
    for x in sorted(sub.members, key=lambda i: (p.dim_of(i), i)):
        d = p.dim_of(x)
        if d == 0:
            continue
        for sign in SIGNS:
            outside = pi_cell(p, x, d - 1, sign).support() - sub.members
            if outside:
                names = ", ".join(sorted(p.cell(o).label for o in outside))
                side = "source" if sign is Sign.MINUS else "target"
                issues.append(f"{side} of {p.cell(x).label} uses cells outside: {names}")
    return issues


def closure_check(sub: SubPolygraph) -> Tuple[bool, List[str]]:
    """
    Check that a set of cells is closed under attaching arrows.

    Returns:
        Tuple of (is_valid, list of error messages)
    """
    issues = closure_violations(sub)
    return len(issues) == 0, issues


def apply_functor(f: PolygraphMorphism, v: LinComb) -> LinComb:
    """Linear action of a morphism: delta_x goes to delta(f(x))."""
    v = from_m_basis(v)
    y = f.codomain
    return LinComb(y, linear_extension(v.vector, lambda x: delta_vector(y, eval_morphism(f, Gen(x)))))


def preserves_sigma(f: PolygraphMorphism) -> bool:
    """Whether f sends sigma of its domain to sigma of its codomain."""
    return apply_functor(f, sigma(f.domain)) == sigma(f.codomain)


def preserves_alternate_positivity(f: PolygraphMorphism) -> bool:
    """Whether every (-1)^dim x delta_x is sent to an alternate-positive element."""
    x = f.domain
    for cell in x:
        signed = LinComb(x, Vector(((cell.id, -1 if cell.dim % 2 else 1),)))
        if not positivity(apply_functor(f, signed), PositivityMode.ALTERNATE):
            return False
    return True


def image_subpolygraph(f: PolygraphMorphism, sub: SubPolygraph, check: bool = True) -> SubPolygraph:
    """
    Cells of the codomain appearing in the image of a sub-polygraph.

    Args:
        f: Morphism X* -> Y*
        sub: Sub-polygraph of X
        check: Verify that f preserves sigma and alternate-positivity first

    Returns:
        The sub-polygraph of Y made of the cells met by some delta(f(v))

    Raises:
        HypothesisFailed: If check is set and f does not preserve sigma or
            alternate-positivity
        ClosureViolation: If the resulting set is not closed
    """
    if check:
        if not preserves_sigma(f):
            raise HypothesisFailed("Morphism does not preserve sigma")
        if not preserves_alternate_positivity(f):
            raise HypothesisFailed("Morphism does not preserve alternate-positivity")
    y = f.codomain
    members = set()
    for x in sub.members:
        members |= delta_vector(y, eval_morphism(f, Gen(x))).support()
    result = SubPolygraph.of(y, members)
    ok, issues = closure_check(result)
    if not ok:
        raise ClosureViolation("; ".join(issues))
    return result
