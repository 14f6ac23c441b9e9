"""
Arrow algebra of the free strict infinity-category on a polygraph.

Terms are normalized by pushing boundary coercions down to generators and
applying the unit laws eagerly, so a normalized term is a tree of
compositions over generators in which every composite is non-degenerate.
Equality of arrows is decided by classification (see ppx.polyplex).
"""

from typing import Dict

from ppx.core.polygraph import Polygraph
from ppx.core.terms import Boundary, Compose, Gen, Sign, Term, structural_dim, subterms
from ppx.errors import BoundaryMismatch, NotACell, UnsupportedClass


def _memo(p: Polygraph, name: str) -> Dict:
    return p._cache.setdefault(name, {})


def _dim(p: Polygraph, t: Term) -> int:
    return structural_dim(t, p.dim_of)


def simplify_compose(p: Polygraph, a: Term, b: Term, k: int) -> Term:
    """
    Compose two normalized terms along k, applying the unit laws.

    No typing check is made; use compose for that.
    """
    if _dim(p, a) <= k:
        return b
    if _dim(p, b) <= k:
        return a
    return Compose(a, b, k)


def normalize(p: Polygraph, t: Term) -> Term:
    """
    Normal representative of a term: no boundary nodes, no unit composites.

    Args:
        p: Ambient polygraph
        t: Term over p

    Returns:
        A term denoting the same arrow
    """
    memo = _memo(p, "normalize")
    if t in memo:
        return memo[t]
    if isinstance(t, Gen):
        p.cell(t.cell)
        result: Term = t
    elif isinstance(t, Compose):
        result = simplify_compose(p, normalize(p, t.left), normalize(p, t.right), t.k)
    else:
        result = boundary(p, t.term, t.k, t.sign)
    memo[t] = result
    return result


def boundary(p: Polygraph, t: Term, k: int, sign: Sign) -> Term:
    """
    Normalized term for the k-dimensional source or target of t.

    Args:
        p: Ambient polygraph
        t: Term over p
        k: Boundary dimension
        sign: Sign.MINUS for the source, Sign.PLUS for the target

    Returns:
        A normalized term; t itself (normalized) when k >= dim t
    """
    if k < 0:
        raise ValueError(f"Boundary level must be non-negative, got {k}")
    return _boundary(p, normalize(p, t), k, sign)


def _boundary(p: Polygraph, t: Term, k: int, sign: Sign) -> Term:
    memo = _memo(p, "boundary")
    key = (t, k, sign)
    if key in memo:
        return memo[key]
    if k >= _dim(p, t):
        result = t
    elif isinstance(t, Gen):
        cell = p.cell(t.cell)
        face = cell.src if sign is Sign.MINUS else cell.tgt
        result = boundary(p, face, k, sign)
    elif isinstance(t, Compose):
        if k <= t.k:
            result = _boundary(p, t.left if sign is Sign.MINUS else t.right, k, sign)
        else:
            result = simplify_compose(
                p, _boundary(p, t.left, k, sign), _boundary(p, t.right, k, sign), t.k
            )
    else:
        raise ValueError("Boundary nodes do not survive normalization")
    memo[key] = result
    return result


def dimension(p: Polygraph, t: Term) -> int:
    """Least n such that t is an n-arrow."""
    return _dim(p, normalize(p, t))


def is_positive(p: Polygraph) -> bool:
    """
    Whether every cell of p has non-identity source and target of dimension dim - 1.
    """
    memo = p._cache
    if "positive" not in memo:
        ok = True
        for cell in p:
            if cell.dim == 0:
                continue
            try:
                if dimension(p, cell.src) != cell.dim - 1 or dimension(p, cell.tgt) != cell.dim - 1:
                    ok = False
                    break
            except NotACell:
                ok = False
                break
        memo["positive"] = ok
    return memo["positive"]


def arrows_equal(p: Polygraph, t: Term, u: Term) -> bool:
    """
    Whether two terms denote the same arrow.

    Decided by comparing classified polyplexes and their labels.

    Raises:
        UnsupportedClass: If p is not positive
    """
    if not is_positive(p):
        raise UnsupportedClass("Arrow equality is only decided over positive polygraphs")
    a, b = normalize(p, t), normalize(p, u)
    if a == b:
        return True
    if _dim(p, a) != _dim(p, b):
        return False
    from ppx.polyplex.classify import classify_term

    ca, cb = classify_term(p, a), classify_term(p, b)
    return ca.shape is cb.shape and ca.labels == cb.labels


def compose(p: Polygraph, t: Term, u: Term, k: int) -> Term:
    """
    The composite t #_k u.

    Raises:
        BoundaryMismatch: If the k-target of t differs from the k-source of u
    """
    a, b = normalize(p, t), normalize(p, u)
    if not arrows_equal(p, _boundary(p, a, k, Sign.PLUS), _boundary(p, b, k, Sign.MINUS)):
        raise BoundaryMismatch(f"Arrows are not composable along dimension {k}")
    return simplify_compose(p, a, b, k)


def typecheck(p: Polygraph, t: Term) -> int:
    """
    Check every composite inside t and return its dimension.

    Raises:
        BoundaryMismatch: On the first ill-typed composite
        NotACell: If t mentions an unknown cell
    """
    for node in subterms(t):
        if isinstance(node, Gen):
            p.cell(node.cell)
        elif isinstance(node, Compose):
            left = boundary(p, node.left, node.k, Sign.PLUS)
            right = boundary(p, node.right, node.k, Sign.MINUS)
            if left != right and not arrows_equal(p, left, right):
                raise BoundaryMismatch(f"Ill-typed composite along dimension {node.k}")
    return dimension(p, t)


def identity(t: Term, k: int) -> Term:
    """t viewed as an identity arrow in dimension k, as a boundary coercion."""
    return Boundary(t, k, Sign.PLUS)
