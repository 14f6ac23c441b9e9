"""
Classification of arrows by polyplexes.

Every arrow of a positive polygraph is the image of the universal arrow of
a unique polyplex under a unique polygraphic map. The polyplex is built by
structural recursion on the term: a generator gives the plex glued from its
classified source and target, a composite glues the classified factors
along their shared boundary.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ppx.core.algebra import normalize
from ppx.core.morphism import PolygraphMorphism
from ppx.core.polygraph import Polygraph
from ppx.core.terms import SIGNS, Boundary, Compose, Gen, Sign, Term
from ppx.errors import BoundaryMismatch, UnsupportedClass
from ppx.polyplex import shape as shapes
from ppx.polyplex.polyplex import Polyplex
from ppx.polyplex.shape import Shape


@dataclass(frozen=True)
class Classification:
    """
    A shape plus the label of each of its cells.

    Attributes:
        shape: Canonical polyplex of the arrow
        labels: Cell id in the ambient polygraph of every shape cell
    """
    shape: Shape
    labels: Tuple[int, ...]

    def pullback(self, cell_map: Tuple[int, ...]) -> Tuple[int, ...]:
        """Labels pulled back along a map of shape indices."""
        return tuple(self.labels[i] for i in cell_map)


@dataclass(frozen=True)
class ClassifiedArrow:
    """A polyplex and the polygraphic map labelling it in the ambient polygraph."""
    polyplex: Polyplex
    label: PolygraphMorphism

    @property
    def shape(self) -> Shape:
        """Canonical shape of the polyplex."""
        return self.polyplex.shape


def _boundary_labels(c: Classification, k: int, sign: Sign) -> Tuple[Shape, Tuple[int, ...]]:
    b, cell_map = shapes.boundary(c.shape, k, sign)
    return b, tuple(c.labels[i] for i in cell_map)


def _glue_labels(size: int, *parts: Tuple[Tuple[int, ...], Tuple[int, ...]]) -> Tuple[int, ...]:
    labels: List[Optional[int]] = [None] * size
    for cell_map, part_labels in parts:
        for i, target in enumerate(cell_map):
            labels[target] = part_labels[i]
    return tuple(labels)  # type: ignore[arg-type]


def classify_cell(p: Polygraph, cell_id: int) -> Classification:
    """
    Classification of a generating cell: its plex and labels.

    Raises:
        UnsupportedClass: If the cell has an identity source or target
        BoundaryMismatch: If its source and target are not parallel
    """
    memo = p._cache.setdefault("classify_cell", {})
    if cell_id in memo:
        return memo[cell_id]
    cell = p.cell(cell_id)
    if cell.dim == 0:
        result = Classification(shapes.point(), (cell_id,))
    else:
        cs = classify_term(p, cell.src)
        ct = classify_term(p, cell.tgt)
        if cs.shape.dim != cell.dim - 1 or ct.shape.dim != cell.dim - 1:
            raise UnsupportedClass(f"Cell {cell.label} has an identity source or target")
        if cell.dim >= 2:
            for sign in SIGNS:
                if _boundary_labels(cs, cell.dim - 2, sign) != _boundary_labels(ct, cell.dim - 2, sign):
                    raise BoundaryMismatch(f"Cell {cell.label} has non-parallel source and target")
        plex, ms, mt, top = shapes.plex(cs.shape, ct.shape)
        labels = list(_glue_labels(plex.size, (ms, cs.labels), (mt, ct.labels)))
        labels[top] = cell_id
        result = Classification(plex, tuple(labels))
    memo[cell_id] = result
    return result


def classify_term(p: Polygraph, t: Term) -> Classification:
    """
    Classification of an arrow given by a term.

    Raises:
        BoundaryMismatch: If the term contains an ill-typed composite
        UnsupportedClass: If a generator has an identity boundary
    """
    memo = p._cache.setdefault("classify_term", {})
    if t in memo:
        return memo[t]
    if isinstance(t, Gen):
        result = classify_cell(p, t.cell)
    elif isinstance(t, Compose):
        cl = classify_term(p, t.left)
        cr = classify_term(p, t.right)
        if _boundary_labels(cl, t.k, Sign.PLUS) != _boundary_labels(cr, t.k, Sign.MINUS):
            raise BoundaryMismatch(f"Ill-typed composite along dimension {t.k}")
        shape, ma, mb = shapes.compose(cl.shape, cr.shape, t.k)
        result = Classification(shape, _glue_labels(shape.size, (ma, cl.labels), (mb, cr.labels)))
    elif isinstance(t, Boundary):
        c = classify_term(p, t.term)
        shape, labels = _boundary_labels(c, t.k, t.sign)
        result = Classification(shape, labels)
    else:
        raise TypeError(f"Not a term: {t!r}")
    memo[t] = result
    return result


def classify(p: Polygraph, t: Term) -> ClassifiedArrow:
    """
    Classify an arrow of a positive polygraph.

    Args:
        p: Ambient polygraph
        t: Term over p

    Returns:
        The polyplex of the arrow and its labelling morphism into p
    """
    c = classify_term(p, normalize(p, t))
    pp = Polyplex.of(c.shape)
    label = PolygraphMorphism.from_cell_map(pp.underlying, p, dict(enumerate(c.labels)))
    return ClassifiedArrow(pp, label)
