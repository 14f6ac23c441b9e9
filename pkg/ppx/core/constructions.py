"""
Colimit-style constructions on polygraphs: quotients by identification,
pushouts along a polygraphic monomorphism and the lattice of
sub-polygraphs.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from ppx.core.algebra import normalize
from ppx.core.morphism import PolygraphMorphism
from ppx.core.polygraph import Cell, ClassTag, Polygraph, SubPolygraph
from ppx.core.terms import Gen, Term, rename, substitute
from ppx.errors import ClosureViolation, NotMono

LOGGER = logging.getLogger(__name__)


@dataclass
class PushoutResult:
    """
    A pushout square completed.

    Attributes:
        polygraph: The pushout object
        left: Injection of the codomain of the first leg
        right: Injection of the codomain of the second leg
    """
    polygraph: Polygraph
    left: PolygraphMorphism
    right: PolygraphMorphism


@dataclass(frozen=True)
class SubLattice:
    """Union and intersection of two sub-polygraphs."""
    union: SubPolygraph
    intersection: SubPolygraph


def _find(parent: Dict[int, int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def identify_cells(p: Polygraph, pairs: Iterable[Tuple[int, int]]) -> Tuple[Polygraph, PolygraphMorphism]:
    """
    Quotient of a polygraph identifying pairs of cells.

    Each class is represented by its smallest id. The attaching arrows of
    the surviving cells are renamed through the quotient.

    Args:
        p: The polygraph
        pairs: Pairs of cell ids of equal dimension to identify

    Returns:
        Tuple of (quotient polygraph, quotient morphism)

    Raises:
        ValueError: If a pair mixes dimensions
    """
    parent = {x: x for x in p.ids}
    for a, b in pairs:
        if p.dim_of(a) != p.dim_of(b):
            raise ValueError(f"Cannot identify cells of dimensions {p.dim_of(a)} and {p.dim_of(b)}")
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    rep = {x: _find(parent, x) for x in p.ids}
    cells = [
        Cell(
            c.id,
            c.dim,
            rename(c.src, rep) if c.src is not None else None,
            rename(c.tgt, rep) if c.tgt is not None else None,
            c.name,
        )
        for c in p
        if rep[c.id] == c.id
    ]
    q = Polygraph(cells, ClassTag.UNCHECKED)
    LOGGER.debug("Identified %d cells down to %d", len(p), len(q))
    return q, PolygraphMorphism.from_cell_map(p, q, rep)


def pushout(i: PolygraphMorphism, j: PolygraphMorphism) -> PushoutResult:
    """
    Pushout of B <- A -> C along a polygraphic monomorphism.

    The cells of B outside the image of A are added to C, their attaching
    arrows rewritten through j. When both legs are monomorphisms the result
    is the disjoint union of B and C glued along A.

    Args:
        i: Leg A -> B
        j: Leg A -> C

    Returns:
        The pushout with its two injections (of B and of C)

    Raises:
        NotMono: If neither leg is a polygraphic monomorphism
        ValueError: If the legs have different domains
    """
    if i.domain != j.domain:
        raise ValueError("Pushout legs must share their domain")
    if not i.is_mono():
        if not j.is_mono():
            raise NotMono("Pushout needs at least one polygraphic monomorphism")
        swapped = pushout(j, i)
        return PushoutResult(swapped.polygraph, swapped.right, swapped.left)

    b, c = i.codomain, j.codomain
    covered = {y: x for x, y in i.cell_map().items()}
    fresh = [cell for cell in b if cell.id not in covered]
    offset = c.next_id()
    new_ids = {cell.id: offset + n for n, cell in enumerate(fresh)}
    images: Dict[int, Term] = {y: j.image(x) for y, x in covered.items()}
    images.update({y: Gen(z) for y, z in new_ids.items()})

    def attach(cell: Cell) -> Cell:
        return Cell(
            new_ids[cell.id],
            cell.dim,
            substitute(cell.src, images) if cell.src is not None else None,
            substitute(cell.tgt, images) if cell.tgt is not None else None,
            cell.name,
        )

    draft = Polygraph(list(c.cells) + [attach(cell) for cell in fresh], ClassTag.UNCHECKED)
    result = Polygraph(
        [
            cell
            if cell.src is None or cell.id in c
            else Cell(cell.id, cell.dim, normalize(draft, cell.src), normalize(draft, cell.tgt), cell.name)
            for cell in draft
        ],
        ClassTag.UNCHECKED,
    )
    left = PolygraphMorphism(b, result, images)
    right = PolygraphMorphism.from_cell_map(c, result, {x: x for x in c.ids})
    LOGGER.debug("Pushout glued %d new cells onto %d", len(fresh), len(c))
    return PushoutResult(result, left, right)


def sub_lattice(s: SubPolygraph, t: SubPolygraph) -> SubLattice:
    """
    Objectwise union and intersection of two sub-polygraphs.

    Raises:
        ValueError: If the parents differ
        ClosureViolation: If a computed set is not closed
    """
    from ppx.linearization.delta import closure_check

    if s.parent is not t.parent and s.parent != t.parent:
        raise ValueError("Sub-polygraphs must share their parent")
    result = SubLattice(
        SubPolygraph(s.parent, s.members | t.members),
        SubPolygraph(s.parent, s.members & t.members),
    )
    issues: List[str] = []
    for sub in (result.union, result.intersection):
        issues.extend(closure_check(sub)[1])
    if issues:
        raise ClosureViolation("; ".join(issues))
    return result
