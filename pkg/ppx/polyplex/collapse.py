"""
Inner cells of polyplexes and the collapse of a single top cell.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ppx.core.algebra import boundary
from ppx.core.polygraph import Cell, ClassTag, Polygraph
from ppx.core.terms import Gen, Sign, rename
from ppx.errors import PreconditionFailed
from ppx.polyplex import shape as shapes
from ppx.polyplex.classify import classify
from ppx.polyplex.polyplex import Polyplex
from ppx.polyplex.shape import REGISTRY


class OwnerKind(Enum):
    """Where a lower dimensional cell of a polyplex sits."""
    SOURCE = "source"
    INNER_OF_TARGET = "inner_of_target"


@dataclass(frozen=True)
class Ownership:
    """
    Position of a cell of dimension < n in an n-polyplex.

    Attributes:
        kind: SOURCE or INNER_OF_TARGET
        cell: The owning top cell for INNER_OF_TARGET, None otherwise
        in_source: Whether the cell lies in the (n-1)-source
        owners: Every top cell whose target has the cell as an inner cell
    """
    kind: OwnerKind
    cell: Optional[int]
    in_source: bool
    owners: Tuple[int, ...]

    @property
    def exclusive(self) -> bool:
        """Exactly one of the two situations holds, with a unique owner."""
        return self.in_source != bool(self.owners) and len(self.owners) <= 1


def _inner_of_face(face: shapes.Face) -> frozenset:
    inner = shapes.inner_cells(REGISTRY.get(face.sid))
    return frozenset(face.image[i] for i in inner)


def inner_owner(pp: Polyplex, x: int) -> Ownership:
    """
    Locate a cell of dimension < n in an n-polyplex.

    Either the cell belongs to the (n-1)-source, or it is an inner cell of
    the target of exactly one n-cell.

    Args:
        pp: An n-polyplex with n >= 1
        x: Index of a cell of dimension < n

    Returns:
        The ownership record

    Raises:
        PreconditionFailed: If x is a top cell or no unique owner exists
    """
    shape = pp.shape
    n = shape.dim
    if n == 0 or shape.cells[x].dim >= n:
        raise PreconditionFailed(f"Cell {x} is not of dimension below {n}")
    in_source = x in shapes.boundary_cells(shape, n - 1, Sign.MINUS)
    owners = tuple(c for c in shape.top_cells() if x in _inner_of_face(shape.cells[c].tgt))
    if in_source:
        return Ownership(OwnerKind.SOURCE, None, True, owners)
    if len(owners) != 1:
        raise PreconditionFailed(f"Cell {x} has {len(owners)} owning top cells")
    return Ownership(OwnerKind.INNER_OF_TARGET, owners[0], False, owners)


def collapse_single_top(pp: Polyplex) -> Polyplex:
    """
    Replace the only top cell and its faces by a single cell of dimension n-1.

    The inner cells of the source and the target of the top cell x are
    removed together with x, and one (n-1)-cell is added from the
    (n-2)-source to the (n-2)-target of x.

    Args:
        pp: An n-polyplex, n >= 1, with exactly one n-cell

    Returns:
        The (n-1)-polyplex obtained; its (n-2)-boundaries are those of pp

    Raises:
        PreconditionFailed: If pp does not have exactly one top cell
    """
    shape = pp.shape
    n = shape.dim
    tops = shape.top_cells()
    if n == 0 or len(tops) != 1:
        raise PreconditionFailed(f"Collapse needs exactly one top cell, found {len(tops)} in dimension {n}")
    if n == 1:
        return Polyplex.of(shapes.point())
    x = tops[0]
    cell = shape.cells[x]
    removed = {x} | _inner_of_face(cell.src) | _inner_of_face(cell.tgt)
    p = pp.underlying
    new_id = p.next_id()
    kept = [c for c in p if c.id not in removed]
    new_cell = Cell(
        new_id,
        n - 1,
        boundary(p, Gen(x), n - 2, Sign.MINUS),
        boundary(p, Gen(x), n - 2, Sign.PLUS),
        "collapsed",
    )
    q = Polygraph(kept + [new_cell], ClassTag.POSITIVE)
    universal = rename(pp.universal, lambda i: new_id if i == x else i)
    result = classify(q, universal)
    if result.polyplex.size != len(q):
        raise PreconditionFailed("Collapse left cells outside of the new universal arrow")
    return result.polyplex
