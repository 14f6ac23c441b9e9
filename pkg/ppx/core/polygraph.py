"""
Finite polygraphs: generating cells attached along arrow terms.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ppx.core.terms import (
    Gen,
    Term,
    rename,
    structural_dim,
    term_from_json,
    term_to_json,
)
from ppx.errors import NotACell


class ClassTag(Enum):
    """Class a polygraph claims to belong to."""
    POSITIVE = "positive"
    REGULAR = "regular"
    UNCHECKED = "unchecked"


@dataclass(frozen=True)
class Cell:
    """
    A generating cell.

    Attributes:
        id: Interned integer identifier
        dim: Dimension of the cell
        src: Source arrow (None for 0-cells)
        tgt: Target arrow (None for 0-cells)
        name: Optional display name
    """
    id: int
    dim: int
    src: Optional[Term] = None
    tgt: Optional[Term] = None
    name: Optional[str] = None

    def __post_init__(self):
        """Validate cell after initialization."""
        if self.dim < 0:
            raise ValueError(f"Cell dimension must be non-negative, got {self.dim}")
        if self.dim == 0 and (self.src is not None or self.tgt is not None):
            raise ValueError(f"0-cell {self.label} cannot have a source or target")
        if self.dim > 0 and (self.src is None or self.tgt is None):
            raise ValueError(f"{self.dim}-cell {self.label} needs both a source and a target")

    @property
    def label(self) -> str:
        """Display name, falling back to the id."""
        return self.name if self.name is not None else str(self.id)

    def to_dict(self) -> Dict[str, Any]:
        """Convert cell to dictionary format."""
        data: Dict[str, Any] = {"id": self.id, "dim": self.dim}
        if self.name is not None:
            data["name"] = self.name
        if self.src is not None:
            data["src"] = term_to_json(self.src)
            data["tgt"] = term_to_json(self.tgt)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Cell":
        """Create cell from dictionary format."""
        src = data.get("src")
        tgt = data.get("tgt")
        return cls(
            id=data["id"],
            dim=data["dim"],
            src=term_from_json(src) if src is not None else None,
            tgt=term_from_json(tgt) if tgt is not None else None,
            name=data.get("name"),
        )


class Polygraph:
    """
    An immutable finite polygraph.

    Cells are kept sorted by (dimension, id). Derived data (classifications,
    linearizations, regularity) is memoized in a private cache that never
    changes the observable value.
    """

    def __init__(self, cells: Iterable[Cell], class_tag: ClassTag = ClassTag.UNCHECKED):
        ordered = sorted(cells, key=lambda c: (c.dim, c.id))
        self._cells: Dict[int, Cell] = {}
        for cell in ordered:
            if cell.id in self._cells:
                raise ValueError(f"Duplicate cell id {cell.id}")
            self._cells[cell.id] = cell
        self.class_tag = class_tag
        self._cache: Dict[Any, Any] = {}

    @property
    def cells(self) -> Tuple[Cell, ...]:
        """All cells in (dimension, id) order."""
        return tuple(self._cells.values())

    @property
    def ids(self) -> Tuple[int, ...]:
        """All cell ids in (dimension, id) order."""
        return tuple(self._cells)

    @property
    def dim(self) -> int:
        """Largest cell dimension, -1 for the empty polygraph."""
        return max((c.dim for c in self._cells.values()), default=-1)

    def cell(self, cell_id: int) -> Cell:
        """
        Look a cell up by id.

        Raises:
            NotACell: If no such cell exists
        """
        try:
            return self._cells[cell_id]
        except KeyError:
            raise NotACell(f"No cell with id {cell_id}") from None

    def dim_of(self, cell_id: int) -> int:
        """Dimension of a cell."""
        return self.cell(cell_id).dim

    def cells_of_dim(self, n: int) -> List[Cell]:
        """Cells of dimension exactly n."""
        return [c for c in self._cells.values() if c.dim == n]

    def grades(self) -> Tuple[int, ...]:
        """Number of cells in each dimension 0..dim."""
        counts = [0] * (self.dim + 1)
        for c in self._cells.values():
            counts[c.dim] += 1
        return tuple(counts)

    def names(self) -> Dict[int, str]:
        """Display name of every cell."""
        return {c.id: c.label for c in self._cells.values()}

    def cell_by_name(self, name: str) -> Cell:
        """
        Look a cell up by display name.

        Raises:
            NotACell: If no cell carries that name
        """
        for c in self._cells.values():
            if c.label == name:
                return c
        raise NotACell(f"No cell named {name!r}")

    def gen(self, name: str) -> Gen:
        """Generator term of the cell with the given name."""
        return Gen(self.cell_by_name(name).id)

    def truncation(self, k: int) -> "Polygraph":
        """Sub-polygraph of the cells of dimension at most k."""
        return Polygraph((c for c in self._cells.values() if c.dim <= k), self.class_tag)

    def restrict(self, ids: Iterable[int], class_tag: Optional[ClassTag] = None) -> "Polygraph":
        """
        Polygraph made of the given cells, keeping their ids.

        The caller is responsible for the set being closed; see
        ppx.linearization.closure_check.
        """
        keep = set(ids)
        unknown = keep - set(self._cells)
        if unknown:
            raise NotACell(f"Unknown cell ids {sorted(unknown)}")
        tag = self.class_tag if class_tag is None else class_tag
        return Polygraph((c for c in self._cells.values() if c.id in keep), tag)

    def with_class(self, class_tag: ClassTag) -> "Polygraph":
        """Same cells, different class tag."""
        return Polygraph(self._cells.values(), class_tag)

    def next_id(self) -> int:
        """Smallest id larger than every id in use."""
        return max(self._cells, default=-1) + 1

    def __contains__(self, cell_id: object) -> bool:
        return cell_id in self._cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(self._cells.values())

    def __len__(self) -> int:
        return len(self._cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polygraph):
            return NotImplemented
        return self.cells == other.cells and self.class_tag == other.class_tag

    def __hash__(self) -> int:
        return hash((self.cells, self.class_tag))

    def __repr__(self) -> str:
        return f"Polygraph(grades={self.grades()}, class={self.class_tag.value})"

    def to_dict(self) -> Dict[str, Any]:
        """Convert polygraph to dictionary format."""
        return {
            "class": self.class_tag.value,
            "cells": [c.to_dict() for c in self._cells.values()],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Polygraph":
        """Create polygraph from dictionary format."""
        return cls(
            (Cell.from_dict(c) for c in data["cells"]),
            ClassTag(data.get("class", ClassTag.UNCHECKED.value)),
        )


@dataclass(frozen=True)
class SubPolygraph:
    """A set of cells of a parent polygraph."""
    parent: Polygraph
    members: FrozenSet[int]

    def __post_init__(self):
        """Validate membership after initialization."""
        unknown = set(self.members) - set(self.parent.ids)
        if unknown:
            raise NotACell(f"Unknown cell ids {sorted(unknown)}")

    @classmethod
    def of(cls, parent: Polygraph, ids: Iterable[int]) -> "SubPolygraph":
        """Build a sub-polygraph from any iterable of ids."""
        return cls(parent, frozenset(ids))

    @classmethod
    def full(cls, parent: Polygraph) -> "SubPolygraph":
        """The whole polygraph."""
        return cls(parent, frozenset(parent.ids))

    def as_polygraph(self) -> Polygraph:
        """The members as a polygraph of their own."""
        return self.parent.restrict(self.members)

    def complement(self) -> FrozenSet[int]:
        """Cells of the parent outside of this sub-polygraph."""
        return frozenset(self.parent.ids) - self.members

    def __contains__(self, cell_id: object) -> bool:
        return cell_id in self.members

    def __len__(self) -> int:
        return len(self.members)


class PolygraphBuilder:
    """
    Incremental construction of a polygraph by name.

    Example:
        >>> b = PolygraphBuilder()
        >>> x, y = b.add("x"), b.add("y")
        >>> f = b.add("f", Gen(x), Gen(y))
        >>> b.build().grades()
        (2, 1)
    """

    def __init__(self, base: Optional[Polygraph] = None):
        self._cells: List[Cell] = list(base.cells) if base is not None else []
        self._next = base.next_id() if base is not None else 0

    def add(
        self,
        name: Optional[str] = None,
        src: Optional[Term] = None,
        tgt: Optional[Term] = None,
        dim: Optional[int] = None,
    ) -> int:
        """
        Add a cell and return its id.

        Args:
            name: Display name
            src: Source arrow, omitted for 0-cells
            tgt: Target arrow, omitted for 0-cells
            dim: Explicit dimension; inferred from src and tgt when omitted

        Returns:
            The id of the new cell
        """
        if dim is None:
            if src is None or tgt is None:
                dim = 0
            else:
                dim = 1 + max(self._term_dim(src), self._term_dim(tgt))
        cell = Cell(self._next, dim, src, tgt, name)
        self._cells.append(cell)
        self._next += 1
        return cell.id

    def add_cell(self, cell: Cell) -> int:
        """Add a prebuilt cell, keeping its id."""
        if any(c.id == cell.id for c in self._cells):
            raise ValueError(f"Duplicate cell id {cell.id}")
        self._cells.append(cell)
        self._next = max(self._next, cell.id + 1)
        return cell.id

    def dim_of(self, cell_id: int) -> int:
        """Dimension of a cell added so far."""
        for c in self._cells:
            if c.id == cell_id:
                return c.dim
        raise NotACell(f"No cell with id {cell_id}")

    def _term_dim(self, t: Term) -> int:
        return structural_dim(t, self.dim_of)

    def build(self, class_tag: ClassTag = ClassTag.UNCHECKED) -> Polygraph:
        """Freeze the cells added so far into a polygraph."""
        return Polygraph(self._cells, class_tag)


def disjoint_union(p: Polygraph, q: Polygraph) -> Tuple[Polygraph, Dict[int, int], Dict[int, int]]:
    """
    Disjoint union of two polygraphs.

    Args:
        p: First polygraph, keeps its ids
        q: Second polygraph, ids shifted past those of p

    Returns:
        Tuple of (union, id map for p, id map for q)
    """
    offset = p.next_id()
    left = {c.id: c.id for c in p}
    right = {c.id: c.id + offset for c in q}
    cells = list(p.cells)
    for c in q:
        cells.append(
            Cell(
                right[c.id],
                c.dim,
                rename(c.src, right) if c.src is not None else None,
                rename(c.tgt, right) if c.tgt is not None else None,
                c.name,
            )
        )
    tag = p.class_tag if p.class_tag == q.class_tag else ClassTag.UNCHECKED
    return Polygraph(cells, tag), left, right
