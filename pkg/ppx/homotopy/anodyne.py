"""
Generating cofibrations, horns and anodyne extensions.

A generating cofibration is the inclusion of the boundary of a plex into
the plex. A generating anodyne map removes one more cell: the horn of c at
a contains every cell of c except a and the top cell. An extension u <= v
is a pushout of such a map when it adds exactly two cells x and theta
with x occurring exactly once in exactly one boundary of theta.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple, Union

from ppx.core.polygraph import Cell, ClassTag, Polygraph, PolygraphBuilder, SubPolygraph
from ppx.core.terms import Compose, Gen, Sign
from ppx.errors import ClosureViolation, NotACell, PreconditionFailed
from ppx.linearization.delta import closure_check, pi_cell
from ppx.steiner.construct import build_tensor
from ppx.steiner.tensor import TensorCell

LOGGER = logging.getLogger(__name__)


def _top_cell(c: Polygraph) -> Cell:
    tops = c.cells_of_dim(c.dim)
    if len(tops) != 1:
        raise PreconditionFailed(f"A plex has a single top cell, found {len(tops)}")
    return tops[0]


def boundary_occurrences(p: Polygraph, theta: int, x: int) -> Tuple[int, int]:
    """
    Occurrences of x in the source and in the target of theta.

    The counts are the coefficients of x in delta of each boundary.
    """
    d = p.dim_of(theta)
    if d == 0:
        return 0, 0
    return pi_cell(p, theta, d - 1, Sign.MINUS)[x], pi_cell(p, theta, d - 1, Sign.PLUS)[x]


def occurs_once(p: Polygraph, theta: int, x: int) -> bool:
    """Whether x occurs exactly once in exactly one boundary of theta."""
    return sorted(boundary_occurrences(p, theta, x)) == [0, 1]


def generating_cofibration(c: Polygraph) -> SubPolygraph:
    """
    The boundary inclusion of a plex.

    Returns:
        The sub-polygraph of all cells except the top one; empty for D_0
    """
    top = _top_cell(c)
    return SubPolygraph.of(c, (x for x in c.ids if x != top.id))


@dataclass(frozen=True)
class AnodyneGenerator:
    """
    A horn inclusion of a plex.

    Attributes:
        plex: The plex c
        cell: The removed cell a, of dimension dim c - 1
        top: The top cell of c
        inclusion: The horn as a sub-polygraph of c
    """
    plex: Polygraph
    cell: int
    top: int
    inclusion: SubPolygraph

    @property
    def missing(self) -> FrozenSet[int]:
        """The two cells outside of the horn."""
        return self.inclusion.complement()

    def to_dict(self) -> Dict[str, object]:
        names = self.plex.names()
        return {
            "cell": names[self.cell],
            "top": names[self.top],
            "horn": sorted(names[x] for x in self.inclusion.members),
        }


def horn(c: Polygraph, a: Union[int, str]) -> AnodyneGenerator:
    """
    The horn of a plex at one of its codimension-one cells.

    Args:
        c: A plex of dimension n >= 1
        a: Cell id or name of an (n-1)-cell of c

    Returns:
        The generator Lambda^a c -> c

    Raises:
        NotACell: If a is not a cell of c of dimension n - 1
        PreconditionFailed: If a does not occur exactly once in exactly
            one boundary of the top cell
        ClosureViolation: If the horn is not a sub-polygraph
    """
    cell = c.cell_by_name(a) if isinstance(a, str) else c.cell(a)
    top = _top_cell(c)
    if cell.dim != top.dim - 1:
        raise NotACell(f"{cell.label} has dimension {cell.dim}, expected {top.dim - 1}")
    if not occurs_once(c, top.id, cell.id):
        src, tgt = boundary_occurrences(c, top.id, cell.id)
        raise PreconditionFailed(
            f"{cell.label} occurs {src} times in the source and {tgt} times in the target of {top.label}"
        )
    sub = SubPolygraph.of(c, (x for x in c.ids if x not in (cell.id, top.id)))
    ok, errors = closure_check(sub)
    if not ok:
        raise ClosureViolation("; ".join(errors))
    return AnodyneGenerator(c, cell.id, top.id, sub)


def horns(c: Polygraph) -> List[AnodyneGenerator]:
    """All horn inclusions of a plex, one per admissible codimension-one cell."""
    top = _top_cell(c)
    if top.dim == 0:
        return []
    return [horn(c, x.id) for x in c.cells_of_dim(top.dim - 1) if occurs_once(c, top.id, x.id)]


@dataclass(frozen=True)
class AnodyneStep:
    """One pushout of a horn inclusion: the cell x and its filler theta."""
    cell: int
    filler: int


def _step_ok(p: Polygraph, members: Set[int], x: int, theta: int) -> bool:
    if p.dim_of(theta) != p.dim_of(x) + 1 or not occurs_once(p, theta, x):
        return False
    grown = members | {x, theta}
    for y in (x, theta):
        d = p.dim_of(y)
        if d == 0:
            continue
        for sign in (Sign.MINUS, Sign.PLUS):
            if not pi_cell(p, y, d - 1, sign).support() <= grown:
                return False
    return True


def recognize_anodyne_pushout(sub: SubPolygraph) -> bool:
    """
    Whether the inclusion of sub into its parent is a pushout of a horn.

    The parent must add exactly two cells x and theta of dimensions n and
    n + 1, with x occurring exactly once in exactly one boundary of theta.
    """
    ok, _ = closure_check(sub)
    if not ok:
        return False
    missing = sorted(sub.complement(), key=sub.parent.dim_of)
    if len(missing) != 2:
        return False
    x, theta = missing
    return _step_ok(sub.parent, set(sub.members), x, theta)


def anodyne_steps(sub: SubPolygraph) -> Optional[List[AnodyneStep]]:
    """
    Split an extension into successive horn pushouts.

    Returns:
        The steps in order, each one recognized by recognize_anodyne_pushout,
        or None when no such decomposition exists
    """
    ok, _ = closure_check(sub)
    if not ok:
        return None
    p = sub.parent
    remaining = set(sub.complement())
    if len(remaining) % 2:
        return None

    def search(members: Set[int], rest: Set[int]) -> Optional[List[AnodyneStep]]:
        if not rest:
            return []
        for theta in sorted(rest, key=lambda i: (-p.dim_of(i), i)):
            for x in sorted(rest - {theta}):
                if not _step_ok(p, members, x, theta):
                    continue
                tail = search(members | {x, theta}, rest - {x, theta})
                if tail is not None:
                    return [AnodyneStep(x, theta)] + tail
        return None

    steps = search(set(sub.members), remaining)
    LOGGER.debug("Anodyne decomposition of %d cells: %s", len(remaining), steps)
    return steps


def pushout_product(i: SubPolygraph, j: SubPolygraph) -> SubPolygraph:
    """
    The corner map of two inclusions A <= X and B <= Y.

    Returns:
        The sub-polygraph of X (x) Y made of the cells x (x) y with x in A
        or y in B

    Raises:
        NotSteinerRepresentable: If the tensor product cannot be built
        ClosureViolation: If the corner is not a sub-polygraph
    """
    x, y = i.parent, j.parent
    result = build_tensor(x, y)
    members = [
        cell_id
        for key, cell_id in result.cells.items()
        if isinstance(key, TensorCell) and (key.left in i.members or key.right in j.members)
    ]
    corner = SubPolygraph.of(result.polygraph, members)
    ok, errors = closure_check(corner)
    if not ok:
        raise ClosureViolation("; ".join(errors))
    LOGGER.debug("Corner map misses %d of %d cells", len(corner.complement()), len(result.polygraph))
    return corner


def cylinder_Dprime() -> Polygraph:
    """
    The polygraph D'_*.

    Cells: the 0-cells * and t, the 1-cells w: t -> * and p: * -> *, and
    the 2-cell theta: w #_0 p -> w.
    """
    b = PolygraphBuilder()
    star = b.add("*")
    t = b.add("t")
    w = b.add("w", Gen(t), Gen(star))
    p = b.add("p", Gen(star), Gen(star))
    b.add("θ", Compose(Gen(w), Gen(p), 0), Gen(w), dim=2)
    return b.build(ClassTag.POSITIVE)


def cylinder_Dprime_base() -> SubPolygraph:
    """The point * inside D'_*."""
    d = cylinder_Dprime()
    return SubPolygraph.of(d, [d.cell_by_name("*").id])


def cylinder_relative(c: Polygraph) -> Polygraph:
    """
    The relative cylinder on a plex.

    The boundary of c, two copies c_1 and c_2 of its top cell with the same
    source and target, and a cell theta: c_1 -> c_2. For D_0 this is the
    interval.
    """
    top = _top_cell(c)
    base = c.restrict((x for x in c.ids if x != top.id), ClassTag.POSITIVE)
    b = PolygraphBuilder(base)
    name = top.label
    c1 = b.add(f"{name}_1", top.src, top.tgt, dim=top.dim)
    c2 = b.add(f"{name}_2", top.src, top.tgt, dim=top.dim)
    b.add("θ", Gen(c1), Gen(c2), dim=top.dim + 1)
    return b.build(ClassTag.POSITIVE)


def cylinder_end(cyl: Polygraph) -> SubPolygraph:
    """The copy c_1 together with the boundary, inside a relative cylinder."""
    theta = _top_cell(cyl)
    c2 = theta.tgt.cell  # type: ignore[union-attr]
    return SubPolygraph.of(cyl, (x for x in cyl.ids if x not in (c2, theta.id)))
