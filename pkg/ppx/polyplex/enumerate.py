"""
Enumeration of small regular plexes and polyplexes.

Generation follows the inductive construction, one dimension at a time:
the n-plexes are glued from parallel pairs of spherical (n-1)-polyplexes,
and the n-polyplexes are the closure of everything built so far under
composition. Shapes are interned, so every item appears once up to
isomorphism with universal arrow.
"""

import logging
from enum import Enum
from typing import Dict, Iterator, List, Optional, Union

from ppx.config import DEFAULT_BOUNDS, Bounds
from ppx.core.polygraph import Polygraph
from ppx.core.terms import Sign
from ppx.errors import BoundExceeded, BoundaryMismatch
from ppx.polyplex import shape as shapes
from ppx.polyplex.classify import Classification, classify_cell
from ppx.polyplex.polyplex import Polyplex
from ppx.polyplex.regularity import shape_is_spherical
from ppx.polyplex.shape import REGISTRY, Shape

LOGGER = logging.getLogger(__name__)


class EnumerationKind(Enum):
    """Which items an enumeration yields."""
    PLEX = "plex"
    POLYPLEX = "polyplex"
    SPHERICAL = "spherical-polyplex"


def _composite_size(a: Shape, b: Shape, k: int) -> int:
    return a.size + b.size - shapes.boundary(a, k, Sign.PLUS)[0].size


def _shared_size(s: Shape) -> int:
    if s.dim == 0:
        return 0
    return len(
        shapes.boundary_cells(s, s.dim - 1, Sign.MINUS) | shapes.boundary_cells(s, s.dim - 1, Sign.PLUS)
    )


def _composable(a: Shape, b: Shape, k: int) -> bool:
    return (
        a.dim > k
        and b.dim > k
        and shapes.boundary(a, k, Sign.PLUS)[0] is shapes.boundary(b, k, Sign.MINUS)[0]
    )


def _close(known: Dict[int, Shape], fresh: List[Shape], max_cells: int) -> None:
    queue = list(fresh)
    while queue:
        a = queue.pop()
        for b in list(known.values()):
            for left, right in ((a, b), (b, a)):
                for k in range(max(left.dim, right.dim)):
                    if not _composable(left, right, k) or _composite_size(left, right, k) > max_cells:
                        continue
                    c = shapes.compose(left, right, k)[0]
                    if c.sid not in known:
                        known[c.sid] = c
                        queue.append(c)


def _generate(dim: int, max_cells: int) -> List[Shape]:
    memo = REGISTRY.memo("enumerate")
    key = (dim, max_cells)
    if key in memo:
        return memo[key]
    known: Dict[int, Shape] = {}
    point = shapes.point()
    known[point.sid] = point
    for n in range(1, dim + 1):
        spheres = [s for s in known.values() if s.dim == n - 1 and shape_is_spherical(s)]
        plexes: List[Shape] = []
        for s in spheres:
            for t in spheres:
                if s.size + t.size + 1 > max_cells + _shared_size(s):
                    continue
                try:
                    p = shapes.plex(s, t)[0]
                except BoundaryMismatch:
                    continue
                if p.size <= max_cells and p.sid not in known:
                    known[p.sid] = p
                    plexes.append(p)
        LOGGER.debug("Dimension %d: %d new plexes", n, len(plexes))
        _close(known, plexes, max_cells)
    result = sorted(known.values(), key=lambda s: (s.dim, s.size, s.digest))
    memo[key] = result
    LOGGER.info("Enumerated %d shapes up to dimension %d with at most %d cells", len(result), dim, max_cells)
    return result


def enumerate_polyplexes(
    dim: int,
    max_cells: int,
    kind: Union[EnumerationKind, str] = EnumerationKind.POLYPLEX,
    bounds: Optional[Bounds] = None,
) -> Iterator[Polyplex]:
    """
    Stream every regular polyplex up to a dimension and a size.

    Args:
        dim: Largest dimension
        max_cells: Largest number of cells
        kind: "plex", "polyplex" or "spherical-polyplex"
        bounds: Configured limits (defaults to DEFAULT_BOUNDS)

    Yields:
        Polyplexes sorted by (dimension, size, digest)

    Raises:
        BoundExceeded: If dim or max_cells is above the configured bounds
    """
    bounds = bounds or DEFAULT_BOUNDS
    kind = EnumerationKind(kind)
    if dim < 0 or dim > bounds.max_dim:
        raise BoundExceeded(f"Enumeration dimension {dim} exceeds bound {bounds.max_dim}")
    if max_cells > bounds.max_cells:
        raise BoundExceeded(f"Enumeration size {max_cells} exceeds bound {bounds.max_cells}")
    for s in _generate(dim, max_cells):
        if kind is EnumerationKind.PLEX and not s.is_plex():
            continue
        if kind is EnumerationKind.SPHERICAL and not shape_is_spherical(s):
            continue
        yield Polyplex.of(s)


def occurrences(shape: Shape, p: Polygraph) -> List[Classification]:
    """
    Polygraphic maps from a plex into a polygraph.

    Such a map is determined by the cell receiving the top cell, so the
    occurrences are the classifications of the cells whose plex is shape.
    """
    memo = p._cache.setdefault("occurrences", {})
    if shape.sid not in memo:
        found = []
        for cell in p:
            c = classify_cell(p, cell.id)
            if c.shape is shape:
                found.append(c)
        memo[shape.sid] = found
    return memo[shape.sid]
