"""
Polygraphs built from globular groups: tensor products, cones, globes,
orientals and cubes.

The generating cells of the result are the basis elements of the group.
They are added one grade at a time; the source and target of each cell
are extracted from its projections over the cells already present. The
linearization of the result is compared with the group at the end.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, Hashable, Optional, Tuple

from ppx.config import DEFAULT_BOUNDS, Bounds
from ppx.core.algebra import boundary, dimension
from ppx.core.morphism import PolygraphMorphism
from ppx.core.polygraph import Cell, ClassTag, Polygraph, PolygraphBuilder
from ppx.core.terms import SIGNS, Gen, Sign, Term
from ppx.errors import BoundExceeded, ExtractionFailed, NotSteinerRepresentable
from ppx.linearization.globular import GlobularGroup, linearize, to_double_sequence
from ppx.linearization.vectors import Vector
from ppx.steiner.cone import ConeCell, ConeKind, cone_group
from ppx.steiner.extract import Extractor
from ppx.steiner.tensor import TensorCell, tensor_globular, tensor_pi

LOGGER = logging.getLogger(__name__)


@dataclass
class ConstructionResult:
    """
    A polygraph built from a globular group.

    Attributes:
        polygraph: The polygraph
        cells: Cell id of every basis element of the group
        group: The globular group it was built from
    """
    polygraph: Polygraph
    cells: Dict[Hashable, int]
    group: GlobularGroup

    def cell(self, key: Hashable) -> Cell:
        """The cell of a basis element."""
        return self.polygraph.cell(self.cells[key])

    def key_of(self, cell_id: int) -> Hashable:
        """The basis element of a cell."""
        for key, i in self.cells.items():
            if i == cell_id:
                return key
        raise KeyError(cell_id)


def polygraph_from_group(
    group: GlobularGroup,
    name_of: Callable[[Hashable], str] = str,
    typed: bool = True,
) -> ConstructionResult:
    """
    Realize a globular group as a polygraph.

    Args:
        group: Globular group whose basis elements become cells
        name_of: Display name of each cell
        typed: Check every composite of the extracted boundaries

    Returns:
        The construction result

    Raises:
        NotSteinerRepresentable: If a boundary cannot be extracted or the
            result does not linearize back to the group
    """
    builder = PolygraphBuilder()
    ids: Dict[Hashable, int] = {}
    for n in range(group.dim + 1):
        ex: Optional[Extractor] = None
        if n > 0:
            ex = Extractor(builder.build(ClassTag.POSITIVE), typed=typed)
        for b in group.basis(n):
            if ex is None:
                ids[b] = builder.add(name_of(b), dim=0)
                continue
            faces = []
            for sign in SIGNS:
                v = group.pi_basis(b, n - 1, sign).map_keys(ids.__getitem__)
                try:
                    faces.append(ex.extract(to_double_sequence(ex.group, v)))
                except ExtractionFailed as e:
                    side = "source" if sign is Sign.MINUS else "target"
                    raise NotSteinerRepresentable(f"Cannot extract the {side} of {name_of(b)}: {e}") from e
            ids[b] = builder.add(name_of(b), faces[0], faces[1], dim=n)
        LOGGER.debug("Grade %d: %d cells", n, len(group.basis(n)))
    result = builder.build(ClassTag.POSITIVE)
    expected = group.rename(ids.__getitem__)
    got = linearize(result)
    if not got.same_as(expected, check_augmentation=group.augmentation is not None):
        details = "; ".join(got.mismatches(expected))
        raise NotSteinerRepresentable(f"Built polygraph does not linearize to the group: {details}")
    return ConstructionResult(result, ids, group)


def build_tensor(x: Polygraph, y: Polygraph) -> ConstructionResult:
    """
    Gray tensor product of two polygraphs.

    The cells are the pairs x (x) y, named "x⊗y", with
    delta(x (x) y) = delta(x) (x) delta(y).

    Raises:
        NotSteinerRepresentable: If a boundary cannot be extracted
    """
    group = tensor_globular(linearize(x), linearize(y))
    xn, yn = x.names(), y.names()
    result = polygraph_from_group(group, lambda c: f"{xn[c.left]}⊗{yn[c.right]}")
    LOGGER.info("Tensor product built with grades %s", result.polygraph.grades())
    return result


def tensor_polygraph(x: Polygraph, y: Polygraph) -> Polygraph:
    """The polygraph X (x) Y."""
    return build_tensor(x, y).polygraph


def _cone_name(names: Dict[int, str]) -> Callable[[ConeCell], str]:
    def name(c: ConeCell) -> str:
        if c.kind is ConeKind.APEX:
            return "*"
        if c.kind is ConeKind.T:
            return f"T{names[c.cell]}"
        return names[c.cell]

    return name


def build_cone(x: Polygraph) -> ConstructionResult:
    """
    Cone C X: X, an apex * and a cell T x of dimension dim x + 1 per cell.

    Raises:
        NotSteinerRepresentable: If a boundary cannot be extracted
    """
    result = polygraph_from_group(cone_group(linearize(x)), _cone_name(x.names()))
    LOGGER.info("Cone built with grades %s", result.polygraph.grades())
    return result


def cone_polygraph(x: Polygraph) -> Polygraph:
    """The polygraph C X."""
    return build_cone(x).polygraph


def globe(n: int) -> Polygraph:
    """
    The globe D_n.

    Cells "k-" and "k+" for k < n and the top cell "n"; D_0 is the point "0".
    """
    if n < 0:
        raise ValueError(f"Globe dimension must be non-negative, got {n}")
    b = PolygraphBuilder()
    if n == 0:
        b.add("0")
        return b.build(ClassTag.REGULAR)
    pair = (b.add("0-"), b.add("0+"))
    for k in range(1, n):
        pair = (
            b.add(f"{k}-", Gen(pair[0]), Gen(pair[1]), dim=k),
            b.add(f"{k}+", Gen(pair[0]), Gen(pair[1]), dim=k),
        )
    b.add(str(n), Gen(pair[0]), Gen(pair[1]), dim=n)
    return b.build(ClassTag.REGULAR)


def globe_boundary(n: int) -> Polygraph:
    """The sphere: D_n without its top cell."""
    d = globe(n)
    return d.restrict((c.id for c in d if c.dim < n), ClassTag.REGULAR)


def subset_name(vertices: Tuple[int, ...]) -> str:
    """Display name of an oriental cell, such as "[0,2,3]"."""
    return "[" + ",".join(str(v) for v in vertices) + "]"


def _shift_name(name: str) -> Tuple[int, ...]:
    return tuple(int(v) + 1 for v in name.strip("[]").split(","))


@lru_cache(maxsize=None)
def _oriental(n: int) -> Polygraph:
    if n == 0:
        b = PolygraphBuilder()
        b.add(subset_name((0,)))
        return b.build(ClassTag.REGULAR)
    previous = _oriental(n - 1)
    result = build_cone(previous)
    names: Dict[int, str] = {}
    for key, cell_id in result.cells.items():
        if key.kind is ConeKind.APEX:
            names[cell_id] = subset_name((0,))
        elif key.kind is ConeKind.BASE:
            names[cell_id] = subset_name(_shift_name(previous.names()[key.cell]))
        else:
            names[cell_id] = subset_name((0,) + _shift_name(previous.names()[key.cell]))
    cells = [Cell(c.id, c.dim, c.src, c.tgt, names[c.id]) for c in result.polygraph]
    LOGGER.info("Oriental %d built with grades %s", n, result.polygraph.grades())
    return Polygraph(cells, ClassTag.REGULAR)


def oriental(n: int, bounds: Optional[Bounds] = None) -> Polygraph:
    """
    Street's oriental O(n), built as the iterated cone on the point.

    Cells are named by the subsets of {0..n} they correspond to, the apex
    of each cone becoming vertex 0.

    Raises:
        BoundExceeded: If n is above the configured bound
    """
    bounds = bounds or DEFAULT_BOUNDS
    if n < 0:
        raise ValueError(f"Oriental dimension must be non-negative, got {n}")
    if n > bounds.max_oriental:
        raise BoundExceeded(f"Oriental {n} exceeds bound {bounds.max_oriental}")
    return _oriental(n)


def oriental_cell(n: int, vertices: Tuple[int, ...]) -> Cell:
    """The cell of O(n) for a strictly increasing tuple of vertices."""
    return oriental(n).cell_by_name(subset_name(vertices))


def oriental_subsets(n: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    """The (k+1)-subsets of {0..n}, in lexicographic order."""
    return tuple(combinations(range(n + 1), k + 1))


@lru_cache(maxsize=None)
def _cube(n: int) -> Polygraph:
    if n == 0:
        return globe(0)
    return tensor_polygraph(_cube(n - 1), globe(1)).with_class(ClassTag.REGULAR)


def cube(n: int, bounds: Optional[Bounds] = None) -> Polygraph:
    """
    The cube D_1 (x) ... (x) D_1 with n factors.

    Raises:
        BoundExceeded: If n is above the configured bound
    """
    bounds = bounds or DEFAULT_BOUNDS
    if n < 0:
        raise ValueError(f"Cube dimension must be non-negative, got {n}")
    if n > bounds.max_oriental:
        raise BoundExceeded(f"Cube {n} exceeds bound {bounds.max_oriental}")
    return _cube(n)


@dataclass
class GlobeToTensor:
    """
    The canonical linear map Z D_{n+m} -> Z D_n (x) Z D_m.

    Attributes:
        domain: The globe D_{n+m}
        codomain: The tensor of the linearizations of D_n and D_m
        images: Image of each cell of the domain
    """
    domain: Polygraph
    codomain: GlobularGroup
    images: Dict[int, Vector]

    def apply(self, v: Dict[int, int]) -> Vector:
        """Image of a combination of cells of the domain."""
        result = Vector()
        for x, c in v.items():
            result.iadd_coef(c, self.images[x])
        return result

    def preserves_sigma(self) -> bool:
        """Whether sigma of the globe goes to sigma of the tensor."""
        sigma = {c.id: -1 if c.dim % 2 else 1 for c in self.domain}
        target = Vector((b, -1 if n % 2 else 1) for b, n in self.codomain.grades.items())
        return self.apply(sigma) == target

    def preserves_alternate_positivity(self) -> bool:
        """Whether each signed cell goes to a combination of coefficients of sign (-1)^grade."""
        grades = self.codomain.grades
        for cell in self.domain:
            sign = -1 if cell.dim % 2 else 1
            for b, c in self.images[cell.id].items():
                if sign * c * (-1 if grades[b] % 2 else 1) <= 0:
                    return False
        return True


def globe_to_tensor(n: int, m: int) -> GlobeToTensor:
    """
    The linear map picking the top cell t_n (x) t_m.

    The cell "k-" or "k+" of D_{n+m} goes to pi_k^-(t_n (x) t_m) or
    pi_k^+(t_n (x) t_m), and the top cell to t_n (x) t_m.
    """
    dn, dm, domain = globe(n), globe(m), globe(n + m)
    gn, gm = linearize(dn), linearize(dm)
    tn, tm = dn.cells_of_dim(n)[0].id, dm.cells_of_dim(m)[0].id
    images: Dict[int, Vector] = {}
    for cell in domain:
        if cell.dim == n + m:
            images[cell.id] = Vector({TensorCell(tn, tm): 1})
        else:
            sign = Sign.MINUS if cell.label.endswith("-") else Sign.PLUS
            images[cell.id] = tensor_pi(gn, gm, tn, tm, cell.dim, sign)
    return GlobeToTensor(domain, tensor_globular(gn, gm), images)


def globe_arrow(p: Polygraph, t: Term) -> PolygraphMorphism:
    """
    The morphism D_n -> p* picking an n-arrow t.

    The cells "k-" and "k+" go to the k-source and k-target of t.
    """
    n = dimension(p, t)
    d = globe(n)
    images: Dict[int, Term] = {}
    for cell in d:
        if cell.dim == n:
            images[cell.id] = t
        else:
            sign = Sign.MINUS if cell.label.endswith("-") else Sign.PLUS
            images[cell.id] = boundary(p, t, cell.dim, sign)
    return PolygraphMorphism(d, p, images)
