"""
Generic morphisms and the (generic, polygraphic) factorization.

Every morphism F: X* -> Y* between free infinity-categories on positive
polygraphs factors as a generic morphism X* -> M* followed by a
polygraphic one M -> Y. M is built cell by cell: each cell of X is sent
to the polyplex classifying its image, glued along the already built
images of its source and target.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ppx.core.algebra import dimension, normalize
from ppx.core.morphism import PolygraphMorphism, eval_morphism, identity_morphism
from ppx.core.polygraph import Cell, ClassTag, Polygraph
from ppx.core.terms import Gen, Sign, Term, rename, substitute
from ppx.errors import BoundaryMismatch, DecompositionMismatch
from ppx.linearization.delta import preserves_alternate_positivity, preserves_sigma
from ppx.polyplex import shape as shapes
from ppx.polyplex.classify import Classification, classify_cell, classify_term
from ppx.polyplex.regularity import is_regular, is_regular_morphism
from ppx.polyplex.shape import REGISTRY

LOGGER = logging.getLogger(__name__)


@dataclass
class GenericFactorization:
    """
    A morphism written as polygraphic after generic.

    Attributes:
        generic: The generic part X* -> M*
        polygraphic: The polygraphic part M -> Y
    """
    generic: PolygraphMorphism
    polygraphic: PolygraphMorphism

    @property
    def middle(self) -> Polygraph:
        """The intermediate polygraph M."""
        return self.generic.codomain


class _MiddleBuilder:
    """
    Cells of the middle polygraph and their labels in the codomain.

    Gluing can force two cells built for different faces to coincide. They
    are merged in a union-find; only representatives survive a snapshot.
    """

    def __init__(self, codomain: Polygraph):
        self.codomain = codomain
        self.cells: List[Cell] = []
        self.labels: Dict[int, int] = {}
        self.used_names: set = set()
        self.parent: Dict[int, int] = {}

    def add(self, dim: int, src: Optional[Term], tgt: Optional[Term], label: int) -> int:
        cid = len(self.cells)
        name = self.codomain.cell(label).label
        if name in self.used_names:
            name = f"{name}_{cid}"
        self.used_names.add(name)
        self.cells.append(Cell(cid, dim, src, tgt, name))
        self.labels[cid] = label
        self.parent[cid] = cid
        return cid

    def find(self, cid: int) -> int:
        while self.parent[cid] != cid:
            self.parent[cid] = self.parent[self.parent[cid]]
            cid = self.parent[cid]
        return cid

    def merge(self, a: int, b: int) -> bool:
        """
        Identify two cells, and recursively their sources and targets.

        Returns:
            Whether anything changed

        Raises:
            BoundaryMismatch: If the cells differ in dimension, label or boundary shape
        """
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        keep, drop = self.cells[min(ra, rb)], self.cells[max(ra, rb)]
        if keep.dim != drop.dim or self.labels[keep.id] != self.labels[drop.id]:
            raise BoundaryMismatch(f"Cannot glue {keep.label} and {drop.label}: different cells of the codomain")
        self.parent[drop.id] = keep.id
        LOGGER.debug("Gluing %s onto %s in the middle polygraph", drop.label, keep.label)
        if keep.dim > 0:
            self._unify(keep.src, drop.src)  # type: ignore[arg-type]
            self._unify(keep.tgt, drop.tgt)  # type: ignore[arg-type]
        return True

    def _unify(self, s: Term, t: Term) -> None:
        m = self.snapshot()
        s, t = normalize(m, rename(s, self.find)), normalize(m, rename(t, self.find))
        if s == t:
            return
        cs, ct = classify_term(m, s), classify_term(m, t)
        if cs.shape.sid != ct.shape.sid:
            raise BoundaryMismatch("Glued cells have boundaries of different shapes")
        for i, j in zip(cs.labels, ct.labels):
            self.merge(i, j)

    def snapshot(self) -> Polygraph:
        cells = [
            Cell(
                c.id,
                c.dim,
                rename(c.src, self.find) if c.src is not None else None,
                rename(c.tgt, self.find) if c.tgt is not None else None,
                c.name,
            )
            for c in self.cells
            if self.find(c.id) == c.id
        ]
        return Polygraph(cells, ClassTag.POSITIVE)


def _identify(
    builder: _MiddleBuilder,
    assignment: Dict[int, int],
    cell_map: Tuple[int, ...],
    found: Classification,
    expected_sid: int,
    what: str,
) -> bool:
    if found.shape.sid != expected_sid:
        raise BoundaryMismatch(f"Image of {what} does not match its classified boundary")
    merged = False
    for i, m in zip(cell_map, found.labels):
        previous = assignment.setdefault(i, m)
        if previous != m:
            merged = builder.merge(previous, m) or merged
    return merged


def generic_factorization(f: PolygraphMorphism) -> GenericFactorization:
    """
    Factor a morphism into a generic part followed by a polygraphic part.

    When the images of two faces of a cell meet in a cell of its plex that
    was built twice, the two copies are glued, as in the colimit defining M.

    Args:
        f: Morphism between positive polygraphs

    Returns:
        The factorization; polygraphic inputs give (identity, f)

    Raises:
        BoundaryMismatch: If f is not compatible with the boundaries of X
    """
    x, y = f.domain, f.codomain
    if f.is_polygraphic():
        return GenericFactorization(identity_morphism(x), f)

    builder = _MiddleBuilder(y)
    images: Dict[int, Term] = {}
    middle = builder.snapshot()
    current_dim = 0
    for cell in x:
        if cell.dim != current_dim:
            middle = builder.snapshot()
            current_dim = cell.dim
        image = eval_morphism(f, Gen(cell.id))
        if cell.dim == 0:
            images[cell.id] = Gen(builder.add(0, None, None, image.cell))  # type: ignore[union-attr]
            continue
        g_src = normalize(middle, substitute(cell.src, images))
        if dimension(y, image) < cell.dim:
            images[cell.id] = g_src
            continue
        found = classify_term(y, image)
        s = found.shape
        assignment: Dict[int, int] = {}
        merged = False
        for sign, face_term in ((Sign.MINUS, g_src), (Sign.PLUS, substitute(cell.tgt, images))):
            b, cell_map = shapes.boundary(s, s.dim - 1, sign)
            face = classify_term(middle, normalize(middle, face_term))
            merged = _identify(builder, assignment, cell_map, face, b.sid, cell.label) or merged
        if merged:
            assignment = {i: builder.find(m) for i, m in assignment.items()}
            images = {c: rename(t, builder.find) for c, t in images.items()}
            middle = builder.snapshot()
        for i in sorted(set(range(s.size)) - set(assignment), key=lambda j: (s.cells[j].dim, j)):
            sc = s.cells[i]
            if sc.src is None:
                assignment[i] = builder.add(0, None, None, found.labels[i])
                continue
            src_t = rename(REGISTRY.get(sc.src.sid).universal, lambda n: assignment[sc.src.image[n]])
            tgt_t = rename(REGISTRY.get(sc.tgt.sid).universal, lambda n: assignment[sc.tgt.image[n]])
            assignment[i] = builder.add(sc.dim, src_t, tgt_t, found.labels[i])
        images[cell.id] = rename(s.universal, assignment)

    m = builder.snapshot()
    images = {c: rename(t, builder.find) for c, t in images.items()}
    generic = PolygraphMorphism(x, m, images)
    polygraphic = PolygraphMorphism.from_cell_map(m, y, {c: builder.labels[c] for c in m.ids})
    LOGGER.debug("Generic factorization through a polygraph of grades %s", m.grades())
    return GenericFactorization(generic, polygraphic)


def _plex_labels_injective(p: Polygraph) -> bool:
    for cell in p:
        labels = classify_cell(p, cell.id).labels
        if len(set(labels)) != len(labels):
            return False
    return True


def is_generic(f: PolygraphMorphism, allow_fallback: bool = True) -> Optional[bool]:
    """
    Decide whether a morphism is generic.

    Regular morphisms between regular polygraphs are generic iff they
    preserve sigma. When every plex of X embeds into X, preserving sigma
    and alternate-positivity is enough. Otherwise the factorization is
    built and its polygraphic part is tested for being an isomorphism.

    Args:
        f: The morphism
        allow_fallback: Whether the factorization may be used

    Returns:
        True or False, or None when only the fallback could decide and it
        was disabled
    """
    x, y = f.domain, f.codomain
    if is_regular_morphism(f):
        return preserves_sigma(f)
    if is_regular(x) and is_regular(y) and _plex_labels_injective(x):
        if preserves_sigma(f) and preserves_alternate_positivity(f):
            return True
    if not allow_fallback:
        return None
    return generic_factorization(f).polygraphic.is_bijective()


def syntactic_lift(
    f: PolygraphMorphism, v: Term, u: Term, w: Term, k: int
) -> Tuple[Term, Term]:
    """
    Lift a decomposition of f(v) to a decomposition of v.

    Args:
        f: Polygraphic morphism X -> Y
        v: Arrow of X
        u: Arrow of Y
        w: Arrow of Y with f(v) = u #_k w

    Returns:
        The unique (u', w') with v = u' #_k w', f(u') = u and f(w') = w

    Raises:
        DecompositionMismatch: If f(v) is not u #_k w
    """
    if not f.is_polygraphic():
        raise DecompositionMismatch("Syntactic lifting needs a polygraphic morphism")
    x, y = f.domain, f.codomain
    cv = classify_term(x, normalize(x, v))
    cu = classify_term(y, normalize(y, u))
    cw = classify_term(y, normalize(y, w))
    try:
        composite, ma, mb = shapes.compose(cu.shape, cw.shape, k)
    except BoundaryMismatch as e:
        raise DecompositionMismatch(f"Requested factors are not composable: {e}") from None
    if composite is not cv.shape:
        raise DecompositionMismatch("Requested split does not have the shape of the arrow")
    cells = f.cell_map()
    for i, j in enumerate(ma):
        if cells[cv.labels[j]] != cu.labels[i]:
            raise DecompositionMismatch("Requested first factor does not match the image")
    for i, j in enumerate(mb):
        if cells[cv.labels[j]] != cw.labels[i]:
            raise DecompositionMismatch("Requested second factor does not match the image")
    u_lift = rename(cu.shape.universal, lambda i: cv.labels[ma[i]])
    w_lift = rename(cw.shape.universal, lambda i: cv.labels[mb[i]])
    return normalize(x, u_lift), normalize(x, w_lift)
