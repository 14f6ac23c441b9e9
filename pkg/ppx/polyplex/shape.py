"""
Canonical shapes of polyplexes.

A shape is a polyplex together with its universal arrow, stored with its
cells in a canonical order: the source is laid out first, then top cells
one by one (each followed by its target face), then whatever the target
adds. Two constructions of isomorphic polyplexes produce the same
encoding, so equality of shapes is equality of interned ids and the
unique isomorphism of classification becomes the identity on indices.

Faces refer to other shapes by id; a face's image lists, for every cell
of the face shape, the index of the corresponding cell in this shape.
"""

import hashlib
import logging
import threading
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ppx.core.polygraph import Cell, ClassTag, Polygraph
from ppx.core.terms import SIGNS, Compose, Gen, Sign, Term, rename
from ppx.errors import BoundaryMismatch, UnsupportedClass

LOGGER = logging.getLogger(__name__)

CellMap = Tuple[int, ...]


@dataclass(frozen=True)
class Face:
    """A boundary arrow: a shape plus the image of its cells."""
    sid: int
    image: CellMap


@dataclass(frozen=True)
class ShapeCell:
    """A cell of a shape, with its source and target faces."""
    dim: int
    src: Optional[Face] = None
    tgt: Optional[Face] = None


@dataclass(frozen=True, eq=False)
class Shape:
    """
    An interned polyplex with universal arrow.

    Attributes:
        sid: Registry id, unique per process
        dim: Dimension of the universal arrow
        cells: Cells in canonical order
        source: Source face of the universal arrow (None in dimension 0)
        target: Target face of the universal arrow (None in dimension 0)
        universal: Universal arrow as a term over cell indices
        digest: Stable content hash, equal across processes
    """
    sid: int
    dim: int
    cells: Tuple[ShapeCell, ...]
    source: Optional[Face]
    target: Optional[Face]
    universal: Term
    digest: str

    @property
    def size(self) -> int:
        """Number of cells."""
        return len(self.cells)

    def top_cells(self) -> List[int]:
        """Indices of the cells of maximal dimension."""
        return [i for i, c in enumerate(self.cells) if c.dim == self.dim]

    def is_plex(self) -> bool:
        """True when the universal arrow is a single top generator."""
        tops = self.top_cells()
        return len(tops) == 1 and self.universal == Gen(tops[0])

    def grades(self) -> Tuple[int, ...]:
        """Number of cells per dimension."""
        counts = [0] * (self.dim + 1)
        for c in self.cells:
            counts[c.dim] += 1
        return tuple(counts)

    def face(self, sign: Sign) -> Face:
        """Source or target face of the universal arrow."""
        face = self.source if sign is Sign.MINUS else self.target
        if face is None:
            raise ValueError("A point has no boundary face")
        return face

    def __repr__(self) -> str:
        return f"Shape(sid={self.sid}, dim={self.dim}, grades={self.grades()})"


class ShapeRegistry:
    """Thread-safe intern table for shapes and memoized shape operations."""

    def __init__(self):
        self._lock = threading.RLock()
        self._shapes: List[Shape] = []
        self._by_digest: Dict[str, Shape] = {}
        self._memo: Dict[str, Dict[Any, Any]] = {}

    def get(self, sid: int) -> Shape:
        """Shape with the given id."""
        return self._shapes[sid]

    def by_digest(self, digest: str) -> Optional[Shape]:
        """Shape with the given content hash, if interned."""
        return self._by_digest.get(digest)

    def memo(self, name: str) -> Dict[Any, Any]:
        """Named memo table shared by all shapes."""
        with self._lock:
            return self._memo.setdefault(name, {})

    def intern(
        self,
        dim: int,
        cells: Tuple[ShapeCell, ...],
        source: Optional[Face],
        target: Optional[Face],
        universal: Term,
    ) -> Shape:
        """Return the unique shape with this encoding, creating it if needed."""
        digest = _digest(self.encode(dim, cells, source, target))
        with self._lock:
            existing = self._by_digest.get(digest)
            if existing is not None:
                return existing
            shape = Shape(len(self._shapes), dim, cells, source, target, universal, digest)
            self._shapes.append(shape)
            self._by_digest[digest] = shape
            LOGGER.debug("Interned shape %d of dim %d with %d cells", shape.sid, dim, len(cells))
            return shape

    def encode(
        self,
        dim: int,
        cells: Tuple[ShapeCell, ...],
        source: Optional[Face],
        target: Optional[Face],
    ) -> tuple:
        """Process-independent encoding of a shape."""
        return (
            dim,
            tuple((c.dim, self._face_key(c.src), self._face_key(c.tgt)) for c in cells),
            self._face_key(source),
            self._face_key(target),
        )

    def _face_key(self, face: Optional[Face]) -> tuple:
        if face is None:
            return ()
        return (self._shapes[face.sid].digest, face.image)

    def __len__(self) -> int:
        return len(self._shapes)


def _digest(key: tuple) -> str:
    return hashlib.sha256(repr(key).encode("utf-8")).hexdigest()


REGISTRY = ShapeRegistry()


class _Draft:
    """Mutable gluing workspace that ends in an interned shape."""

    def __init__(self):
        self.dims: List[int] = []
        self.faces: List[Optional[Tuple[Face, Face]]] = []
        self.parent: List[int] = []

    def add_shape(self, shape: Shape) -> List[int]:
        base = len(self.dims)
        for cell in shape.cells:
            self.dims.append(cell.dim)
            if cell.src is None:
                self.faces.append(None)
            else:
                self.faces.append((_shift(cell.src, base), _shift(cell.tgt, base)))
            self.parent.append(len(self.parent))
        return list(range(base, base + shape.size))

    def add_cell(self, dim: int, src: Face, tgt: Face) -> int:
        self.dims.append(dim)
        self.faces.append((src, tgt))
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, node: int) -> int:
        root = node
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[node] != root:
            self.parent[node], node = root, self.parent[node]
        return root

    def glue(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.dims[ra] != self.dims[rb]:
            raise BoundaryMismatch("Cannot glue cells of different dimensions")
        self.parent[max(ra, rb)] = min(ra, rb)

    def _resolve(self, face: Optional[Face]) -> Optional[Face]:
        if face is None:
            return None
        return Face(face.sid, tuple(self.find(n) for n in face.image))

    def finish(
        self,
        dim: int,
        source: Optional[Face],
        target: Optional[Face],
        universal: Term,
    ) -> Tuple[Shape, Dict[int, int]]:
        """Canonically order the glued cells and intern the result."""
        roots = sorted({self.find(n) for n in range(len(self.parent))})
        faces: Dict[int, Optional[Tuple[Face, Face]]] = {}
        for r in roots:
            pair = self.faces[r]
            faces[r] = None if pair is None else (self._resolve(pair[0]), self._resolve(pair[1]))
        source = self._resolve(source)
        target = self._resolve(target)

        order = _Canonicalizer(self.dims, faces, roots, dim, source, target).run()
        pos = {node: i for i, node in enumerate(order)}
        cells = tuple(
            ShapeCell(self.dims[n])
            if faces[n] is None
            else ShapeCell(self.dims[n], _relabel(faces[n][0], pos), _relabel(faces[n][1], pos))
            for n in order
        )
        shape = REGISTRY.intern(
            dim,
            cells,
            _relabel(source, pos) if source is not None else None,
            _relabel(target, pos) if target is not None else None,
            rename(universal, lambda n: pos[self.find(n)]),
        )
        mapping = {n: pos[self.find(n)] for n in range(len(self.parent))}
        return shape, mapping


class _Canonicalizer:
    """Search for the canonical cell order of a glued draft."""

    def __init__(self, dims, faces, roots, dim, source, target):
        self.dims = dims
        self.faces = faces
        self.roots = roots
        self.dim = dim
        self.source = source
        self.target = target

    def run(self) -> List[int]:
        if self.dim == 0:
            if len(self.roots) != 1:
                raise UnsupportedClass("A 0-dimensional shape must be a single point")
            return list(self.roots)
        order: List[int] = []
        seen: Dict[int, int] = {}
        self._visit(order, seen, self.source)
        top = {r for r in self.roots if self.dims[r] == self.dim}
        order = self._complete(order, seen, top)
        if len(order) != len(self.roots):
            raise UnsupportedClass("Some cells are not reachable from the universal arrow")
        return order

    def _visit(self, order: List[int], seen: Dict[int, int], face: Optional[Face]) -> None:
        if face is None:
            return
        for node in face.image:
            if node not in seen:
                seen[node] = len(order)
                order.append(node)

    def _place(self, order, seen, remaining, cell) -> None:
        src, tgt = self.faces[cell]
        self._visit(order, seen, src)
        self._visit(order, seen, tgt)
        seen[cell] = len(order)
        order.append(cell)
        remaining.discard(cell)

    def _complete(self, order: List[int], seen: Dict[int, int], remaining: set) -> List[int]:
        while remaining:
            keys = {}
            for cell in remaining:
                src = self.faces[cell][0]
                if all(n in seen for n in src.image):
                    keys[cell] = (
                        REGISTRY.get(src.sid).digest,
                        tuple(seen[n] for n in src.image),
                    )
            if not keys:
                raise UnsupportedClass("Top cells cannot be ordered from the source")
            best = min(keys.values())
            tied = sorted(c for c, key in keys.items() if key == best)
            if len(tied) > 1:
                branches = []
                for cell in tied:
                    b_order, b_seen, b_rest = list(order), dict(seen), set(remaining)
                    self._place(b_order, b_seen, b_rest, cell)
                    branches.append(self._complete(b_order, b_seen, b_rest))
                return min(branches, key=self._encoding)
            self._place(order, seen, remaining, tied[0])
        self._visit(order, seen, self.target)
        return order

    def _encoding(self, order: List[int]) -> str:
        if len(order) != len(self.roots):
            raise UnsupportedClass("Some cells are not reachable from the universal arrow")
        pos = {node: i for i, node in enumerate(order)}
        cells = tuple(
            ShapeCell(self.dims[n])
            if self.faces[n] is None
            else ShapeCell(self.dims[n], _relabel(self.faces[n][0], pos), _relabel(self.faces[n][1], pos))
            for n in order
        )
        return repr(
            REGISTRY.encode(
                self.dim, cells, _relabel(self.source, pos), _relabel(self.target, pos)
            )
        )


def _shift(face: Face, base: int) -> Face:
    return Face(face.sid, tuple(base + i for i in face.image))


def _relabel(face: Face, pos: Dict[int, int]) -> Face:
    return Face(face.sid, tuple(pos[n] for n in face.image))


def _identity(n: int) -> CellMap:
    return tuple(range(n))


def point() -> Shape:
    """The 0-dimensional shape with a single cell."""
    memo = REGISTRY.memo("point")
    if "point" not in memo:
        draft = _Draft()
        draft.dims.append(0)
        draft.faces.append(None)
        draft.parent.append(0)
        memo["point"] = draft.finish(0, None, None, Gen(0))[0]
    return memo["point"]


def boundary(shape: Shape, k: int, sign: Sign) -> Tuple[Shape, CellMap]:
    """
    The k-dimensional source or target of a shape.

    Returns:
        Tuple of (boundary shape, index in `shape` of each boundary cell)
    """
    if k >= shape.dim:
        return shape, _identity(shape.size)
    memo = REGISTRY.memo("boundary")
    key = (shape.sid, k, sign)
    if key not in memo:
        if k == shape.dim - 1:
            face = shape.face(sign)
            memo[key] = (REGISTRY.get(face.sid), face.image)
        else:
            outer, outer_map = boundary(shape, shape.dim - 1, sign)
            inner, inner_map = boundary(outer, k, sign)
            memo[key] = (inner, tuple(outer_map[i] for i in inner_map))
    return memo[key]


def boundary_cells(shape: Shape, k: int, sign: Sign) -> frozenset:
    """Indices of the cells lying in a boundary of the shape."""
    return frozenset(boundary(shape, k, sign)[1])


def plex(src: Shape, tgt: Shape) -> Tuple[Shape, CellMap, CellMap, int]:
    """
    Plex with one new top cell from `src` to `tgt`.

    Returns:
        Tuple of (plex shape, map of src cells, map of tgt cells, index of the top cell)

    Raises:
        BoundaryMismatch: If src and tgt are not parallel
    """
    if src.dim != tgt.dim:
        raise BoundaryMismatch(f"Source has dim {src.dim} but target has dim {tgt.dim}")
    memo = REGISTRY.memo("plex")
    key = (src.sid, tgt.sid)
    if key in memo:
        return memo[key]
    draft = _Draft()
    ms = draft.add_shape(src)
    mt = draft.add_shape(tgt)
    if src.dim >= 1:
        for sign in SIGNS:
            bs, imap_s = boundary(src, src.dim - 1, sign)
            bt, imap_t = boundary(tgt, tgt.dim - 1, sign)
            if bs is not bt:
                raise BoundaryMismatch("Source and target are not parallel")
            for i, j in zip(imap_s, imap_t):
                draft.glue(ms[i], mt[j])
    src_face = Face(src.sid, tuple(ms))
    tgt_face = Face(tgt.sid, tuple(mt))
    top = draft.add_cell(src.dim + 1, src_face, tgt_face)
    shape, mapping = draft.finish(src.dim + 1, src_face, tgt_face, Gen(top))
    result = (
        shape,
        tuple(mapping[n] for n in ms),
        tuple(mapping[n] for n in mt),
        mapping[top],
    )
    memo[key] = result
    return result


def compose(a: Shape, b: Shape, k: int) -> Tuple[Shape, CellMap, CellMap]:
    """
    Composite a #_k b, glued along the shared k-boundary.

    Returns:
        Tuple of (composite shape, map of a's cells, map of b's cells)

    Raises:
        BoundaryMismatch: If the k-target of a is not the k-source of b
    """
    if k < 0:
        raise ValueError(f"Composition level must be non-negative, got {k}")
    ka, ia = boundary(a, k, Sign.PLUS)
    kb, ib = boundary(b, k, Sign.MINUS)
    if ka is not kb:
        raise BoundaryMismatch(f"Shapes are not composable along dimension {k}")
    if a.dim <= k:
        return b, ib, _identity(b.size)
    if b.dim <= k:
        return a, _identity(a.size), ia
    memo = REGISTRY.memo("compose")
    key = (a.sid, b.sid, k)
    if key in memo:
        return memo[key]

    draft = _Draft()
    ma = draft.add_shape(a)
    mb = draft.add_shape(b)
    for i, j in zip(ia, ib):
        draft.glue(ma[i], mb[j])
    n = max(a.dim, b.dim)
    universal = Compose(rename(a.universal, ma), rename(b.universal, mb), k)
    if k == n - 1:
        source = Face(a.source.sid, tuple(ma[i] for i in a.source.image))
        target = Face(b.target.sid, tuple(mb[i] for i in b.target.image))
    else:
        faces = []
        for sign in SIGNS:
            sa, fa = boundary(a, n - 1, sign)
            sb, fb = boundary(b, n - 1, sign)
            c, ca, cb = compose(sa, sb, k)
            image: List[int] = [0] * c.size
            for j, target_index in enumerate(ca):
                image[target_index] = ma[fa[j]]
            for j, target_index in enumerate(cb):
                image[target_index] = mb[fb[j]]
            faces.append(Face(c.sid, tuple(image)))
        source, target = faces
    shape, mapping = draft.finish(n, source, target, universal)
    result = (shape, tuple(mapping[x] for x in ma), tuple(mapping[x] for x in mb))
    memo[key] = result
    return result


def materialize(shape: Shape) -> Polygraph:
    """
    The underlying polygraph of a shape.

    Cell ids are the canonical indices and cells are named "c0", "c1", ...
    """
    memo = REGISTRY.memo("materialize")
    if shape.sid not in memo:
        cells = []
        for i, c in enumerate(shape.cells):
            if c.src is None:
                cells.append(Cell(i, c.dim, name=f"c{i}"))
            else:
                cells.append(
                    Cell(
                        i,
                        c.dim,
                        rename(REGISTRY.get(c.src.sid).universal, c.src.image),
                        rename(REGISTRY.get(c.tgt.sid).universal, c.tgt.image),
                        f"c{i}",
                    )
                )
        memo[shape.sid] = Polygraph(cells, ClassTag.POSITIVE)
    return memo[shape.sid]


def inner_cells(shape: Shape) -> frozenset:
    """Cells outside of the (dim - 1)-boundary of the shape."""
    if shape.dim == 0:
        return frozenset(range(shape.size))
    outer = boundary_cells(shape, shape.dim - 1, Sign.MINUS) | boundary_cells(
        shape, shape.dim - 1, Sign.PLUS
    )
    return frozenset(range(shape.size)) - outer


def cell_plex(shape: Shape, index: int) -> Tuple[Shape, CellMap]:
    """
    Plex of one cell of a shape.

    Returns:
        Tuple of (plex shape, index in `shape` of each plex cell)
    """
    cell = shape.cells[index]
    if cell.src is None:
        return point(), (index,)
    src = REGISTRY.get(cell.src.sid)
    tgt = REGISTRY.get(cell.tgt.sid)
    p, ms, mt, top = plex(src, tgt)
    image: List[int] = [0] * p.size
    for j, t in enumerate(ms):
        image[t] = cell.src.image[j]
    for j, t in enumerate(mt):
        image[t] = cell.tgt.image[j]
    image[top] = index
    return p, tuple(image)
