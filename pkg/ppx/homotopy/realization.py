"""
Semi-simplicial sets, the realization of regular polygraphs and the
orientals embedding in the other direction.

An n-simplex of R(X) is a cell c of X together with a strictly increasing
chain e_0 -> ... -> e_n of plexes ending at the plex of c. Since the plex
of a regular polygraph embeds, such a chain is a sequence of cells
i_0, ..., i_n of the plex of c with i_n its top cell and each i_j a proper
cell of the plex of i_{j+1}.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Hashable, Iterable, List, Sequence, Tuple

from ppx.config import DEFAULT_BOUNDS
from ppx.core.morphism import PolygraphMorphism
from ppx.core.polygraph import ClassTag, Polygraph, PolygraphBuilder
from ppx.core.terms import rename
from ppx.errors import NotMono, UnsupportedClass
from ppx.polyplex.classify import classify_cell
from ppx.polyplex.regularity import is_regular
from ppx.polyplex.shape import REGISTRY, Shape, cell_plex
from ppx.steiner.construct import oriental, subset_name

LOGGER = logging.getLogger(__name__)

Simplex = Hashable


@dataclass
class SemiSimplicialSet:
    """
    Graded finite sets with face maps.

    Attributes:
        simplices: Labels of the simplices, per dimension
        faces: faces[n][s][i] is the index in dimension n - 1 of d_i of the
            s-th n-simplex; faces[0] is a list of empty tuples
    """
    simplices: List[List[Simplex]]
    faces: List[List[Tuple[int, ...]]]
    _index: List[Dict[Simplex, int]] = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.simplices) != len(self.faces):
            raise ValueError("simplices and faces must have the same number of dimensions")
        for n, (level, level_faces) in enumerate(zip(self.simplices, self.faces)):
            if len(level) != len(level_faces):
                raise ValueError(f"Dimension {n} has {len(level)} simplices but {len(level_faces)} face lists")
            for f in level_faces:
                if len(f) != (n + 1 if n > 0 else 0):
                    raise ValueError(f"A {n}-simplex has {n + 1 if n > 0 else 0} faces, got {len(f)}")
        self._index = [{s: i for i, s in enumerate(level)} for level in self.simplices]

    @property
    def dim(self) -> int:
        """Largest dimension with a simplex, -1 when empty."""
        for n in range(len(self.simplices) - 1, -1, -1):
            if self.simplices[n]:
                return n
        return -1

    @property
    def counts(self) -> Tuple[int, ...]:
        """Number of simplices per dimension."""
        return tuple(len(level) for level in self.simplices[: self.dim + 1])

    def index(self, n: int, simplex: Simplex) -> int:
        """Position of a simplex in dimension n."""
        return self._index[n][simplex]

    def face(self, n: int, s: int, i: int) -> int:
        """d_i of the s-th n-simplex, as an index in dimension n - 1."""
        return self.faces[n][s][i]

    def iterated_face(self, n: int, s: int, vertices: Sequence[int]) -> int:
        """
        Face of an n-simplex spanned by some of its vertices.

        Args:
            n: Dimension of the simplex
            s: Index of the simplex
            vertices: Strictly increasing subset of 0..n

        Returns:
            Index of the face in dimension len(vertices) - 1
        """
        keep = set(vertices)
        for v in range(n, -1, -1):
            if v not in keep:
                s = self.faces[n][s][v]
                n -= 1
        return s

    def violations(self) -> List[str]:
        """Failures of d_i d_j = d_{j-1} d_i for i < j."""
        issues: List[str] = []
        for n in range(2, len(self.faces)):
            for s, fs in enumerate(self.faces[n]):
                for j in range(n + 1):
                    for i in range(j):
                        a = self.faces[n - 1][fs[j]][i]
                        b = self.faces[n - 1][fs[i]][j - 1]
                        if a != b:
                            issues.append(f"d_{i} d_{j} != d_{j - 1} d_{i} on {self.simplices[n][s]}")
        return issues

    def to_dict(self) -> Dict[str, Any]:
        """JSON form; simplex labels are stringified."""
        return {
            "simplices": [[_label(s) for s in level] for level in self.simplices],
            "faces": [[list(f) for f in level] for level in self.faces],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SemiSimplicialSet":
        """
        Read the JSON form.

        Raises:
            ValueError: If the face lists do not match the simplices
        """
        simplices = [[tuple(s) if isinstance(s, list) else s for s in level] for level in data["simplices"]]
        faces = [[tuple(f) for f in level] for level in data["faces"]]
        result = cls(simplices, faces)
        issues = result.violations()
        if issues:
            raise ValueError(f"Not a semi-simplicial set: {issues[0]}")
        return result

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SemiSimplicialSet":
        """
        The simplicial complex generated by some facets.

        Simplices are the sorted vertex tuples; d_i drops the i-th vertex.
        """
        found = set()
        for facet in facets:
            vs = tuple(sorted(set(facet)))
            for k in range(1, len(vs) + 1):
                found.update(combinations(vs, k))
        top = max((len(s) for s in found), default=0)
        simplices = [sorted(s for s in found if len(s) == n + 1) for n in range(top)]
        index = [{s: i for i, s in enumerate(level)} for level in simplices]
        faces = [
            [tuple(index[n - 1][s[:i] + s[i + 1:]] for i in range(n + 1)) if n else () for s in level]
            for n, level in enumerate(simplices)
        ]
        return cls(simplices, faces)  # type: ignore[arg-type]


def _label(s: Simplex) -> Any:
    if isinstance(s, (str, int)):
        return s
    return str(s)


def simplex(n: int) -> SemiSimplicialSet:
    """The representable n-simplex."""
    return SemiSimplicialSet.from_facets([range(n + 1)])


def simplex_boundary(n: int) -> SemiSimplicialSet:
    """The boundary of the n-simplex, n >= 1."""
    if n < 1:
        raise ValueError(f"The boundary needs n >= 1, got {n}")
    return SemiSimplicialSet.from_facets(combinations(range(n + 1), n))


def horn_simplex(n: int, k: int) -> SemiSimplicialSet:
    """The horn of the n-simplex missing the face opposite to vertex k."""
    if not 0 <= k <= n or n < 1:
        raise ValueError(f"No horn {k} in dimension {n}")
    facets = [tuple(v for v in range(n + 1) if v != i) for i in range(n + 1) if i != k]
    return SemiSimplicialSet.from_facets(facets)


def disjoint_union(s: SemiSimplicialSet, t: SemiSimplicialSet) -> SemiSimplicialSet:
    """Coproduct; labels become (0, label) and (1, label)."""
    top = max(len(s.simplices), len(t.simplices))
    simplices: List[List[Simplex]] = []
    faces: List[List[Tuple[int, ...]]] = []
    for n in range(top):
        left = s.simplices[n] if n < len(s.simplices) else []
        right = t.simplices[n] if n < len(t.simplices) else []
        offset = len(s.simplices[n - 1]) if 0 < n <= len(s.simplices) else 0
        simplices.append([(0, x) for x in left] + [(1, x) for x in right])
        level = list(s.faces[n]) if n < len(s.faces) else []
        if n < len(t.faces):
            level += [tuple(i + offset for i in f) for f in t.faces[n]]
        faces.append(level)
    return SemiSimplicialSet(simplices, faces)


def _plex_cells(shape: Shape, index: int) -> Tuple[Tuple[int, ...], Dict[int, int]]:
    memo = REGISTRY.memo("plex_cells")
    key = (shape.sid, index)
    if key not in memo:
        _, image = cell_plex(shape, index)
        memo[key] = (image, {j: i for i, j in enumerate(image)})
    return memo[key]


def _chains(shape: Shape, top: int) -> List[Tuple[int, ...]]:
    """Strictly decreasing chains below top, written in increasing order."""
    result: List[Tuple[int, ...]] = []

    def walk(chain: Tuple[int, ...]) -> None:
        result.append(chain)
        image, _ = _plex_cells(shape, chain[0])
        for i in sorted(set(image) - {chain[0]}):
            walk((i,) + chain)

    walk((top,))
    return result


def realize(x: Polygraph) -> SemiSimplicialSet:
    """
    The semi-simplicial realization R(X) of a regular polygraph.

    Simplices are labelled (cell name, chain of shape indices). Faces d_j
    with j < n drop i_j; d_n restricts to the plex of i_{n-1}.

    Raises:
        UnsupportedClass: If X is not regular or a plex of X does not embed
    """
    if not is_regular(x):
        raise UnsupportedClass("Realization needs a regular polygraph")
    by_dim: Dict[int, List[Tuple[int, Tuple[int, ...]]]] = {}
    for cell in x:
        c = classify_cell(x, cell.id)
        if len(set(c.labels)) != len(c.labels):
            raise UnsupportedClass(f"The plex of {cell.label} does not embed")
        top = c.labels.index(cell.id)
        for chain in _chains(c.shape, top):
            by_dim.setdefault(len(chain) - 1, []).append((cell.id, chain))
    top_dim = max(by_dim, default=-1)
    names = x.names()
    levels = [sorted(by_dim.get(n, []), key=lambda s: (s[0], s[1])) for n in range(top_dim + 1)]
    index = [{s: i for i, s in enumerate(level)} for level in levels]
    faces: List[List[Tuple[int, ...]]] = []
    for n, level in enumerate(levels):
        level_faces: List[Tuple[int, ...]] = []
        for cell_id, chain in level:
            if n == 0:
                level_faces.append(())
                continue
            fs = [index[n - 1][(cell_id, chain[:j] + chain[j + 1:])] for j in range(n)]
            shape = classify_cell(x, cell_id)
            sub = chain[n - 1]
            _, inverse = _plex_cells(shape.shape, sub)
            restricted = tuple(inverse[i] for i in chain[:n])
            fs.append(index[n - 1][(shape.labels[sub], restricted)])
            level_faces.append(tuple(fs))
        faces.append(level_faces)
    simplices: List[List[Simplex]] = [
        [(names[cell_id], chain) for cell_id, chain in level] for level in levels
    ]
    LOGGER.debug("Realization of %d cells has counts %s", len(x), [len(level) for level in levels])
    return SemiSimplicialSet(simplices, faces)


def _keys(x: Polygraph, s: SemiSimplicialSet) -> List[Dict[Tuple[int, Tuple[int, ...]], int]]:
    ids = {c.label: c.id for c in x}
    return [
        {(ids[name], chain): i for i, (name, chain) in enumerate(level)}  # type: ignore[misc]
        for level in s.simplices
    ]


def realize_morphism(f: PolygraphMorphism) -> List[Tuple[int, ...]]:
    """
    R(f) for a polygraphic morphism of regular polygraphs.

    A polygraphic map preserves plexes, so (c, chain) goes to (f(c), chain).

    Returns:
        For each dimension, the index in R(codomain) of the image of each
        simplex of R(domain)

    Raises:
        UnsupportedClass: If f is not polygraphic
    """
    if not f.is_polygraphic():
        raise UnsupportedClass("Only polygraphic morphisms are realized")
    rx, ry = realize(f.domain), realize(f.codomain)
    kx, ky = _keys(f.domain, rx), _keys(f.codomain, ry)
    result: List[Tuple[int, ...]] = []
    for n, level in enumerate(kx):
        image = [0] * len(level)
        for (cell_id, chain), i in level.items():
            target = f.image(cell_id).cell  # type: ignore[union-attr]
            image[i] = ky[n][(target, chain)]
        result.append(tuple(image))
    return result


def is_levelwise_injective(maps: Sequence[Sequence[int]]) -> bool:
    """Whether every component of a simplicial map is injective."""
    return all(len(set(m)) == len(m) for m in maps)


def check_mono(f: PolygraphMorphism) -> List[Tuple[int, ...]]:
    """
    R(f) for a polygraphic mono, checked to be level-wise injective.

    Raises:
        NotMono: If some component is not injective
    """
    maps = realize_morphism(f)
    if not is_levelwise_injective(maps):
        raise NotMono("The realization is not level-wise injective")
    return maps


def _name(label: Simplex) -> str:
    if isinstance(label, tuple) and all(isinstance(v, int) for v in label):
        return subset_name(label)
    return str(label)


def orientals_embed(s: SemiSimplicialSet) -> Polygraph:
    """
    The colimit of orientals over the simplices of S.

    Every n-simplex becomes an n-cell whose source and target are those of
    the top cell of O(n), with each cell of O(n) replaced by the face of
    the simplex spanned by the same vertices.
    """
    b = PolygraphBuilder()
    ids: List[Dict[int, int]] = []
    for n, level in enumerate(s.simplices):
        ids.append({})
        if n == 0:
            for i, label in enumerate(level):
                ids[0][i] = b.add(_name(label))
            continue
        o = oriental(n, DEFAULT_BOUNDS.override(max_oriental=max(n, DEFAULT_BOUNDS.max_oriental)))
        top = o.cells_of_dim(n)[0]
        vertices = {c.id: tuple(int(v) for v in c.label.strip("[]").split(",")) for c in o}
        for i, label in enumerate(level):
            mapping = {
                cid: ids[len(vs) - 1][s.iterated_face(n, i, vs)] for cid, vs in vertices.items() if cid != top.id
            }
            ids[n][i] = b.add(
                _name(label),
                rename(top.src, mapping),  # type: ignore[arg-type]
                rename(top.tgt, mapping),  # type: ignore[arg-type]
                dim=n,
            )
    result = b.build(ClassTag.REGULAR)
    LOGGER.debug("Orientals embedding has grades %s", result.grades())
    return result

