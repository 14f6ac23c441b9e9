"""
Polyplexes: polygraphs with a distinguished universal arrow.
"""

from typing import Any, Dict, Tuple

from ppx.core.morphism import PolygraphMorphism, identity_morphism
from ppx.core.polygraph import Polygraph
from ppx.core.terms import SIGNS, Sign, Term, term_to_json
from ppx.polyplex import shape as shapes
from ppx.polyplex.shape import REGISTRY, Shape


class Polyplex:
    """
    A polyplex backed by an interned shape.

    The underlying polygraph has the canonical indices as cell ids. All
    boundary polyplexes and their inclusions are computed when the value is
    built, so instances never change afterwards. Use Polyplex.of to obtain
    the shared instance of a shape.
    """

    def __init__(self, shape: Shape):
        self.shape = shape
        self.underlying: Polygraph = shapes.materialize(shape)
        self.boundaries: Dict[Tuple[int, Sign], Tuple["Polyplex", PolygraphMorphism]] = {}
        for k in range(shape.dim):
            for sign in SIGNS:
                b, cell_map = shapes.boundary(shape, k, sign)
                inner = Polyplex.of(b)
                self.boundaries[(k, sign)] = (
                    inner,
                    PolygraphMorphism.from_cell_map(
                        inner.underlying, self.underlying, dict(enumerate(cell_map))
                    ),
                )

    @classmethod
    def of(cls, shape: Shape) -> "Polyplex":
        """Shared polyplex of a shape."""
        memo = REGISTRY.memo("polyplex")
        if shape.sid not in memo:
            memo[shape.sid] = cls(shape)
        return memo[shape.sid]

    @property
    def dim(self) -> int:
        """Dimension of the universal arrow."""
        return self.shape.dim

    @property
    def universal(self) -> Term:
        """Universal arrow over the underlying polygraph."""
        return self.shape.universal

    @property
    def digest(self) -> str:
        """Stable content hash."""
        return self.shape.digest

    @property
    def size(self) -> int:
        """Number of cells."""
        return self.shape.size

    def is_plex(self) -> bool:
        """True when the universal arrow is a single top generator."""
        return self.shape.is_plex()

    def boundary(self, k: int, sign: Sign) -> Tuple["Polyplex", PolygraphMorphism]:
        """
        Boundary polyplex and its inclusion.

        For k >= dim the polyplex itself is returned with the identity.
        """
        if k >= self.dim:
            return self, identity_morphism(self.underlying)
        return self.boundaries[(k, sign)]

    def boundary_cells(self, k: int, sign: Sign) -> frozenset:
        """Cell ids of a boundary polyplex inside this one."""
        return shapes.boundary_cells(self.shape, k, sign)

    def to_dict(self) -> Dict[str, Any]:
        """Convert polyplex to dictionary format."""
        data = self.underlying.to_dict()
        data["universal"] = term_to_json(self.universal)
        data["digest"] = self.digest
        data["kind"] = "plex" if self.is_plex() else "polyplex"
        return data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polyplex):
            return NotImplemented
        return self.shape is other.shape

    def __hash__(self) -> int:
        return hash(self.shape.digest)

    def __repr__(self) -> str:
        return f"Polyplex(dim={self.dim}, grades={self.shape.grades()}, digest={self.digest[:12]})"


def boundary_polyplex(pp: Polyplex, k: int, sign: Sign) -> Tuple[Polyplex, PolygraphMorphism]:
    """The k-boundary polyplex of pp on the given side, with its inclusion."""
    return pp.boundary(k, sign)


def polyplex_compose(
    p: Polyplex, q: Polyplex, k: int
) -> Tuple[Polyplex, PolygraphMorphism, PolygraphMorphism]:
    """
    Glue two polyplexes along the k-target of p and the k-source of q.

    Returns:
        Tuple of (composite, inclusion of p, inclusion of q)

    Raises:
        BoundaryMismatch: If the shared boundaries differ
    """
    shape, ma, mb = shapes.compose(p.shape, q.shape, k)
    result = Polyplex.of(shape)
    return (
        result,
        PolygraphMorphism.from_cell_map(p.underlying, result.underlying, dict(enumerate(ma))),
        PolygraphMorphism.from_cell_map(q.underlying, result.underlying, dict(enumerate(mb))),
    )
