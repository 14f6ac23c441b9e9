"""
Linear combinations of generating cells, in the delta basis or the m-basis.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Mapping, Tuple

from ppx.core.polygraph import Polygraph
from ppx.errors import BasisMismatch
from ppx.linearization.vectors import Vector


class Basis(Enum):
    """Basis in which the coefficients of a LinComb are written."""
    DELTA = "delta"
    M = "m"


@dataclass(frozen=True, eq=False)
class LinComb:
    """
    An element of the linearization of a polygraph.

    Attributes:
        polygraph: Ambient polygraph
        vector: Coefficient of each cell id
        basis: Basis the coefficients refer to
    """
    polygraph: Polygraph
    vector: Vector
    basis: Basis = Basis.DELTA

    def __post_init__(self):
        """Validate support after initialization."""
        unknown = [k for k in self.vector if k not in self.polygraph]
        if unknown:
            raise ValueError(f"Coefficients given for unknown cells {sorted(unknown)}")

    @classmethod
    def of(cls, polygraph: Polygraph, terms: Mapping[int, int], basis: Basis = Basis.DELTA) -> "LinComb":
        """Build from any mapping cell id -> coefficient."""
        return cls(polygraph, Vector(terms), basis)

    @classmethod
    def zero(cls, polygraph: Polygraph, basis: Basis = Basis.DELTA) -> "LinComb":
        """The zero combination."""
        return cls(polygraph, Vector(), basis)

    @classmethod
    def by_name(cls, polygraph: Polygraph, terms: Mapping[str, int], basis: Basis = Basis.DELTA) -> "LinComb":
        """Build from display names instead of ids."""
        return cls.of(polygraph, {polygraph.cell_by_name(n).id: c for n, c in terms.items()}, basis)

    def _check(self, other: "LinComb") -> None:
        if not isinstance(other, LinComb):
            raise TypeError(f"Cannot combine LinComb with {type(other).__name__}")
        if other.basis is not self.basis:
            raise BasisMismatch(f"Cannot mix {self.basis.value} and {other.basis.value} coordinates")
        if other.polygraph is not self.polygraph and other.polygraph != self.polygraph:
            raise BasisMismatch("Linear combinations live over different polygraphs")

    def __add__(self, other: "LinComb") -> "LinComb":
        self._check(other)
        return LinComb(self.polygraph, self.vector + other.vector, self.basis)

    def __sub__(self, other: "LinComb") -> "LinComb":
        self._check(other)
        return LinComb(self.polygraph, self.vector - other.vector, self.basis)

    def __neg__(self) -> "LinComb":
        return LinComb(self.polygraph, -self.vector, self.basis)

    def __mul__(self, n: int) -> "LinComb":
        return LinComb(self.polygraph, self.vector * n, self.basis)

    def __rmul__(self, n: int) -> "LinComb":
        return self.__mul__(n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return (
            self.basis is other.basis
            and dict(self.vector) == dict(other.vector)
            and (self.polygraph is other.polygraph or self.polygraph == other.polygraph)
        )

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.vector.items())))

    def coefficient(self, cell_id: int) -> int:
        """Coefficient of a cell."""
        return self.vector[cell_id]

    def coefficient_of(self, name: str) -> int:
        """Coefficient of the cell with the given name."""
        return self.vector[self.polygraph.cell_by_name(name).id]

    def support(self) -> frozenset:
        """Cells with a nonzero coefficient."""
        return self.vector.support()

    def is_zero(self) -> bool:
        """True for the zero combination."""
        return not self.vector

    def items(self) -> List[Tuple[int, int]]:
        """Entries in cell order."""
        order = {cid: i for i, cid in enumerate(self.polygraph.ids)}
        return sorted(self.vector.items(), key=lambda kv: order[kv[0]])

    def render(self) -> str:
        """Human readable form such as "f + g - y"."""
        if self.is_zero():
            return "0"
        names = self.polygraph.names()
        prefix = "m_" if self.basis is Basis.M else ""
        parts: List[str] = []
        for cid, coef in self.items():
            sign = "-" if coef < 0 else "+"
            magnitude = "" if abs(coef) == 1 else f"{abs(coef)}"
            parts.append(f"{sign} {magnitude}{prefix}{names[cid]}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LinComb({self.render()}, basis={self.basis.value})"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary format."""
        return {"basis": self.basis.value, "terms": [[cid, coef] for cid, coef in self.items()]}

    @classmethod
    def from_dict(cls, polygraph: Polygraph, data: Dict[str, Any]) -> "LinComb":
        """Create from dictionary format over a known polygraph."""
        return cls(polygraph, Vector((int(cid), int(coef)) for cid, coef in data["terms"]), Basis(data["basis"]))
