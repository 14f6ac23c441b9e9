"""
Integral homology of semi-simplicial sets.

The chain complex has the simplices as basis and boundary
sum_i (-1)^i d_i. Groups are read off the invariant factors of the
boundary matrices.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from ppx.config import DEFAULT_BOUNDS, Bounds
from ppx.errors import BoundExceeded
from ppx.homotopy.realization import SemiSimplicialSet

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyGroup:
    """
    A finitely generated abelian group Z^rank + sum Z/d.

    Attributes:
        rank: Free rank
        torsion: Torsion coefficients, each greater than 1
    """
    rank: int
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_dict(self) -> Dict[str, object]:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = (["Z"] if self.rank == 1 else [f"Z^{self.rank}"] if self.rank else [])
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def boundary_matrix(s: SemiSimplicialSet, n: int) -> Matrix:
    """The matrix of the boundary C_n -> C_{n-1}, with n >= 1."""
    rows = len(s.simplices[n - 1]) if n - 1 < len(s.simplices) else 0
    cols = len(s.simplices[n]) if n < len(s.simplices) else 0
    m = Matrix.zeros(rows, cols)
    for j in range(cols):
        for i, f in enumerate(s.faces[n][j]):
            m[f, j] += -1 if i % 2 else 1
    return m


def _factors(m: Matrix, bounds: Bounds) -> List[int]:
    if m.rows == 0 or m.cols == 0:
        return []
    if m.cols > bounds.max_snf_columns:
        raise BoundExceeded(f"Boundary matrix has {m.cols} columns, bound is {bounds.max_snf_columns}")
    return [abs(int(d)) for d in invariant_factors(m, domain=ZZ) if d != 0]


def homology(s: SemiSimplicialSet, max_deg: Optional[int] = None, bounds: Optional[Bounds] = None) -> List[HomologyGroup]:
    """
    Integral homology H_0 .. H_max_deg.

    Args:
        s: A finite semi-simplicial set
        max_deg: Last degree computed, the dimension of s by default
        bounds: Size bounds on the boundary matrices

    Returns:
        One group per degree

    Raises:
        BoundExceeded: If a boundary matrix has too many columns
    """
    bounds = bounds or DEFAULT_BOUNDS
    top = s.dim if max_deg is None else max_deg
    factors: Dict[int, List[int]] = {}
    for n in range(1, top + 2):
        factors[n] = _factors(boundary_matrix(s, n), bounds)
    groups: List[HomologyGroup] = []
    for n in range(top + 1):
        size = len(s.simplices[n]) if n < len(s.simplices) else 0
        rank_out = len(factors.get(n, []))
        rank_in = factors[n + 1]
        groups.append(HomologyGroup(size - rank_out - len(rank_in), tuple(d for d in rank_in if d > 1)))
    LOGGER.debug("Homology up to degree %d: %s", top, [str(g) for g in groups])
    return groups


def reduced_homology(s: SemiSimplicialSet, max_deg: Optional[int] = None, bounds: Optional[Bounds] = None) -> List[HomologyGroup]:
    """Homology with H_0 reduced by one free generator, for non-empty s."""
    groups = homology(s, max_deg, bounds)
    if groups and groups[0].rank > 0:
        groups[0] = HomologyGroup(groups[0].rank - 1, groups[0].torsion)
    return groups


def is_acyclic(s: SemiSimplicialSet, bounds: Optional[Bounds] = None) -> bool:
    """Whether s is non-empty with the reduced homology of a point."""
    if s.dim < 0:
        return False
    return all(g.is_trivial() for g in reduced_homology(s, bounds=bounds))


def euler_characteristic(s: SemiSimplicialSet) -> int:
    """Alternating count of simplices."""
    return sum((-1) ** n * len(level) for n, level in enumerate(s.simplices))
