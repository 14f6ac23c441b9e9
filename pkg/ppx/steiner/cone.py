"""
The cone C G = (Z *) join G of an augmented globular group.

As a group C G is G + G + Z*: the base copy of G, the cells T g one grade
higher, and the apex. The projections of T g are

    pi_0^-(T g) = e(g) *
    pi_0^+(T g) = pi_0^+ g
    pi_i^-(T g) = T(pi_{i-1}^+ g)                              for i > 0
    pi_i^+(T g) = T(pi_{i-1}^- g) + pi_i^+ g - pi_{i-1}^- g    for i > 0
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Hashable, Mapping, Optional

from ppx.core.terms import SIGNS, Sign
from ppx.linearization.globular import GlobularGroup, PiTable
from ppx.linearization.vectors import Vector


class ConeKind(Enum):
    """The three components of a cone."""
    BASE = "base"
    APEX = "apex"
    T = "T"


@dataclass(frozen=True)
class ConeCell:
    """
    Basis element of a cone.

    Attributes:
        kind: BASE for a cell of G, APEX for *, T for the cone on a cell
        cell: The underlying basis element of G, None for the apex
    """
    kind: ConeKind
    cell: Optional[Hashable] = None

    @classmethod
    def apex(cls) -> "ConeCell":
        """The apex *."""
        return cls(ConeKind.APEX)

    @classmethod
    def base(cls, cell: Hashable) -> "ConeCell":
        return cls(ConeKind.BASE, cell)

    @classmethod
    def cone(cls, cell: Hashable) -> "ConeCell":
        return cls(ConeKind.T, cell)

    def grade(self, g: GlobularGroup) -> int:
        """Grade in the cone on g."""
        if self.kind is ConeKind.APEX:
            return 0
        return g.grades[self.cell] + (1 if self.kind is ConeKind.T else 0)

    def __str__(self) -> str:
        if self.kind is ConeKind.APEX:
            return "*"
        if self.kind is ConeKind.T:
            return f"T{self.cell}"
        return str(self.cell)


def _base(v: Mapping[Hashable, int]) -> Vector:
    return Vector((ConeCell.base(b), c) for b, c in v.items())


def _cone(v: Mapping[Hashable, int]) -> Vector:
    return Vector((ConeCell.cone(b), c) for b, c in v.items())


def cone_pi(g: GlobularGroup, b: Hashable, i: int, sign: Sign) -> Vector:
    """
    pi_i^sign of T b in the cone on g.

    Args:
        g: Augmented globular group
        b: Basis element of g
        i: Projection level, at most the grade of b
        sign: Projection sign

    Returns:
        The projection as a vector over ConeCell keys
    """
    unit = {b: 1}
    if i == 0:
        if sign is Sign.MINUS:
            return Vector(((ConeCell.apex(), g.augment(unit)),))
        return _base(g.pi(unit, 0, Sign.PLUS))
    if sign is Sign.MINUS:
        return _cone(g.pi(unit, i - 1, Sign.PLUS))
    lower = g.pi(unit, i - 1, Sign.MINUS)
    return _cone(lower) + _base(g.pi(unit, i, Sign.PLUS)) - _base(lower)


def cone_group(g: GlobularGroup) -> GlobularGroup:
    """
    Cone on an augmented globular group.

    The basis lists the apex, then the base cells, then the T cells, each
    in the order of g. The augmentation is 1 on the apex and e on the base.

    Raises:
        ValueError: If g has no augmentation
    """
    if g.augmentation is None:
        raise ValueError("The cone needs an augmented globular group")
    grades: Dict[Hashable, int] = {ConeCell.apex(): 0}
    pi: PiTable = {}
    for b, n in g.grades.items():
        grades[ConeCell.base(b)] = n
        for k in range(n):
            for sign in SIGNS:
                pi[(ConeCell.base(b), k, sign)] = _base(g.pi_basis(b, k, sign))
    for b, n in g.grades.items():
        grades[ConeCell.cone(b)] = n + 1
        for k in range(n + 1):
            for sign in SIGNS:
                pi[(ConeCell.cone(b), k, sign)] = cone_pi(g, b, k, sign)
    augmentation = {ConeCell.apex(): 1}
    augmentation.update({ConeCell.base(b): e for b, e in g.augmentation.items()})
    return GlobularGroup(grades, pi, augmentation)
