"""
Gray tensor product, suspension and join on globular groups and chain complexes.

The projections of a tensor are given on basis pairs by

    pi_n^e(g x h) = sum over i of (pi_i^e g - pi_{i-1}^e g) x pi_{n-i}^{e(-1)^i} h

with pi_{-1} = 0. The chain complex of the tensor is the usual tensor
product of chain complexes with differential
d(k x l) = dk x l + (-1)^{deg k} k x dl.
"""

from dataclasses import dataclass
from typing import Dict, Hashable, Mapping, Optional, Tuple

from ppx.core.terms import SIGNS, Sign
from ppx.errors import GlobularRelationViolated
from ppx.linearization.globular import ChainComplex, GlobularGroup, PiTable
from ppx.linearization.vectors import Vector, linear_extension


@dataclass(frozen=True)
class TensorCell:
    """The basis element left x right of a tensor product."""
    left: Hashable
    right: Hashable

    def __str__(self) -> str:
        return f"{self.left}(x){self.right}"


@dataclass(frozen=True)
class BasePoint:
    """The additional 0-dimensional generator of a suspension."""

    def __str__(self) -> str:
        return "pt"


BASE_POINT = BasePoint()


@dataclass(frozen=True)
class Suspended:
    """The suspension of a basis element, one grade higher."""
    cell: Hashable

    def __str__(self) -> str:
        return f"S{self.cell}"


@dataclass(frozen=True)
class JoinCell:
    """
    Basis element of a join G * H.

    (g, None) and (None, h) are the copies of G and H, (g, h) is g * h of
    grade deg g + deg h + 1.
    """
    left: Optional[Hashable]
    right: Optional[Hashable]

    def __str__(self) -> str:
        if self.right is None:
            return f"{self.left}"
        if self.left is None:
            return f"{self.right}'"
        return f"{self.left}*{self.right}"


def _sign_power(sign: Sign, i: int) -> Sign:
    return sign.flip() if i % 2 else sign


def _outer(u: Mapping[Hashable, int], v: Mapping[Hashable, int]) -> Vector:
    return Vector((TensorCell(a, b), x * y) for a, x in u.items() for b, y in v.items())


def _pi_or_zero(g: GlobularGroup, v: Mapping[Hashable, int], k: int, sign: Sign) -> Vector:
    if k < 0:
        return Vector()
    return g.pi(v, k, sign)


def tensor_pi(
    g_group: GlobularGroup,
    h_group: GlobularGroup,
    g: Hashable,
    h: Hashable,
    n: int,
    sign: Sign,
) -> Vector:
    """
    pi_n^sign of the basis element g x h of G x H.

    Args:
        g_group: Globular group containing g
        h_group: Globular group containing h
        g: Basis element of g_group
        h: Basis element of h_group
        n: Projection level
        sign: Projection sign

    Returns:
        The projection as a vector over TensorCell keys
    """
    gv = Vector(((g, 1),))
    hv = Vector(((h, 1),))
    result = Vector()
    for i in range(min(n, g_group.grades[g]) + 1):
        layer = _pi_or_zero(g_group, gv, i, sign) - _pi_or_zero(g_group, gv, i - 1, sign)
        if layer:
            result += _outer(layer, h_group.pi(hv, n - i, _sign_power(sign, i)))
    return result


def tensor_pi_symmetric(
    g_group: GlobularGroup,
    h_group: GlobularGroup,
    g: Hashable,
    h: Hashable,
    n: int,
    sign: Sign,
) -> Vector:
    """
    The same projection expanded on the other factor.

    pi_n^e(g x h) = sum over i of pi_i^e g x (pi_{n-i}^{e_i} h - pi_{n-i-1}^{-e_i} h)
    with e_i = e(-1)^i. Agrees with tensor_pi.
    """
    gv = Vector(((g, 1),))
    hv = Vector(((h, 1),))
    result = Vector()
    for i in range(n + 1):
        e_i = _sign_power(sign, i)
        layer = _pi_or_zero(h_group, hv, n - i, e_i) - _pi_or_zero(h_group, hv, n - i - 1, e_i.flip())
        if layer:
            result += _outer(g_group.pi(gv, i, sign), layer)
    return result


def tensor_pi_vector(
    g_group: GlobularGroup,
    h_group: GlobularGroup,
    v: Mapping[TensorCell, int],
    n: int,
    sign: Sign,
) -> Vector:
    """tensor_pi extended linearly to combinations of TensorCell keys."""
    return linear_extension(v, lambda c: tensor_pi(g_group, h_group, c.left, c.right, n, sign))


def _augmentation_product(
    g_aug: Optional[Mapping[Hashable, int]], h_aug: Optional[Mapping[Hashable, int]]
) -> Optional[Dict[Hashable, int]]:
    if g_aug is None or h_aug is None:
        return None
    return {TensorCell(a, b): x * y for a, x in g_aug.items() for b, y in h_aug.items()}


def tensor_globular(g_group: GlobularGroup, h_group: GlobularGroup) -> GlobularGroup:
    """
    Gray tensor product of two globular groups.

    The basis is every pair of basis elements, ordered by total grade and
    then by position in each factor. Augmentations multiply.
    """
    order = {b: i for i, b in enumerate(g_group.basis())}
    order_h = {b: i for i, b in enumerate(h_group.basis())}
    pairs = sorted(
        (TensorCell(a, b) for a in g_group.basis() for b in h_group.basis()),
        key=lambda c: (g_group.grades[c.left] + h_group.grades[c.right], order[c.left], order_h[c.right]),
    )
    grades = {c: g_group.grades[c.left] + h_group.grades[c.right] for c in pairs}
    pi: PiTable = {}
    for c in pairs:
        for k in range(grades[c]):
            for sign in SIGNS:
                pi[(c, k, sign)] = tensor_pi(g_group, h_group, c.left, c.right, k, sign)
    return GlobularGroup(grades, pi, _augmentation_product(g_group.augmentation, h_group.augmentation))


def tensor_chain(k: ChainComplex, m: ChainComplex) -> ChainComplex:
    """Tensor product of chain complexes with d(k x l) = dk x l + (-1)^deg k k x dl."""
    grades: Dict[Hashable, int] = {}
    differential: Dict[Hashable, Vector] = {}
    for a, i in k.grades.items():
        for b, j in m.grades.items():
            cell = TensorCell(a, b)
            grades[cell] = i + j
            d = Vector()
            if i > 0:
                d += _outer(k.differential[a], {b: 1})
            if j > 0:
                d.iadd_coef(-1 if i % 2 else 1, _outer({a: 1}, m.differential[b]))
            differential[cell] = d
    return ChainComplex(grades, differential, _augmentation_product(k.augmentation, m.augmentation))


def suspend(g: GlobularGroup) -> GlobularGroup:
    """
    Suspension of an augmented globular group.

    As a group it is G plus one new 0-dimensional generator pt, with
    pi_k(Sb) = S(pi_{k-1} b), pi_0^-(Sb) = 0 and pi_0^+(Sb) = e(b) pt.
    The result carries no augmentation.

    Raises:
        ValueError: If g has no augmentation
    """
    if g.augmentation is None:
        raise ValueError("Suspension needs an augmented globular group")
    grades: Dict[Hashable, int] = {BASE_POINT: 0}
    pi: PiTable = {}
    for b, n in g.grades.items():
        s = Suspended(b)
        grades[s] = n + 1
        pi[(s, 0, Sign.MINUS)] = Vector()
        pi[(s, 0, Sign.PLUS)] = Vector(((BASE_POINT, g.augment({b: 1})),))
        for k in range(1, n + 1):
            for sign in SIGNS:
                pi[(s, k, sign)] = g.pi_basis(b, k - 1, sign).map_keys(Suspended)
    return GlobularGroup(grades, pi)


def desuspend(h: GlobularGroup) -> GlobularGroup:
    """
    Inverse of suspension on globular groups with a single 0-generator.

    The result is the kernel of pi_0^-, graded one lower, with pi_k read
    from pi_{k+1} and augmentation the coefficient of the 0-generator in
    pi_0^+.

    Raises:
        ValueError: If h does not have exactly one 0-dimensional generator
        GlobularRelationViolated: If a generator of positive grade is not
            in the kernel of pi_0^-
    """
    points = h.basis(0)
    if len(points) != 1:
        raise ValueError(f"Desuspension needs one 0-dimensional generator, found {len(points)}")
    point = points[0]
    grades = {b: n - 1 for b, n in h.grades.items() if n > 0}
    pi: PiTable = {}
    augmentation: Dict[Hashable, int] = {}
    for b, n in grades.items():
        if h.pi_basis(b, 0, Sign.MINUS):
            raise GlobularRelationViolated(f"{b!r} is not in the kernel of pi_0^-")
        if n == 0:
            augmentation[b] = h.pi_basis(b, 0, Sign.PLUS)[point]
        for k in range(n):
            for sign in SIGNS:
                value = h.pi_basis(b, k + 1, sign)
                if value[point]:
                    raise GlobularRelationViolated(f"pi_{k + 1}{sign.value}({b!r}) meets the base point")
                pi[(b, k, sign)] = value
    return GlobularGroup(grades, pi, augmentation)


def _join_key(c: TensorCell) -> JoinCell:
    left, right = c.left, c.right
    if right == BASE_POINT:
        return JoinCell(left.cell, None)
    if left == BASE_POINT:
        return JoinCell(None, right.cell)
    return JoinCell(left.cell, right.cell)


def join_group(g: GlobularGroup, h: GlobularGroup) -> GlobularGroup:
    """
    Join of augmented globular groups.

    Defined so that its suspension is the tensor of the suspensions; as a
    group it is G + (G x H) + H, with g * h of grade deg g + deg h + 1.
    """
    return desuspend(tensor_globular(suspend(g), suspend(h))).rename(_join_key)


def reassociate(c: Hashable) -> Hashable:
    """Send (a x b) x c to a x (b x c), leaving other keys alone."""
    if isinstance(c, TensorCell) and isinstance(c.left, TensorCell):
        return TensorCell(c.left.left, TensorCell(c.left.right, c.right))
    return c


def unit_group() -> GlobularGroup:
    """The unit Z of the tensor product: one 0-generator with augmentation 1."""
    return GlobularGroup({BASE_POINT: 0}, {}, {BASE_POINT: 1})


def tensor_grades(g: GlobularGroup, h: GlobularGroup) -> Tuple[int, ...]:
    """Rank of G x H in each grade, computed without building the tensor."""
    counts = [0] * (max(g.dim, 0) + max(h.dim, 0) + 1)
    for i, a in enumerate(g.grade_counts()):
        for j, b in enumerate(h.grade_counts()):
            counts[i + j] += a * b
    return tuple(counts)
