"""
Globular groups, chain complexes and double sequences.

A globular group here is a free abelian group on a graded basis together
with the projections pi_k^+ and pi_k^- given on basis elements. It carries
the same information as a chain complex with basis: the differential of a
grade n element b is the grade n-1 part of (pi_{n-1}^+ - pi_{n-1}^-) b.
Elements can also be written as double sequences (k_n^-, k_n^+), the
symmetric description in which the projections act by truncation.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from ppx.core.polygraph import Polygraph
from ppx.core.terms import SIGNS, Sign
from ppx.errors import GlobularRelationViolated
from ppx.linearization.delta import pi_cell
from ppx.linearization.vectors import Vector, linear_extension

PiTable = Dict[Tuple[Hashable, int, Sign], Vector]


class GlobularGroup:
    """
    Free abelian group with globular projections.

    Args:
        grades: Grade of every basis element, in basis order
        pi: pi_k^sign of every basis element b for k < grade(b)
        augmentation: Value of the augmentation on grade 0 elements
    """

    def __init__(
        self,
        grades: Mapping[Hashable, int],
        pi: Mapping[Tuple[Hashable, int, Sign], Mapping[Hashable, int]],
        augmentation: Optional[Mapping[Hashable, int]] = None,
    ):
        self.grades: Dict[Hashable, int] = dict(grades)
        self._pi: PiTable = {}
        for b, n in self.grades.items():
            for k in range(n):
                for sign in SIGNS:
                    try:
                        self._pi[(b, k, sign)] = Vector(pi[(b, k, sign)])
                    except KeyError:
                        raise ValueError(f"Missing pi_{k}{sign.value} for {b!r}") from None
        self.augmentation: Optional[Dict[Hashable, int]] = (
            None if augmentation is None else {b: augmentation.get(b, 0) for b in self.basis(0)}
        )

    @property
    def dim(self) -> int:
        """Largest grade, -1 for the zero group."""
        return max(self.grades.values(), default=-1)

    def basis(self, n: Optional[int] = None) -> List[Hashable]:
        """Basis elements, all of them or those of grade n."""
        if n is None:
            return list(self.grades)
        return [b for b, g in self.grades.items() if g == n]

    def rank(self, n: int) -> int:
        """Number of basis elements of grade n."""
        return len(self.basis(n))

    def grade_counts(self) -> Tuple[int, ...]:
        """Basis size in each grade 0..dim."""
        return tuple(self.rank(n) for n in range(self.dim + 1))

    def pi_basis(self, b: Hashable, k: int, sign: Sign) -> Vector:
        """pi_k^sign of a basis element."""
        if k >= self.grades[b]:
            return Vector(((b, 1),))
        return self._pi[(b, k, sign)]

    def pi(self, v: Mapping[Hashable, int], k: int, sign: Sign) -> Vector:
        """pi_k^sign extended linearly."""
        return linear_extension(v, lambda b: self.pi_basis(b, k, sign))

    def grade_part(self, v: Mapping[Hashable, int], n: int) -> Vector:
        """Coordinates of v on the grade n basis elements."""
        return Vector((b, c) for b, c in v.items() if self.grades[b] == n)

    def augment(self, v: Mapping[Hashable, int]) -> int:
        """
        Augmentation of an element, computed on its pi_0^- projection.

        Raises:
            ValueError: If the group has no augmentation
        """
        if self.augmentation is None:
            raise ValueError("Globular group has no augmentation")
        return sum(c * self.augmentation[b] for b, c in self.pi(v, 0, Sign.MINUS).items())

    def relation_violations(self) -> List[str]:
        """
        All failures of the globular relations on the basis.

        Checks pi_k^e pi_m^d = pi_k^e for k < m, pi_m^d pi_k^e = pi_k^e for
        m >= k, that pi_k lands in grades <= k and that the augmentation
        agrees on both 0-dimensional projections.
        """
        issues: List[str] = []
        for b, n in self.grades.items():
            for k in range(n):
                for eps in SIGNS:
                    pk = self.pi_basis(b, k, eps)
                    high = [c for c in pk if self.grades.get(c, k + 1) > k]
                    if high:
                        issues.append(f"pi_{k}{eps.value}({b!r}) has support above grade {k}")
                        continue
                    for m in range(k, n + 1):
                        for dlt in SIGNS:
                            if m > k and self.pi(self.pi_basis(b, m, dlt), k, eps) != pk:
                                issues.append(
                                    f"pi_{k}{eps.value} pi_{m}{dlt.value}({b!r}) != pi_{k}{eps.value}({b!r})"
                                )
                            if self.pi(pk, m, dlt) != pk:
                                issues.append(
                                    f"pi_{m}{dlt.value} pi_{k}{eps.value}({b!r}) != pi_{k}{eps.value}({b!r})"
                                )
            if self.augmentation is not None and n > 0:
                e_minus = sum(c * self.augmentation[x] for x, c in self.pi_basis(b, 0, Sign.MINUS).items())
                e_plus = sum(c * self.augmentation[x] for x, c in self.pi_basis(b, 0, Sign.PLUS).items())
                if e_minus != e_plus:
                    issues.append(f"augmentation differs on the 0-boundaries of {b!r}")
        return issues

    def check(self) -> "GlobularGroup":
        """
        Raise unless the globular relations hold.

        Raises:
            GlobularRelationViolated: With the first few violations
        """
        issues = self.relation_violations()
        if issues:
            raise GlobularRelationViolated("; ".join(issues[:5]))
        return self

    def rename(self, f: Callable[[Hashable], Hashable]) -> "GlobularGroup":
        """Same group on a renamed basis."""
        pi = {(f(b), k, s): v.map_keys(f) for (b, k, s), v in self._pi.items()}
        aug = None if self.augmentation is None else {f(b): e for b, e in self.augmentation.items()}
        return GlobularGroup({f(b): n for b, n in self.grades.items()}, pi, aug)

    def same_as(self, other: "GlobularGroup", check_augmentation: bool = True) -> bool:
        """Equality of bases, grades, projections and (optionally) augmentations."""
        return (
            self.grades == other.grades
            and self._pi == other._pi
            and (not check_augmentation or self.augmentation == other.augmentation)
        )

    def mismatches(self, other: "GlobularGroup", limit: int = 5) -> List[str]:
        """First few differences in grades or projections, for error messages."""
        issues: List[str] = []
        for b in set(self.grades) ^ set(other.grades):
            issues.append(f"{b!s} is a basis element of only one side")
        for key in self._pi:
            if key in other._pi and self._pi[key] != other._pi[key]:
                b, k, s = key
                issues.append(f"pi_{k}{s.value}({b!s}) differs")
            if len(issues) >= limit:
                break
        return issues[:limit]

    def to_dict(self, key: Callable[[Hashable], str] = str) -> Dict[str, Any]:
        """Convert to dictionary format with basis elements written by key."""
        return {
            "grades": [[key(b), n] for b, n in self.grades.items()],
            "pi": [
                [key(b), k, s.value, [[key(c), v] for c, v in vec.sorted_items()]]
                for (b, k, s), vec in self._pi.items()
            ],
            "augmentation": None
            if self.augmentation is None
            else [[key(b), e] for b, e in self.augmentation.items()],
        }

    def __repr__(self) -> str:
        return f"GlobularGroup(grades={self.grade_counts()})"


@dataclass
class ChainComplex:
    """
    A bounded chain complex of free abelian groups with basis.

    Attributes:
        grades: Grade of every basis element, in basis order
        differential: Boundary of every basis element of grade >= 1
        augmentation: Optional augmentation on grade 0
    """
    grades: Dict[Hashable, int]
    differential: Dict[Hashable, Vector] = field(default_factory=dict)
    augmentation: Optional[Dict[Hashable, int]] = None

    def __post_init__(self):
        """Normalize the differential after initialization."""
        if any(n < 0 for n in self.grades.values()):
            raise ValueError("Chain complexes are concentrated in nonnegative degrees")
        self.differential = {
            b: Vector(self.differential.get(b, ())) for b, n in self.grades.items() if n > 0
        }

    @property
    def dim(self) -> int:
        """Largest grade."""
        return max(self.grades.values(), default=-1)

    def basis(self, n: int) -> List[Hashable]:
        """Basis of K_n."""
        return [b for b, g in self.grades.items() if g == n]

    def boundary(self, v: Mapping[Hashable, int]) -> Vector:
        """Differential extended linearly; grade 0 elements go to 0."""
        return linear_extension(v, lambda b: self.differential.get(b, Vector()))

    def matrix(self, n: int) -> List[List[int]]:
        """Matrix of the differential K_n -> K_{n-1}: rows grade n-1, columns grade n."""
        rows, cols = self.basis(n - 1), self.basis(n)
        return [[self.differential[c][r] for c in cols] for r in rows]

    def violations(self) -> List[str]:
        """Failures of the chain complex axioms: dd = 0, grading and e d = 0."""
        issues: List[str] = []
        for b, n in self.grades.items():
            if n == 0:
                continue
            db = self.differential[b]
            wrong = [c for c in db if self.grades.get(c) != n - 1]
            if wrong:
                issues.append(f"boundary of {b!r} leaves grade {n - 1}")
                continue
            if self.boundary(db):
                issues.append(f"boundary of boundary of {b!r} is not zero")
            if n == 1 and self.augmentation is not None:
                if sum(c * self.augmentation.get(x, 0) for x, c in db.items()) != 0:
                    issues.append(f"augmentation of the boundary of {b!r} is not zero")
        return issues

    def same_as(self, other: "ChainComplex") -> bool:
        """Equality of bases, grades, differentials and augmentations."""
        return (
            self.grades == other.grades
            and self.differential == other.differential
            and self.augmentation == other.augmentation
        )

    def to_dict(self, key: Callable[[Hashable], str] = str) -> Dict[str, Any]:
        """Convert to dictionary format with integer matrices."""
        return {
            "grades": [[key(b) for b in self.basis(n)] for n in range(self.dim + 1)],
            "differential": [self.matrix(n) for n in range(1, self.dim + 1)],
            "augmentation": None
            if self.augmentation is None
            else [self.augmentation.get(b, 0) for b in self.basis(0)],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ChainComplex":
        """Create from dictionary format; basis elements are the given names."""
        grades: Dict[Hashable, int] = {}
        for n, names in enumerate(data["grades"]):
            for name in names:
                grades[name] = n
        differential: Dict[Hashable, Vector] = {}
        for n, matrix in enumerate(data.get("differential", []), start=1):
            rows, cols = data["grades"][n - 1], data["grades"][n]
            for j, col in enumerate(cols):
                differential[col] = Vector((rows[i], int(matrix[i][j])) for i in range(len(rows)))
        aug = data.get("augmentation")
        augmentation = None if aug is None else dict(zip(data["grades"][0], (int(e) for e in aug)))
        return cls(grades, differential, augmentation)


Entries = Tuple[Tuple[Hashable, int], ...]


def _entries(v: Mapping[Hashable, int]) -> Entries:
    return tuple(sorted(Vector(v).items(), key=lambda kv: repr(kv[0])))


@dataclass(frozen=True)
class DoubleSequence:
    """
    An element of a globular group as pairs (k_n^-, k_n^+) of chains.

    Trailing zero pairs are dropped, so equal elements have equal values.
    """
    pairs: Tuple[Tuple[Entries, Entries], ...] = ()

    @classmethod
    def of(cls, pairs: Sequence[Tuple[Mapping[Hashable, int], Mapping[Hashable, int]]]) -> "DoubleSequence":
        """Build from per-degree (minus, plus) mappings."""
        items = [(_entries(m), _entries(p)) for m, p in pairs]
        while items and not items[-1][0] and not items[-1][1]:
            items.pop()
        return cls(tuple(items))

    @property
    def length(self) -> int:
        """Number of stored degrees."""
        return len(self.pairs)

    @property
    def top(self) -> int:
        """Highest degree with a nonzero pair, -1 for zero."""
        return len(self.pairs) - 1

    def minus(self, n: int) -> Vector:
        """k_n^-."""
        return Vector(self.pairs[n][0]) if n < len(self.pairs) else Vector()

    def plus(self, n: int) -> Vector:
        """k_n^+."""
        return Vector(self.pairs[n][1]) if n < len(self.pairs) else Vector()

    def part(self, n: int, sign: Sign) -> Vector:
        """k_n^sign."""
        return self.minus(n) if sign is Sign.MINUS else self.plus(n)

    def as_lists(self) -> List[Tuple[Vector, Vector]]:
        """Pairs as mutable vectors."""
        return [(self.minus(n), self.plus(n)) for n in range(len(self.pairs))]

    def __add__(self, other: "DoubleSequence") -> "DoubleSequence":
        n = max(len(self.pairs), len(other.pairs))
        return DoubleSequence.of(
            [(self.minus(i) + other.minus(i), self.plus(i) + other.plus(i)) for i in range(n)]
        )

    def __sub__(self, other: "DoubleSequence") -> "DoubleSequence":
        n = max(len(self.pairs), len(other.pairs))
        return DoubleSequence.of(
            [(self.minus(i) - other.minus(i), self.plus(i) - other.plus(i)) for i in range(n)]
        )

    def violations(self, complex_: ChainComplex) -> List[str]:
        """
        Failures of the compatibility conditions against a chain complex.

        k_n^+ and k_n^- must live in grade n, have boundary
        k_{n-1}^+ - k_{n-1}^-, and the top pair must be equal.
        """
        issues: List[str] = []
        for n in range(len(self.pairs)):
            for sign in SIGNS:
                chain = self.part(n, sign)
                if any(complex_.grades.get(b) != n for b in chain):
                    issues.append(f"k_{n}{sign.value} has support outside grade {n}")
                elif n > 0 and complex_.boundary(chain) != self.plus(n - 1) - self.minus(n - 1):
                    issues.append(f"boundary of k_{n}{sign.value} differs from k_{n - 1}+ - k_{n - 1}-")
        if self.pairs and self.pairs[-1][0] != self.pairs[-1][1]:
            issues.append("top pair is not balanced")
        return issues

    def to_dict(self, key: Callable[[Hashable], str] = str) -> List[List[List[List[Any]]]]:
        """Convert to nested lists [[minus entries, plus entries] per degree]."""
        return [[[[key(b), c] for b, c in side] for side in pair] for pair in self.pairs]


def globular_to_chain(g: GlobularGroup) -> ChainComplex:
    """
    Chain complex of a globular group.

    The differential of a grade n basis element b is the grade n-1 part of
    pi_{n-1}^+ b - pi_{n-1}^- b.
    """
    differential: Dict[Hashable, Vector] = {}
    for b, n in g.grades.items():
        if n > 0:
            diff = g.pi_basis(b, n - 1, Sign.PLUS) - g.pi_basis(b, n - 1, Sign.MINUS)
            differential[b] = g.grade_part(diff, n - 1)
    aug = None if g.augmentation is None else dict(g.augmentation)
    return ChainComplex(dict(g.grades), differential, aug)


def chain_to_globular(k: ChainComplex) -> GlobularGroup:
    """
    Globular group of a chain complex.

    A grade n basis element b is identified with the element of
    ker pi_{n-1}^- lifting it, so pi_{n-1}^+ b = d b and every other lower
    projection vanishes.
    """
    pi: PiTable = {}
    for b, n in k.grades.items():
        for j in range(n):
            pi[(b, j, Sign.MINUS)] = Vector()
            pi[(b, j, Sign.PLUS)] = Vector(k.differential[b]) if j == n - 1 else Vector()
    aug = None if k.augmentation is None else dict(k.augmentation)
    return GlobularGroup(dict(k.grades), pi, aug)


def to_double_sequence(g: GlobularGroup, v: Mapping[Hashable, int]) -> DoubleSequence:
    """
    Double sequence of an element: k_n^sign is the grade n part of pi_n^sign v.
    """
    v = Vector(v)
    top = max((g.grades[b] for b in v), default=-1)
    pairs = []
    for n in range(top + 1):
        pairs.append(tuple(g.grade_part(g.pi(v, n, sign), n) for sign in SIGNS))
    return DoubleSequence.of(pairs)


def from_double_sequence(g: GlobularGroup, seq: DoubleSequence) -> Vector:
    """
    Element of a globular group with the given double sequence.

    Each k_n^- is lifted to ker pi_{n-1}^- as c - pi_{n-1}^- c and the
    lifts are summed.
    """
    result = Vector()
    for n in range(seq.length):
        chain = seq.minus(n)
        result += chain
        if n > 0:
            result.iadd_coef(-1, g.pi(chain, n - 1, Sign.MINUS))
    return result


def pi_double_sequence(seq: DoubleSequence, n: int, sign: Sign) -> DoubleSequence:
    """
    pi_n^sign in the double sequence description.

    Pairs below n are kept, the pair at n becomes (k_n^sign, k_n^sign) and
    everything above vanishes.
    """
    pairs = seq.as_lists()[:n]
    if n < seq.length:
        chosen = seq.part(n, sign)
        pairs.append((chosen, chosen))
    return DoubleSequence.of(pairs)


def linearize(p: Polygraph) -> GlobularGroup:
    """
    The linearization ZX of a polygraph as a globular group.

    The basis is the cell ids, graded by dimension, with augmentation 1 on
    every 0-cell.
    """
    grades = {c.id: c.dim for c in p}
    pi = {
        (c.id, k, sign): pi_cell(p, c.id, k, sign)
        for c in p
        for k in range(c.dim)
        for sign in SIGNS
    }
    return GlobularGroup(grades, pi, {c.id: 1 for c in p.cells_of_dim(0)})
