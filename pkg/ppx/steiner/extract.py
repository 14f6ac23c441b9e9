"""
Based complexes and the extraction of arrow terms from linear data.

An element of a loop-free based complex is a double sequence of
nonnegative chains. Extraction writes it back as a composite of atoms:
along some level k the cells above k fall into connected blocks, a block
with no predecessor is split off as the first factor, and both factors
are extracted recursively. Every extracted term is certified by
linearizing it again.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterator, List, Mapping, Set, Tuple

from ppx.core.algebra import typecheck
from ppx.core.polygraph import Polygraph
from ppx.core.terms import SIGNS, Compose, Gen, Sign, Term
from ppx.errors import BoundaryMismatch, ExtractionFailed
from ppx.linearization.delta import delta_vector
from ppx.linearization.globular import (
    ChainComplex,
    DoubleSequence,
    GlobularGroup,
    PiTable,
    globular_to_chain,
    linearize,
    pi_double_sequence,
    to_double_sequence,
)
from ppx.linearization.vectors import Vector, linear_extension

LOGGER = logging.getLogger(__name__)


def _positive_part(v: Mapping[Hashable, int]) -> Vector:
    return Vector((b, c) for b, c in v.items() if c > 0)


def _negative_part(v: Mapping[Hashable, int]) -> Vector:
    return Vector((b, -c) for b, c in v.items() if c < 0)


@dataclass
class BasedComplex:
    """
    An augmented chain complex with a distinguished basis and its atoms.

    Attributes:
        chain: The chain complex; its augmentation must be set
        atoms: Double sequence of every basis element
    """
    chain: ChainComplex
    atoms: Dict[Hashable, DoubleSequence]

    @classmethod
    def from_group(cls, group: GlobularGroup) -> "BasedComplex":
        """Atoms read off a globular group: the double sequence of each basis element."""
        return cls(globular_to_chain(group), {b: to_double_sequence(group, {b: 1}) for b in group.basis()})

    @classmethod
    def from_chain(cls, chain: ChainComplex) -> "BasedComplex":
        """
        Steiner atoms of a chain complex with basis.

        The atom of b of grade n is b in degree n, then the negative part of
        the boundary of the lower chain and the positive part of the
        boundary of the upper chain, degree by degree.
        """
        atoms: Dict[Hashable, DoubleSequence] = {}
        for b, n in chain.grades.items():
            pairs: List[Tuple[Vector, Vector]] = [(Vector({b: 1}), Vector({b: 1}))]
            for _ in range(n):
                minus, plus = pairs[0]
                pairs.insert(0, (_negative_part(chain.boundary(minus)), _positive_part(chain.boundary(plus))))
            atoms[b] = DoubleSequence.of(pairs)
        return cls(chain, atoms)

    def atom(self, b: Hashable) -> DoubleSequence:
        """The atom of a basis element."""
        return self.atoms[b]

    def violations(self) -> List[str]:
        """
        Failures of the based complex conditions.

        Each atom must have top pair (b, b), satisfy the double sequence
        compatibilities and have 0-components of augmentation 1.
        """
        issues: List[str] = list(self.chain.violations())
        aug = self.chain.augmentation
        if aug is None:
            issues.append("based complex has no augmentation")
        for b, n in self.chain.grades.items():
            a = self.atoms.get(b)
            if a is None:
                issues.append(f"{b!s} has no atom")
                continue
            if a.top != n or a.minus(n) != Vector({b: 1}) or a.plus(n) != Vector({b: 1}):
                issues.append(f"atom of {b!s} does not end with ({b!s}, {b!s})")
            issues.extend(f"atom of {b!s}: {m}" for m in a.violations(self.chain))
            if aug is not None:
                for sign in SIGNS:
                    if sum(c * aug.get(x, 0) for x, c in a.part(0, sign).items()) != 1:
                        issues.append(f"atom of {b!s} is not unital")
        return issues

    def globular(self) -> GlobularGroup:
        """
        The globular group with these atoms.

        pi_k^e b is rebuilt from the truncated atom, lifting each degree
        through the projections of lower grade elements, which are known
        by the time b is reached.
        """
        grades = self.chain.grades
        pi: PiTable = {}

        def project(v: Mapping[Hashable, int], m: int) -> Vector:
            return linear_extension(v, lambda c: pi[(c, m, Sign.MINUS)] if m < grades[c] else Vector({c: 1}))

        for b in sorted(grades, key=lambda x: grades[x]):
            for k in range(grades[b]):
                for sign in SIGNS:
                    seq = pi_double_sequence(self.atoms[b], k, sign)
                    value = Vector()
                    for m in range(seq.length):
                        value += seq.minus(m)
                        if m > 0:
                            value.iadd_coef(-1, project(seq.minus(m), m - 1))
                    pi[(b, k, sign)] = value
        return GlobularGroup(grades, pi, self.chain.augmentation)

    def to_dict(self, key=str) -> Dict[str, Any]:
        """Convert to dictionary format: the chain complex plus atom tables."""
        data = self.chain.to_dict(key)
        data["atoms"] = {key(b): a.to_dict(key) for b, a in self.atoms.items()}
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BasedComplex":
        """
        Create from dictionary format.

        Atom tables are optional; missing ones are computed from the chain
        complex.
        """
        chain = ChainComplex.from_dict(data)
        tables = data.get("atoms")
        if not tables:
            return cls.from_chain(chain)
        atoms = {
            b: DoubleSequence.of(
                [
                    tuple(Vector((name, int(c)) for name, c in side) for side in pair)
                    for pair in tables[b]
                ]
            )
            for b in chain.grades
        }
        return cls(chain, atoms)


def atom(k: BasedComplex, b: Hashable) -> DoubleSequence:
    """The atom of a basis element of a based complex."""
    return k.atom(b)


def based_complex(p: Polygraph) -> BasedComplex:
    """The based complex of a polygraph: its linearization with the atoms of its cells."""
    memo = p._cache
    if "based_complex" not in memo:
        memo["based_complex"] = BasedComplex.from_group(linearize(p))
    return memo["based_complex"]


class _UnionFind:
    def __init__(self):
        self.parent: Dict[Hashable, Hashable] = {}

    def add(self, x: Hashable) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: Hashable) -> Hashable:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: Hashable, b: Hashable) -> None:
        self.add(a)
        self.add(b)
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb, key=repr)] = min(ra, rb, key=repr)

    def groups(self) -> List[frozenset]:
        found: Dict[Hashable, Set[Hashable]] = {}
        for x in self.parent:
            found.setdefault(self.find(x), set()).add(x)
        return sorted((frozenset(g) for g in found.values()), key=lambda g: min(repr(x) for x in g))


class Extractor:
    """
    Term extraction over a fixed polygraph.

    Args:
        p: The polygraph whose cells are the atoms
        typed: Also check every composite of an extracted term
    """

    def __init__(self, p: Polygraph, typed: bool = True):
        self.polygraph = p
        self.typed = typed
        self.group = linearize(p)
        self.complex = based_complex(p)
        self._by_atom = {a: Gen(b) for b, a in self.complex.atoms.items()}
        self._memo: Dict[DoubleSequence, Term] = {}
        self._failed: Set[DoubleSequence] = set()
        self._active: Set[DoubleSequence] = set()

    def _grade(self, b: Hashable) -> int:
        return self.complex.chain.grades[b]

    def _admissible(self, seq: DoubleSequence) -> bool:
        if any(c < 0 for n in range(seq.length) for s in SIGNS for c in seq.part(n, s).values()):
            return False
        return not seq.violations(self.complex.chain)

    def blocks(self, seq: DoubleSequence, k: int) -> List[frozenset]:
        """
        Connected blocks of the cells of seq above level k.

        Cells of grade k+1 are joined with every higher cell whose atom
        meets them in degree k+1.
        """
        uf = _UnionFind()
        for m in range(k + 1, seq.length):
            for sign in SIGNS:
                for b in seq.part(m, sign):
                    uf.add(b)
                    if self._grade(b) > k + 1:
                        a = self.complex.atom(b)
                        for x in a.minus(k + 1).support() | a.plus(k + 1).support():
                            uf.union(b, x)
        return uf.groups()

    def _side(self, block: frozenset, k: int, sign: Sign) -> frozenset:
        found: Set[Hashable] = set()
        for b in block:
            found |= self.complex.atom(b).part(k, sign).support()
        return frozenset(found)

    def first_blocks(self, blocks: List[frozenset], k: int) -> List[frozenset]:
        """Blocks that no other block precedes along level k."""
        plus = [self._side(b, k, Sign.PLUS) for b in blocks]
        minus = [self._side(b, k, Sign.MINUS) for b in blocks]
        return [
            b
            for j, b in enumerate(blocks)
            if not any(i != j and plus[i] & minus[j] for i in range(len(blocks)))
        ]

    def splits(self, seq: DoubleSequence, k: int) -> Iterator[Tuple[DoubleSequence, DoubleSequence]]:
        """Admissible factorizations seq = y #_k z with y a first block."""
        blocks = self.blocks(seq, k)
        if len(blocks) < 2:
            return
        for block in self.first_blocks(blocks, k):
            head = [(seq.minus(i), seq.plus(i)) for i in range(k)]
            upper_y = [
                (seq.minus(m).restrict(block.__contains__), seq.plus(m).restrict(block.__contains__))
                for m in range(k + 1, seq.length)
            ]
            middle = seq.minus(k) + self.complex.chain.boundary(upper_y[0][0]) if upper_y else seq.minus(k)
            y = DoubleSequence.of(head + [(seq.minus(k), middle)] + upper_y)
            upper_z = [
                (seq.minus(m) - my, seq.plus(m) - py)
                for m, (my, py) in zip(range(k + 1, seq.length), upper_y)
            ]
            z = DoubleSequence.of(head + [(middle, seq.plus(k))] + upper_z)
            if self._admissible(y) and self._admissible(z):
                yield y, z

    def _extract(self, seq: DoubleSequence) -> Term:
        if seq in self._memo:
            return self._memo[seq]
        if seq in self._by_atom:
            return self._by_atom[seq]
        if seq in self._failed or seq in self._active:
            raise ExtractionFailed("No decomposition into atoms")
        self._active.add(seq)
        try:
            for k in range(seq.top - 1, -1, -1):
                for y, z in self.splits(seq, k):
                    try:
                        term = Compose(self._extract(y), self._extract(z), k)
                    except ExtractionFailed:
                        LOGGER.debug("Split along %d abandoned", k)
                        continue
                    self._memo[seq] = term
                    return term
        finally:
            self._active.discard(seq)
        self._failed.add(seq)
        raise ExtractionFailed("No decomposition into atoms")

    def certify(self, seq: DoubleSequence, term: Term) -> None:
        """
        Linearize the term again and compare with the requested sequence.

        Raises:
            ExtractionFailed: If the linear data or a composite is wrong
        """
        got = to_double_sequence(self.group, delta_vector(self.polygraph, term))
        if got != seq:
            raise ExtractionFailed("Extracted term does not linearize to the requested element")
        if self.typed:
            try:
                typecheck(self.polygraph, term)
            except BoundaryMismatch as e:
                raise ExtractionFailed(f"Extracted term is ill-typed: {e}") from e

    def extract(self, seq: DoubleSequence) -> Term:
        """
        Arrow term whose linearization is the given double sequence.

        Raises:
            ExtractionFailed: If seq is not an admissible element, or has no
                decomposition along an acyclic order, or fails certification
        """
        if not self._admissible(seq):
            issues = seq.violations(self.complex.chain) or ["negative coefficients"]
            raise ExtractionFailed(f"Not an element of the based complex: {issues[0]}")
        term = self._extract(seq)
        self.certify(seq, term)
        return term


def extractor(p: Polygraph) -> Extractor:
    """The extractor of a polygraph, cached with it."""
    memo = p._cache
    if "extractor" not in memo:
        memo["extractor"] = Extractor(p)
    return memo["extractor"]


def extract_term(p: Polygraph, v: DoubleSequence) -> Term:
    """
    Rebuild an arrow of p from its double sequence.

    Args:
        p: Positive polygraph whose cells are the atoms
        v: Double sequence over the cell ids of p

    Returns:
        A term t with to_double_sequence(delta(t)) equal to v

    Raises:
        ExtractionFailed: If no certified term is found
    """
    return extractor(p).extract(v)


def extract_vector(p: Polygraph, v: Mapping[Hashable, int]) -> Term:
    """extract_term on the double sequence of an element of the linearization."""
    ex = extractor(p)
    return ex.extract(to_double_sequence(ex.group, v))

