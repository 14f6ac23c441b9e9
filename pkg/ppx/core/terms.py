"""
Arrow terms over the generating cells of a polygraph.

A term is a syntax tree: a generator, a composite along a dimension k, or a
boundary coercion. Terms are immutable and hashable; they do not know which
polygraph they live in, every semantic operation takes the polygraph as an
explicit argument.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Iterator, Mapping, Optional, Sequence, Set, Union


class Sign(Enum):
    """Orientation of a boundary: source (-) or target (+)."""
    MINUS = "-"
    PLUS = "+"

    @property
    def factor(self) -> int:
        """-1 for the source side, +1 for the target side."""
        return -1 if self is Sign.MINUS else 1

    def flip(self) -> "Sign":
        """Return the opposite sign."""
        return Sign.PLUS if self is Sign.MINUS else Sign.MINUS

    def times(self, factor: int) -> "Sign":
        """Multiply the sign by a +1/-1 factor."""
        return self if factor > 0 else self.flip()

    @classmethod
    def parse(cls, value: Any) -> "Sign":
        """
        Read a sign from its usual spellings.

        Args:
            value: A Sign, "+", "-", "plus", "minus", 1 or -1

        Returns:
            The corresponding Sign

        Raises:
            ValueError: If the value is not a sign
        """
        if isinstance(value, Sign):
            return value
        if value in ("+", "plus", 1):
            return cls.PLUS
        if value in ("-", "minus", -1):
            return cls.MINUS
        raise ValueError(f"Not a sign: {value!r}")


SIGNS = (Sign.MINUS, Sign.PLUS)


@dataclass(frozen=True)
class Gen:
    """A generating cell used as an arrow."""
    cell: int


@dataclass(frozen=True)
class Compose:
    """The composite left #_k right."""
    left: "Term"
    right: "Term"
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"Composition level must be non-negative, got {self.k}")


@dataclass(frozen=True)
class Boundary:
    """The k-dimensional source or target of a term."""
    term: "Term"
    k: int
    sign: Sign

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"Boundary level must be non-negative, got {self.k}")


Term = Union[Gen, Compose, Boundary]


def structural_dim(t: Term, dim_of: Callable[[int], int]) -> int:
    """
    Dimension of a well-typed term, computed from the tree alone.

    Args:
        t: The term
        dim_of: Dimension of a generating cell

    Returns:
        The least n such that the term is an n-arrow
    """
    if isinstance(t, Gen):
        return dim_of(t.cell)
    if isinstance(t, Compose):
        return max(structural_dim(t.left, dim_of), structural_dim(t.right, dim_of))
    return min(t.k, structural_dim(t.term, dim_of))


def generators(t: Term) -> Set[int]:
    """All cell ids mentioned by the term."""
    found: Set[int] = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Gen):
            found.add(node.cell)
        elif isinstance(node, Compose):
            stack.append(node.left)
            stack.append(node.right)
        else:
            stack.append(node.term)
    return found


def subterms(t: Term) -> Iterator[Term]:
    """Iterate over the term and all of its subterms, parents first."""
    yield t
    if isinstance(t, Compose):
        yield from subterms(t.left)
        yield from subterms(t.right)
    elif isinstance(t, Boundary):
        yield from subterms(t.term)


def rename(t: Term, mapping: Union[Mapping[int, int], Sequence[int], Callable[[int], int]]) -> Term:
    """
    Rename generators through a cell map.

    Args:
        t: The term
        mapping: Dictionary, sequence indexed by old id, or function from
            old to new cell ids

    Returns:
        The renamed term
    """
    lookup = mapping.__getitem__ if isinstance(mapping, (Mapping, list, tuple)) else mapping
    if isinstance(t, Gen):
        return Gen(lookup(t.cell))
    if isinstance(t, Compose):
        return Compose(rename(t.left, lookup), rename(t.right, lookup), t.k)
    return Boundary(rename(t.term, lookup), t.k, t.sign)


def substitute(t: Term, images: Mapping[int, Term]) -> Term:
    """Replace every generator by its image, keeping the tree as it is."""
    if isinstance(t, Gen):
        return images[t.cell]
    if isinstance(t, Compose):
        return Compose(substitute(t.left, images), substitute(t.right, images), t.k)
    return Boundary(substitute(t.term, images), t.k, t.sign)


def occurrence_counts(t: Term) -> Counter:
    """
    Count generator occurrences outside of boundary coercions.

    This is the term-walk used as an oracle for top-dimensional counting.
    """
    counts: Counter = Counter()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Gen):
            counts[node.cell] += 1
        elif isinstance(node, Compose):
            stack.append(node.left)
            stack.append(node.right)
    return counts


def term_size(t: Term) -> int:
    """Number of nodes of the term."""
    return sum(1 for _ in subterms(t))


def render(t: Term, names: Optional[Mapping[int, str]] = None) -> str:
    """
    Human readable form of a term.

    Args:
        t: The term
        names: Optional display names for cells

    Returns:
        A string such as "(f #0 g)" or "src1(alpha)"
    """
    if isinstance(t, Gen):
        if names is not None and t.cell in names:
            return names[t.cell]
        return str(t.cell)
    if isinstance(t, Compose):
        return f"({render(t.left, names)} #{t.k} {render(t.right, names)})"
    prefix = "src" if t.sign is Sign.MINUS else "tgt"
    return f"{prefix}{t.k}({render(t.term, names)})"


def term_to_json(t: Term) -> Dict[str, Any]:
    """Encode a term as nested JSON objects."""
    if isinstance(t, Gen):
        return {"gen": t.cell}
    if isinstance(t, Compose):
        return {"comp": [term_to_json(t.left), term_to_json(t.right), t.k]}
    return {"bnd": [term_to_json(t.term), t.k, t.sign.value]}


def term_from_json(data: Any) -> Term:
    """
    Decode a term from its JSON form.

    Raises:
        ValueError: If the data is not a term encoding
    """
    if not isinstance(data, dict) or len(data) != 1:
        raise ValueError(f"Malformed term: {data!r}")
    if "gen" in data:
        cell = data["gen"]
        if not isinstance(cell, int) or isinstance(cell, bool):
            raise ValueError(f"Generator id must be an integer, got {cell!r}")
        return Gen(cell)
    if "comp" in data:
        parts = data["comp"]
        if not isinstance(parts, list) or len(parts) != 3 or not isinstance(parts[2], int):
            raise ValueError(f"Malformed composite: {parts!r}")
        return Compose(term_from_json(parts[0]), term_from_json(parts[1]), parts[2])
    if "bnd" in data:
        parts = data["bnd"]
        if not isinstance(parts, list) or len(parts) != 3 or not isinstance(parts[1], int):
            raise ValueError(f"Malformed boundary: {parts!r}")
        return Boundary(term_from_json(parts[0]), parts[1], Sign.parse(parts[2]))
    raise ValueError(f"Unknown term node: {sorted(data)}")
