"""
Sparse integer vectors over an arbitrary hashable basis.

Vector is a dictionary basis element -> int whose missing keys read as 0
and whose zero entries are removed as soon as they appear. It supports
addition, subtraction and multiplication by integers.
"""

from typing import Callable, Hashable, Iterable, List, Mapping, Tuple, Union

Pairs = Union[Mapping[Hashable, int], Iterable[Tuple[Hashable, int]]]


class Vector(dict):
    """Finitely supported integer combination of basis elements."""

    def __init__(self, data: Pairs = ()):
        super().__init__()
        self.iadd_coef(1, data)

    def __getitem__(self, key):
        return self.get(key, 0)

    def iadd_coef(self, coef: int, other: Pairs) -> "Vector":
        """self += coef * other."""
        if coef == 0:
            return self
        items = other.items() if isinstance(other, Mapping) else other
        for key, value in items:
            if value == 0:
                continue
            total = self.get(key, 0) + coef * value
            if total == 0:
                self.pop(key, None)
            else:
                dict.__setitem__(self, key, total)
        return self

    def __iadd__(self, other: Pairs) -> "Vector":
        return self.iadd_coef(1, other)

    def __isub__(self, other: Pairs) -> "Vector":
        return self.iadd_coef(-1, other)

    def __add__(self, other: Pairs) -> "Vector":
        return Vector(self).iadd_coef(1, other)

    def __sub__(self, other: Pairs) -> "Vector":
        return Vector(self).iadd_coef(-1, other)

    def __neg__(self) -> "Vector":
        return Vector((k, -v) for k, v in self.items())

    def __mul__(self, n: int) -> "Vector":
        if n == 0:
            return Vector()
        return Vector((k, n * v) for k, v in self.items())

    def __rmul__(self, n: int) -> "Vector":
        return self.__mul__(n)

    def __hash__(self) -> int:  # type: ignore[override]
        return hash(frozenset(self.items()))

    def support(self) -> frozenset:
        """Basis elements with a nonzero coefficient."""
        return frozenset(self)

    def restrict(self, keep: Callable[[Hashable], bool]) -> "Vector":
        """Entries whose basis element satisfies the predicate."""
        return Vector((k, v) for k, v in self.items() if keep(k))

    def is_nonnegative(self) -> bool:
        """True when every coefficient is >= 0."""
        return all(v > 0 for v in self.values())

    def map_keys(self, f: Callable[[Hashable], Hashable]) -> "Vector":
        """Push the vector forward along a map of basis elements."""
        result = Vector()
        for k, v in self.items():
            result.iadd_coef(v, ((f(k), 1),))
        return result

    def sorted_items(self, order: Callable[[Hashable], object] = repr) -> List[Tuple[Hashable, int]]:
        """Entries in a deterministic order."""
        return sorted(self.items(), key=lambda kv: order(kv[0]))


def linear_extension(v: Mapping[Hashable, int], on_basis: Callable[[Hashable], Mapping[Hashable, int]]) -> Vector:
    """Apply the linear map given on basis elements to a vector."""
    result = Vector()
    for k, coef in v.items():
        result.iadd_coef(coef, on_basis(k))
    return result


def basis_vector(key: Hashable, coef: int = 1) -> Vector:
    """The vector coef * key."""
    return Vector(((key, coef),))
