"""
Morphisms between free infinity-categories, given on generating cells.
"""

from typing import Any, Dict, List, Mapping

from ppx.core.algebra import (
    arrows_equal,
    boundary,
    dimension,
    is_positive,
    normalize,
    simplify_compose,
)
from ppx.core.polygraph import Polygraph
from ppx.core.terms import SIGNS, Compose, Gen, Sign, Term, term_from_json, term_to_json
from ppx.errors import NotACell


class PolygraphMorphism:
    """
    A functor X* -> Y* determined by the image of every generating cell.

    The morphism is polygraphic when every cell is sent to a generator of
    the same dimension.
    """

    def __init__(self, domain: Polygraph, codomain: Polygraph, images: Mapping[int, Term]):
        missing = [c.label for c in domain if c.id not in images]
        if missing:
            raise ValueError(f"Morphism has no image for cells {missing}")
        extra = set(images) - set(domain.ids)
        if extra:
            raise NotACell(f"Images given for unknown cells {sorted(extra)}")
        self.domain = domain
        self.codomain = codomain
        self.images: Dict[int, Term] = {x: images[x] for x in domain.ids}
        self._memo: Dict[Term, Term] = {}

    @classmethod
    def from_cell_map(
        cls, domain: Polygraph, codomain: Polygraph, cell_map: Mapping[int, int]
    ) -> "PolygraphMorphism":
        """Polygraphic morphism from a map of cell ids."""
        return cls(domain, codomain, {x: Gen(y) for x, y in cell_map.items()})

    def image(self, cell_id: int) -> Term:
        """Image of a generating cell."""
        return self.images[cell_id]

    def __call__(self, t: Term) -> Term:
        return eval_morphism(self, t)

    def is_polygraphic(self) -> bool:
        """True if every cell goes to a generator of the same dimension."""
        return all(
            isinstance(t, Gen) and self.codomain.dim_of(t.cell) == self.domain.dim_of(x)
            for x, t in self.images.items()
        )

    def cell_map(self) -> Dict[int, int]:
        """
        The underlying map of cells of a polygraphic morphism.

        Raises:
            ValueError: If the morphism is not polygraphic
        """
        if not self.is_polygraphic():
            raise ValueError("Morphism is not polygraphic")
        return {x: t.cell for x, t in self.images.items()}

    def is_mono(self) -> bool:
        """True for polygraphic morphisms that are injective on cells."""
        if not self.is_polygraphic():
            return False
        targets = list(self.cell_map().values())
        return len(set(targets)) == len(targets)

    def is_bijective(self) -> bool:
        """True for polygraphic morphisms that are bijections of cells."""
        return self.is_mono() and len(self.images) == len(self.codomain)

    def to_dict(self) -> Dict[str, Any]:
        """Convert morphism to dictionary format."""
        return {
            "domain": self.domain.to_dict(),
            "codomain": self.codomain.to_dict(),
            "images": [[x, term_to_json(t)] for x, t in self.images.items()],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PolygraphMorphism":
        """Create morphism from dictionary format."""
        return cls(
            Polygraph.from_dict(data["domain"]),
            Polygraph.from_dict(data["codomain"]),
            {int(x): term_from_json(t) for x, t in data["images"]},
        )

    def __repr__(self) -> str:
        return f"PolygraphMorphism({self.domain!r} -> {self.codomain!r})"


def eval_morphism(f: PolygraphMorphism, t: Term) -> Term:
    """
    Image of an arrow term under a morphism.

    Args:
        f: The morphism
        t: Term over f.domain

    Returns:
        A normalized term over f.codomain
    """
    if t in f._memo:
        return f._memo[t]
    y = f.codomain
    if isinstance(t, Gen):
        result = normalize(y, f.images[t.cell])
    elif isinstance(t, Compose):
        result = simplify_compose(y, eval_morphism(f, t.left), eval_morphism(f, t.right), t.k)
    else:
        result = boundary(y, eval_morphism(f, t.term), t.k, t.sign)
    f._memo[t] = result
    return result


def identity_morphism(p: Polygraph) -> PolygraphMorphism:
    """Identity of a polygraph."""
    return PolygraphMorphism(p, p, {x: Gen(x) for x in p.ids})


def compose_morphisms(f: PolygraphMorphism, g: PolygraphMorphism) -> PolygraphMorphism:
    """The composite g after f."""
    return PolygraphMorphism(f.domain, g.codomain, {x: eval_morphism(g, t) for x, t in f.images.items()})


def same_arrow(p: Polygraph, t: Term, u: Term) -> bool:
    """
    Arrow equality that falls back to the linear shadow off the positive class.

    On non-positive polygraphs two terms are accepted when their normal
    forms coincide or their linearizations agree.
    """
    a, b = normalize(p, t), normalize(p, u)
    if a == b:
        return True
    if is_positive(p):
        return arrows_equal(p, a, b)
    from ppx.linearization.delta import delta

    return dimension(p, a) == dimension(p, b) and delta(p, a) == delta(p, b)


def check_morphism(f: PolygraphMorphism) -> List[str]:
    """
    List the cells whose image is not compatible with their boundaries.

    Returns:
        One message per violation; empty when the morphism is well defined
    """
    issues: List[str] = []
    for cell in f.domain:
        try:
            image = eval_morphism(f, Gen(cell.id))
            if dimension(f.codomain, image) > cell.dim:
                issues.append(f"image of {cell.label} has dimension above {cell.dim}")
                continue
            if cell.dim == 0:
                continue
            for sign in SIGNS:
                face = cell.src if sign is Sign.MINUS else cell.tgt
                expected = eval_morphism(f, face)
                actual = boundary(f.codomain, image, cell.dim - 1, sign)
                if not same_arrow(f.codomain, expected, actual):
                    side = "source" if sign is Sign.MINUS else "target"
                    issues.append(f"image of {cell.label} does not respect its {side}")
        except ValueError as e:
            issues.append(f"image of {cell.label} is ill-typed: {e}")
    return issues
