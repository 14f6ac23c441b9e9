"""
In-code builders for the example polygraphs and morphisms.

The JSON fixtures under data/fixtures are produced from the same data;
the builders are used where a test needs morphisms or fresh instances.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

from ppx.core.constructions import identify_cells
from ppx.core.morphism import PolygraphMorphism, compose_morphisms
from ppx.core.polygraph import ClassTag, Polygraph, PolygraphBuilder
from ppx.core.terms import Compose, Gen, Term, term_from_json, term_to_json
from ppx.homotopy.anodyne import cylinder_Dprime
from ppx.steiner.construct import globe, globe_boundary, oriental


@dataclass
class Example:
    """
    A named polygraph, optionally with a distinguished arrow.

    Attributes:
        name: Fixture name
        description: One-line description
        polygraph: The polygraph
        arrow: Distinguished arrow, if any
    """
    name: str
    description: str
    polygraph: Polygraph
    arrow: Optional[Term] = None

    def __post_init__(self):
        """Validate example after initialization."""
        if not self.name:
            raise ValueError("Example name cannot be empty")

    def to_dict(self) -> Dict[str, object]:
        """Fixture file contents."""
        data: Dict[str, object] = {"name": self.name, "description": self.description}
        data.update(self.polygraph.to_dict())
        if self.arrow is not None:
            data["arrow"] = term_to_json(self.arrow)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Example":
        """Create example from fixture file contents."""
        arrow = term_from_json(data["arrow"]) if "arrow" in data else None
        return cls(data["name"], data.get("description", ""), Polygraph.from_dict(data), arrow)


def ce1_Y() -> Polygraph:
    """
    Positive, non-regular 3-polygraph.

    0-cells x, y, z; 1-cells f, g: x -> y and h, k: y -> z; 2-cells
    alpha, beta: f => g and gamma, epsilon: h => k; one 3-cell
    Omega: alpha #_0 gamma -> beta #_0 epsilon.
    """
    b = PolygraphBuilder()
    x, y, z = b.add("x"), b.add("y"), b.add("z")
    f, g = b.add("f", Gen(x), Gen(y)), b.add("g", Gen(x), Gen(y))
    h, k = b.add("h", Gen(y), Gen(z)), b.add("k", Gen(y), Gen(z))
    alpha, beta = b.add("α", Gen(f), Gen(g)), b.add("β", Gen(f), Gen(g))
    gamma, eps = b.add("γ", Gen(h), Gen(k)), b.add("ε", Gen(h), Gen(k))
    b.add("Ω", Compose(Gen(alpha), Gen(gamma), 0), Compose(Gen(beta), Gen(eps), 0), dim=3)
    return b.build(ClassTag.POSITIVE)


def ce1_omega(y: Optional[Polygraph] = None) -> Term:
    """The 3-cell Omega as an arrow."""
    return (y or ce1_Y()).gen("Ω")


def ce1_collapse() -> Tuple[Polygraph, PolygraphMorphism]:
    """The quotient Y -> Y' identifying x and y."""
    y = ce1_Y()
    return identify_cells(y, [(y.cell_by_name("x").id, y.cell_by_name("y").id)])


def ce1_Y_prime() -> Polygraph:
    """Y with x and y identified."""
    return ce1_collapse()[0]


def ce1_X() -> Tuple[Polygraph, Term]:
    """The horizontal composite alpha #_0 gamma as a 2-polyplex of 9 cells."""
    y = ce1_Y()
    keep = [y.cell_by_name(n).id for n in ("x", "y", "z", "f", "g", "h", "k", "α", "γ")]
    x = y.restrict(keep, ClassTag.POSITIVE)
    return x, Compose(x.gen("α"), x.gen("γ"), 0)


def ce2_X() -> Polygraph:
    """A loop f: x -> x with a 2-cell alpha: f => f."""
    b = PolygraphBuilder()
    x = b.add("x")
    f = b.add("f", Gen(x), Gen(x))
    b.add("α", Gen(f), Gen(f))
    return b.build(ClassTag.POSITIVE)


def ce2_Y() -> Polygraph:
    """Two 1-cells g: x -> t, h: t -> x with 2-cells beta: g => g, gamma: h => h."""
    b = PolygraphBuilder()
    x, t = b.add("x"), b.add("t")
    g, h = b.add("g", Gen(x), Gen(t)), b.add("h", Gen(t), Gen(x))
    b.add("β", Gen(g), Gen(g))
    b.add("γ", Gen(h), Gen(h))
    return b.build(ClassTag.POSITIVE)


def ce2_lambda() -> PolygraphMorphism:
    """x to x, f to g #_0 h, alpha to beta #_0 gamma."""
    x, y = ce2_X(), ce2_Y()
    images = {
        x.cell_by_name("x").id: y.gen("x"),
        x.cell_by_name("f").id: Compose(y.gen("g"), y.gen("h"), 0),
        x.cell_by_name("α").id: Compose(y.gen("β"), y.gen("γ"), 0),
    }
    return PolygraphMorphism(x, y, images)


def ce2_collapse() -> Tuple[Polygraph, PolygraphMorphism]:
    """The quotient Y -> Y' identifying x and t."""
    y = ce2_Y()
    return identify_cells(y, [(y.cell_by_name("x").id, y.cell_by_name("t").id)])


def ce2_Y_prime() -> Polygraph:
    """Y with x and t identified."""
    return ce2_collapse()[0]


def ce2_lambda_prime() -> PolygraphMorphism:
    """The composite X -> Y -> Y'."""
    lam = ce2_lambda()
    _, q = ce2_collapse()
    return compose_morphisms(lam, q)


def d_prime_star() -> Polygraph:
    """The cylinder D'_* on the point."""
    return cylinder_Dprime()


def _ce1_x_example() -> Example:
    x, arrow = ce1_X()
    return Example("ce1_X", "The 2-polyplex alpha #_0 gamma", x, arrow)


BUILDERS: Dict[str, Callable[[], Example]] = {
    "d0": lambda: Example("d0", "The point", globe(0), globe(0).gen("0")),
    "d1": lambda: Example("d1", "The interval", globe(1), globe(1).gen("1")),
    "d2": lambda: Example("d2", "The 2-globe", globe(2), globe(2).gen("2")),
    "d3": lambda: Example("d3", "The 3-globe", globe(3), globe(3).gen("3")),
    "d1_boundary": lambda: Example("d1_boundary", "Two points", globe_boundary(1)),
    "d2_boundary": lambda: Example("d2_boundary", "The circle made of two 1-cells", globe_boundary(2)),
    "d3_boundary": lambda: Example("d3_boundary", "The 2-sphere made of two 2-cells", globe_boundary(3)),
    "ce1_Y": lambda: Example("ce1_Y", "Positive non-regular 3-polygraph", ce1_Y(), ce1_omega()),
    "ce1_Y_prime": lambda: Example(
        "ce1_Y_prime", "ce1_Y with x and y identified", ce1_Y_prime(), ce1_Y_prime().gen("Ω")
    ),
    "ce1_X": _ce1_x_example,
    "ce2_X": lambda: Example("ce2_X", "A 2-cell on a loop", ce2_X()),
    "ce2_Y": lambda: Example("ce2_Y", "Two 2-cells on a two-edge loop", ce2_Y()),
    "ce2_Y_prime": lambda: Example("ce2_Y_prime", "ce2_Y with x and t identified", ce2_Y_prime()),
    "d_prime_star": lambda: Example("d_prime_star", "Cylinder on the point", d_prime_star()),
    "oriental_2": lambda: Example("oriental_2", "The oriental of the triangle", oriental(2), oriental(2).gen("[0,1,2]")),
}


def build_example(name: str) -> Example:
    """
    Build a named example.

    Raises:
        KeyError: If no example has that name
    """
    if name not in BUILDERS:
        raise KeyError(f"Unknown example {name!r}; known: {', '.join(sorted(BUILDERS))}")
    return BUILDERS[name]()
