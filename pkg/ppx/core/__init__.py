"""Core data model: polygraphs, arrow terms, morphisms and their algebra."""

from ppx.core.terms import (
    SIGNS,
    Boundary,
    Compose,
    Gen,
    Sign,
    Term,
    generators,
    occurrence_counts,
    render,
    rename,
    term_from_json,
    term_to_json,
)
from ppx.core.polygraph import (
    Cell,
    ClassTag,
    Polygraph,
    PolygraphBuilder,
    SubPolygraph,
    disjoint_union,
)
from ppx.core.algebra import arrows_equal, boundary, compose, dimension, identity, is_positive, normalize
from ppx.core.morphism import (
    PolygraphMorphism,
    check_morphism,
    compose_morphisms,
    eval_morphism,
    identity_morphism,
    same_arrow,
)
from ppx.core.constructions import PushoutResult, SubLattice, identify_cells, pushout, sub_lattice
from ppx.core.validation import ValidationReport, validate

__all__ = [
    "SIGNS",
    "Boundary",
    "Cell",
    "ClassTag",
    "Compose",
    "Gen",
    "Polygraph",
    "PolygraphBuilder",
    "PolygraphMorphism",
    "PushoutResult",
    "Sign",
    "SubLattice",
    "SubPolygraph",
    "Term",
    "ValidationReport",
    "arrows_equal",
    "boundary",
    "check_morphism",
    "compose",
    "compose_morphisms",
    "dimension",
    "disjoint_union",
    "eval_morphism",
    "generators",
    "identify_cells",
    "identity",
    "identity_morphism",
    "is_positive",
    "normalize",
    "occurrence_counts",
    "pushout",
    "render",
    "rename",
    "same_arrow",
    "sub_lattice",
    "term_from_json",
    "term_to_json",
    "validate",
]
