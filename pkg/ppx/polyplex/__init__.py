"""Polyplexes: classification, sphericity, generic factorization and enumeration."""

from ppx.polyplex.classify import Classification, ClassifiedArrow, classify, classify_cell, classify_term
from ppx.polyplex.collapse import OwnerKind, Ownership, collapse_single_top, inner_owner
from ppx.polyplex.enumerate import EnumerationKind, enumerate_polyplexes, occurrences
from ppx.polyplex.generic import GenericFactorization, generic_factorization, is_generic, syntactic_lift
from ppx.polyplex.polyplex import Polyplex, boundary_polyplex, polyplex_compose
from ppx.polyplex.regularity import (
    has_spherical_boundary,
    is_plex,
    is_polyplex,
    is_regular,
    is_regular_arrow,
    is_regular_morphism,
    non_spherical_cells,
    shape_is_spherical,
    sigma_image,
)
from ppx.polyplex.shape import REGISTRY, Shape

__all__ = [
    "Classification",
    "ClassifiedArrow",
    "EnumerationKind",
    "GenericFactorization",
    "OwnerKind",
    "Ownership",
    "Polyplex",
    "REGISTRY",
    "Shape",
    "boundary_polyplex",
    "classify",
    "classify_cell",
    "classify_term",
    "collapse_single_top",
    "enumerate_polyplexes",
    "generic_factorization",
    "has_spherical_boundary",
    "inner_owner",
    "is_generic",
    "is_plex",
    "is_polyplex",
    "is_regular",
    "is_regular_arrow",
    "is_regular_morphism",
    "non_spherical_cells",
    "occurrences",
    "polyplex_compose",
    "shape_is_spherical",
    "sigma_image",
    "syntactic_lift",
]
