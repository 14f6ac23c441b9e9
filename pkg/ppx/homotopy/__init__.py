"""Horns, anodyne extensions, cylinders, realization and homology."""

from ppx.homotopy.anodyne import (
    AnodyneGenerator,
    AnodyneStep,
    anodyne_steps,
    boundary_occurrences,
    cylinder_Dprime,
    cylinder_Dprime_base,
    cylinder_end,
    cylinder_relative,
    generating_cofibration,
    horn,
    horns,
    occurs_once,
    pushout_product,
    recognize_anodyne_pushout,
)
from ppx.homotopy.homology import (
    HomologyGroup,
    boundary_matrix,
    euler_characteristic,
    homology,
    is_acyclic,
    reduced_homology,
)
from ppx.homotopy.realization import (
    SemiSimplicialSet,
    check_mono,
    disjoint_union,
    horn_simplex,
    is_levelwise_injective,
    orientals_embed,
    realize,
    realize_morphism,
    simplex,
    simplex_boundary,
)

__all__ = [
    "AnodyneGenerator",
    "AnodyneStep",
    "HomologyGroup",
    "SemiSimplicialSet",
    "anodyne_steps",
    "boundary_matrix",
    "boundary_occurrences",
    "check_mono",
    "cylinder_Dprime",
    "cylinder_Dprime_base",
    "cylinder_end",
    "cylinder_relative",
    "disjoint_union",
    "euler_characteristic",
    "generating_cofibration",
    "homology",
    "horn",
    "horn_simplex",
    "horns",
    "is_acyclic",
    "is_levelwise_injective",
    "occurs_once",
    "orientals_embed",
    "pushout_product",
    "realize",
    "realize_morphism",
    "recognize_anodyne_pushout",
    "reduced_homology",
    "simplex",
    "simplex_boundary",
]
