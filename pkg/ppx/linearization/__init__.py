"""Linearization of polygraphs: delta, sigma, the m-basis and globular groups."""

from ppx.linearization.delta import (
    PositivityMode,
    apply_functor,
    closure_check,
    closure_violations,
    delta,
    delta_vector,
    from_m_basis,
    image_subpolygraph,
    in_subpolygraph,
    m_vector,
    makkai_leq,
    pi_cell,
    pi_linear,
    pi_vector,
    positivity,
    preserves_alternate_positivity,
    preserves_sigma,
    sigma,
    to_m_basis,
)
from ppx.linearization.globular import (
    ChainComplex,
    DoubleSequence,
    GlobularGroup,
    chain_to_globular,
    from_double_sequence,
    globular_to_chain,
    linearize,
    pi_double_sequence,
    to_double_sequence,
)
from ppx.linearization.lincomb import Basis, LinComb
from ppx.linearization.vectors import Vector

__all__ = [
    "Basis",
    "ChainComplex",
    "DoubleSequence",
    "GlobularGroup",
    "LinComb",
    "PositivityMode",
    "Vector",
    "apply_functor",
    "chain_to_globular",
    "closure_check",
    "closure_violations",
    "delta",
    "delta_vector",
    "from_double_sequence",
    "from_m_basis",
    "globular_to_chain",
    "image_subpolygraph",
    "in_subpolygraph",
    "linearize",
    "m_vector",
    "makkai_leq",
    "pi_cell",
    "pi_double_sequence",
    "pi_linear",
    "pi_vector",
    "positivity",
    "preserves_alternate_positivity",
    "preserves_sigma",
    "sigma",
    "to_double_sequence",
    "to_m_basis",
]
