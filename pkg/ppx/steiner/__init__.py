"""Gray tensor products, joins and cones, from linear formulas back to polygraphs."""

from ppx.steiner.cone import ConeCell, ConeKind, cone_group, cone_pi
from ppx.steiner.construct import (
    ConstructionResult,
    GlobeToTensor,
    build_cone,
    build_tensor,
    cone_polygraph,
    cube,
    globe,
    globe_arrow,
    globe_boundary,
    globe_to_tensor,
    oriental,
    oriental_cell,
    oriental_subsets,
    polygraph_from_group,
    subset_name,
    tensor_polygraph,
)
from ppx.steiner.extract import BasedComplex, Extractor, atom, based_complex, extract_term, extract_vector
from ppx.steiner.tensor import (
    BASE_POINT,
    JoinCell,
    Suspended,
    TensorCell,
    desuspend,
    join_group,
    reassociate,
    suspend,
    tensor_chain,
    tensor_globular,
    tensor_grades,
    tensor_pi,
    tensor_pi_symmetric,
    tensor_pi_vector,
    unit_group,
)

__all__ = [
    "BASE_POINT",
    "BasedComplex",
    "ConeCell",
    "ConeKind",
    "ConstructionResult",
    "Extractor",
    "GlobeToTensor",
    "JoinCell",
    "Suspended",
    "TensorCell",
    "atom",
    "based_complex",
    "build_cone",
    "build_tensor",
    "cone_group",
    "cone_pi",
    "cone_polygraph",
    "cube",
    "desuspend",
    "extract_term",
    "extract_vector",
    "globe",
    "globe_arrow",
    "globe_boundary",
    "globe_to_tensor",
    "join_group",
    "oriental",
    "oriental_cell",
    "oriental_subsets",
    "polygraph_from_group",
    "reassociate",
    "subset_name",
    "suspend",
    "tensor_chain",
    "tensor_globular",
    "tensor_grades",
    "tensor_pi",
    "tensor_pi_symmetric",
    "tensor_pi_vector",
    "tensor_polygraph",
    "unit_group",
]
