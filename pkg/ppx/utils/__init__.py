"""Utility functions for ppx."""

from ppx.utils.helpers import (
    dump_json,
    format_grades,
    load_json,
    load_polygraph,
    load_semi_simplicial,
    save_json,
    sha256_file,
    sha256_text,
)
from ppx.utils.validators import (
    validate_cell_data,
    validate_expected,
    validate_polygraph_data,
    validate_simplicial_data,
    validate_term_data,
)

__all__ = [
    "dump_json",
    "format_grades",
    "load_json",
    "load_polygraph",
    "load_semi_simplicial",
    "save_json",
    "sha256_file",
    "sha256_text",
    "validate_cell_data",
    "validate_expected",
    "validate_polygraph_data",
    "validate_simplicial_data",
    "validate_term_data",
]
