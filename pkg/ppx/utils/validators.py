"""
Validators for ppx input files.

Validators never raise: they return (is_valid, list_of_errors).
"""

from typing import Any, Dict, List, Tuple

from ppx.core.polygraph import ClassTag
from ppx.core.terms import term_from_json


def validate_term_data(data: Any) -> bool:
    """
    Validate the JSON encoding of a term.

    Args:
        data: Candidate term encoding

    Returns:
        True if valid, False otherwise
    """
    try:
        term_from_json(data)
    except (ValueError, TypeError):
        return False
    return True


def validate_cell_data(data: Any, index: int) -> List[str]:
    """Structural problems of one cell record."""
    if not isinstance(data, dict):
        return [f"Cell at index {index} must be an object"]
    errors = []
    if not isinstance(data.get("id"), int) or isinstance(data.get("id"), bool):
        errors.append(f"Cell at index {index} has no integer id")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        errors.append(f"Cell at index {index} has no valid dim")
        return errors
    has_boundary = "src" in data or "tgt" in data
    if dim == 0 and has_boundary:
        errors.append(f"0-cell at index {index} cannot have a source or target")
    if dim > 0:
        for key in ("src", "tgt"):
            if key not in data:
                errors.append(f"Cell at index {index} is missing {key}")
            elif not validate_term_data(data[key]):
                errors.append(f"Cell at index {index} has a malformed {key}")
    if "name" in data and not isinstance(data["name"], str):
        errors.append(f"Cell at index {index} has a non-string name")
    return errors


def validate_polygraph_data(data: Any) -> Tuple[bool, List[str]]:
    """
    Validate a polygraph file before decoding it.

    Args:
        data: Parsed JSON

    Returns:
        Tuple of (is_valid, list_of_errors)
    """
    if not isinstance(data, dict):
        return False, ["A polygraph must be a JSON object"]
    cells = data.get("cells")
    if not isinstance(cells, list):
        return False, ["A polygraph needs a list of cells"]
    errors: List[str] = []
    if "class" in data and data["class"] not in {t.value for t in ClassTag}:
        errors.append(f"Unknown class {data['class']!r}")
    seen = set()
    for i, cell in enumerate(cells):
        errors.extend(validate_cell_data(cell, i))
        if isinstance(cell, dict) and isinstance(cell.get("id"), int):
            if cell["id"] in seen:
                errors.append(f"Duplicate cell id {cell['id']}")
            seen.add(cell["id"])
    if "arrow" in data and not validate_term_data(data["arrow"]):
        errors.append("Malformed arrow")
    return len(errors) == 0, errors


def validate_simplicial_data(data: Any) -> Tuple[bool, List[str]]:
    """
    Validate a semi-simplicial set file: shapes and index ranges only.

    Returns:
        Tuple of (is_valid, list_of_errors)
    """
    if not isinstance(data, dict):
        return False, ["A semi-simplicial set must be a JSON object"]
    simplices, faces = data.get("simplices"), data.get("faces")
    if not isinstance(simplices, list) or not isinstance(faces, list):
        return False, ["Both simplices and faces must be lists"]
    if len(simplices) != len(faces):
        return False, ["simplices and faces must have the same number of dimensions"]
    errors: List[str] = []
    for n, (level, level_faces) in enumerate(zip(simplices, faces)):
        if not isinstance(level, list) or not isinstance(level_faces, list) or len(level) != len(level_faces):
            errors.append(f"Dimension {n} has mismatched simplices and faces")
            continue
        below = len(simplices[n - 1]) if n > 0 else 0
        for s, f in enumerate(level_faces):
            expected = n + 1 if n > 0 else 0
            if not isinstance(f, list) or len(f) != expected:
                errors.append(f"Simplex {s} of dimension {n} needs {expected} faces")
            elif any(not isinstance(i, int) or not 0 <= i < below for i in f):
                errors.append(f"Simplex {s} of dimension {n} has a face out of range")
    return len(errors) == 0, errors


def validate_expected(data: Dict[str, Any], required: List[str]) -> Tuple[bool, List[str]]:
    """Check that an expected-values table has the required keys."""
    errors = [f"Missing expected value {key!r}" for key in required if key not in data]
    return len(errors) == 0, errors
