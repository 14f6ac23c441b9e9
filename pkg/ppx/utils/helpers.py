"""
Helper utilities for ppx.
"""

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from ppx.core.polygraph import Polygraph
from ppx.core.terms import Term, term_from_json
from ppx.homotopy.realization import SemiSimplicialSet
from ppx.utils.validators import validate_polygraph_data, validate_simplicial_data


def load_json(filepath: Path) -> Dict[str, Any]:
    """
    Load data from a JSON file.

    Args:
        filepath: Path to the JSON file

    Returns:
        Loaded data as dictionary
    """
    with open(filepath, "r", encoding="utf-8") as f:
        return json.load(f)


def dump_json(data: Any, indent: int = 2) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False) + "\n"


def save_json(data: Any, filepath: Path, indent: int = 2) -> None:
    """
    Save data to a JSON file.

    Args:
        data: Data to save
        filepath: Path to save to
        indent: Indentation level for formatting
    """
    filepath.parent.mkdir(parents=True, exist_ok=True)
    with open(filepath, "w", encoding="utf-8") as f:
        f.write(dump_json(data, indent))


def sha256_text(text: str) -> str:
    """Hex digest of a string."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def sha256_file(filepath: Path) -> str:
    """Hex digest of a file's bytes."""
    return hashlib.sha256(Path(filepath).read_bytes()).hexdigest()


def load_polygraph(filepath: Path) -> Tuple[Polygraph, Optional[Term]]:
    """
    Read a polygraph file, with its optional distinguished arrow.

    Returns:
        Tuple of (polygraph, arrow or None)

    Raises:
        ValueError: If the file does not describe a polygraph
    """
    data = load_json(filepath)
    ok, errors = validate_polygraph_data(data)
    if not ok:
        raise ValueError(f"{filepath}: " + "; ".join(errors))
    arrow = term_from_json(data["arrow"]) if "arrow" in data else None
    return Polygraph.from_dict(data), arrow


def load_semi_simplicial(filepath: Path) -> SemiSimplicialSet:
    """
    Read a semi-simplicial set file.

    Raises:
        ValueError: If the face lists are inconsistent
    """
    data = load_json(filepath)
    ok, errors = validate_simplicial_data(data)
    if not ok:
        raise ValueError(f"{filepath}: " + "; ".join(errors))
    return SemiSimplicialSet.from_dict(data)


def format_grades(grades: Tuple[int, ...]) -> str:
    """Cell counts as "a + b + c"."""
    return " + ".join(str(g) for g in grades) or "0"
