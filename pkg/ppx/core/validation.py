"""
Well-formedness checks for polygraphs.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

from ppx.core.algebra import boundary, dimension
from ppx.core.morphism import same_arrow
from ppx.core.polygraph import Cell, ClassTag, Polygraph
from ppx.core.terms import SIGNS, Compose, Sign, Term, generators, structural_dim, subterms
from ppx.errors import PolygraphError


@dataclass
class ValidationReport:
    """
    Result of validating a polygraph.

    Attributes:
        issues: One message per violated axiom, in cell order
    """
    issues: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when no issue was found."""
        return not self.issues

    def add(self, message: str) -> None:
        """Record an issue."""
        self.issues.append(message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert report to dictionary format."""
        return {"ok": self.ok, "issues": list(self.issues)}


def _check_references(p: Polygraph, cell: Cell, report: ValidationReport) -> bool:
    if cell.src is None:
        return True
    ok = True
    for ref in sorted(generators(cell.src) | generators(cell.tgt)):
        if ref not in p:
            report.add(f"{cell.label} references unknown cell {ref}")
            ok = False
        elif p.dim_of(ref) >= cell.dim:
            report.add(f"{cell.label} references {p.cell(ref).label} of dimension {p.dim_of(ref)}")
            ok = False
    return ok


def _check_composites(p: Polygraph, t: Term) -> bool:
    for node in subterms(t):
        if isinstance(node, Compose):
            left = boundary(p, node.left, node.k, Sign.PLUS)
            right = boundary(p, node.right, node.k, Sign.MINUS)
            if not same_arrow(p, left, right):
                return False
    return True


def validate(p: Polygraph) -> ValidationReport:
    """
    List every axiom violation of a polygraph for its class tag.

    Checks references, dimensions of the attaching arrows, typing of every
    composite, parallelism of source and target, positivity when the tag
    asks for it and sphericity of every plex for regular polygraphs.

    Args:
        p: Polygraph to validate

    Returns:
        A report whose issues are empty iff p is well formed
    """
    report = ValidationReport()
    sound = True
    for cell in p:
        if cell.src is None:
            continue
        if not _check_references(p, cell, report):
            sound = False
            continue
        try:
            if structural_dim(cell.src, p.dim_of) > cell.dim - 1 or structural_dim(cell.tgt, p.dim_of) > cell.dim - 1:
                report.add(f"{cell.label} has an attaching arrow of dimension above {cell.dim - 1}")
                sound = False
                continue
            if not (_check_composites(p, cell.src) and _check_composites(p, cell.tgt)):
                report.add(f"ill-typed composition in the boundary of {cell.label}")
                sound = False
                continue
            for sign in SIGNS:
                if cell.dim >= 2 and not same_arrow(
                    p, boundary(p, cell.src, cell.dim - 2, sign), boundary(p, cell.tgt, cell.dim - 2, sign)
                ):
                    report.add(f"non-parallel boundary on {cell.label}")
                    sound = False
                    break
            if p.class_tag in (ClassTag.POSITIVE, ClassTag.REGULAR):
                if dimension(p, cell.src) != cell.dim - 1 or dimension(p, cell.tgt) != cell.dim - 1:
                    report.add(f"positivity violated: {cell.label} has an identity source or target")
                    sound = False
        except PolygraphError as e:
            report.add(f"{cell.label}: {e}")
            sound = False
    if sound and p.class_tag is ClassTag.REGULAR:
        from ppx.polyplex.regularity import non_spherical_cells

        for cell in non_spherical_cells(p):
            report.add(f"plex {cell.label} lacks spherical boundary")
    return report
