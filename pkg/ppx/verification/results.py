"""
Results of checked properties and their aggregation.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from ppx.utils.helpers import save_json


@dataclass
class PropertyResult:
    """
    Outcome of one checked property.

    Attributes:
        name: Property name
        suite: Suite the property belongs to
        passed: Whether every instance passed
        instances: Number of instances checked
        failures: One message per failing instance
        elapsed_seconds: Wall time spent, if measured
        observations: Outcome counts of a property that records without asserting
    """
    name: str
    suite: str
    passed: bool
    instances: int
    failures: List[str] = field(default_factory=list)
    elapsed_seconds: Optional[float] = None
    observations: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        """Validate result after initialization."""
        if self.instances < 0:
            raise ValueError(f"Instance count must be non-negative, got {self.instances}")
        if not self.name:
            raise ValueError("Property name cannot be empty")

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        """Convert to dictionary."""
        data: Dict[str, Any] = {
            "name": self.name,
            "suite": self.suite,
            "passed": self.passed,
            "instances": self.instances,
            "failures": list(self.failures),
        }
        if self.observations:
            data["observations"] = dict(self.observations)
        if include_timing:
            data["elapsed_seconds"] = self.elapsed_seconds
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PropertyResult":
        """Create result from dictionary format."""
        return cls(
            name=data["name"],
            suite=data["suite"],
            passed=data["passed"],
            instances=data["instances"],
            failures=list(data.get("failures", [])),
            elapsed_seconds=data.get("elapsed_seconds"),
            observations=dict(data.get("observations", {})),
        )


class SuiteReport:
    """
    Aggregate property results across suites.
    """

    def __init__(self, results: Optional[List[PropertyResult]] = None):
        self.results: List[PropertyResult] = list(results or [])

    def add_result(self, result: PropertyResult) -> None:
        """Add a property result."""
        self.results.append(result)

    def extend(self, results: List[PropertyResult]) -> None:
        self.results.extend(results)

    @property
    def passed(self) -> bool:
        """True when every property passed."""
        return all(r.passed for r in self.results)

    def failed(self) -> List[PropertyResult]:
        """Properties with at least one failing instance."""
        return [r for r in self.results if not r.passed]

    def calculate_pass_rate(self) -> float:
        """Fraction of properties that passed."""
        if not self.results:
            return 0.0
        return sum(1 for r in self.results if r.passed) / len(self.results)

    def total_instances(self) -> int:
        return sum(r.instances for r in self.results)

    def by_suite(self) -> Dict[str, List[PropertyResult]]:
        """Results grouped by suite, in insertion order."""
        groups: Dict[str, List[PropertyResult]] = {}
        for r in self.results:
            groups.setdefault(r.suite, []).append(r)
        return groups

    def get_summary(self) -> Dict[str, Any]:
        """Get complete summary."""
        return {
            "total_properties": len(self.results),
            "passed": self.passed,
            "pass_rate": self.calculate_pass_rate(),
            "total_instances": self.total_instances(),
            "failed_properties": [r.name for r in self.failed()],
            "suites": {
                suite: {"properties": len(rs), "passed": all(r.passed for r in rs)}
                for suite, rs in self.by_suite().items()
            },
        }

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        return {
            "results": [r.to_dict(include_timing) for r in self.results],
            "summary": self.get_summary(),
        }

    def save_results(self, filepath: Path, include_timing: bool = False) -> None:
        """Save results to a JSON file; timings are left out unless asked for."""
        save_json(self.to_dict(include_timing), Path(filepath))

    def reset(self) -> None:
        """Reset all results."""
        self.results.clear()
