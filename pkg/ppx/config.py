"""
Size bounds shared by enumeration, construction and verification.

Defaults can be overridden from the environment (PPX_MAX_CELLS, PPX_WORKERS)
and, on the command line, by explicit flags.
"""

import os
from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, Mapping, Optional

ENV_MAX_CELLS = "PPX_MAX_CELLS"
ENV_WORKERS = "PPX_WORKERS"


@dataclass(frozen=True)
class Bounds:
    """
    Desk-scale limits.

    Attributes:
        max_dim: Largest dimension handled by enumeration
        max_cells: Largest number of cells of an enumerated polyplex
        max_oriental: Largest oriental or cube that may be built
        max_snf_columns: Largest boundary matrix handed to Smith normal form
        workers: Number of worker threads used by the verification runner
    """
    max_dim: int = 3
    max_cells: int = 12
    max_oriental: int = 5
    max_snf_columns: int = 2000
    workers: int = 1

    def __post_init__(self):
        """Validate bounds after initialization."""
        if self.max_dim < 0:
            raise ValueError(f"max_dim must be non-negative, got {self.max_dim}")
        if self.max_cells < 1:
            raise ValueError(f"max_cells must be positive, got {self.max_cells}")
        if self.max_oriental < 0:
            raise ValueError(f"max_oriental must be non-negative, got {self.max_oriental}")
        if self.max_snf_columns < 1:
            raise ValueError(
                f"max_snf_columns must be positive, got {self.max_snf_columns}"
            )
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Bounds":
        """
        Build bounds from environment variables.

        Args:
            environ: Mapping to read from, defaults to os.environ

        Returns:
            Bounds with PPX_MAX_CELLS and PPX_WORKERS applied

        Raises:
            ValueError: If a variable is set to something that is not an integer
        """
        environ = os.environ if environ is None else environ
        overrides: Dict[str, int] = {}
        for variable, field_name in ((ENV_MAX_CELLS, "max_cells"), (ENV_WORKERS, "workers")):
            raw = environ.get(variable)
            if raw is None or raw == "":
                continue
            try:
                overrides[field_name] = int(raw)
            except ValueError:
                raise ValueError(f"{variable} must be an integer, got {raw!r}") from None
        return cls(**overrides)

    def override(self, **changes: Optional[int]) -> "Bounds":
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def to_dict(self) -> Dict[str, Any]:
        """Convert bounds to dictionary format."""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Bounds":
        """Create bounds from dictionary format."""
        return cls(**data)


DEFAULT_BOUNDS = Bounds()
