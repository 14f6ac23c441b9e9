"""
Run manifests written next to batch outputs.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from ppx.utils.helpers import dump_json, load_json, save_json, sha256_file, sha256_text

MANIFEST_NAME = "manifest.json"
TIMING_NAME = "timing.json"


@dataclass
class RunManifest:
    """
    Record of one batch run.

    Everything except elapsed_seconds is deterministic for fixed inputs
    and bounds. The timing is saved to its own file, so manifest.json is
    byte-identical across reruns.

    Attributes:
        command: Subcommand name
        arguments: Normalized command arguments
        inputs: SHA-256 of every input file, by path
        outputs: Output files, relative to the output directory
        counts: Named counts produced by the run
        version: Library version
        elapsed_seconds: Wall time of the run
    """
    command: str
    arguments: Dict[str, Any] = field(default_factory=dict)
    inputs: Dict[str, str] = field(default_factory=dict)
    outputs: List[str] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)
    version: str = ""
    elapsed_seconds: Optional[float] = None

    def __post_init__(self):
        """Validate manifest after initialization."""
        if not self.command:
            raise ValueError("Manifest command cannot be empty")

    def add_input(self, path: Path) -> None:
        """Hash an input file."""
        self.inputs[str(path)] = sha256_file(path)

    def add_output(self, path: Path) -> None:
        if str(path) not in self.outputs:
            self.outputs.append(str(path))
            self.outputs.sort()

    def to_dict(self) -> Dict[str, Any]:
        """Convert manifest to dictionary format."""
        data = self.deterministic_dict()
        data["elapsed_seconds"] = self.elapsed_seconds
        return data

    def deterministic_dict(self) -> Dict[str, Any]:
        """The manifest without its timing."""
        return {
            "command": self.command,
            "arguments": dict(sorted(self.arguments.items())),
            "inputs": dict(sorted(self.inputs.items())),
            "outputs": sorted(self.outputs),
            "counts": dict(sorted(self.counts.items())),
            "version": self.version,
        }

    def digest(self) -> str:
        """SHA-256 of the deterministic part."""
        return sha256_text(dump_json(self.deterministic_dict()))

    def same_run(self, other: "RunManifest") -> bool:
        """Whether two manifests describe identical runs, timing aside."""
        return self.digest() == other.digest()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunManifest":
        """Create manifest from dictionary format."""
        return cls(
            command=data["command"],
            arguments=dict(data.get("arguments", {})),
            inputs=dict(data.get("inputs", {})),
            outputs=list(data.get("outputs", [])),
            counts=dict(data.get("counts", {})),
            version=data.get("version", ""),
            elapsed_seconds=data.get("elapsed_seconds"),
        )

    def save(self, directory: Path) -> Path:
        """
        Write manifest.json into a directory and return its path.

        The wall time, when known, goes to timing.json next to it.
        """
        directory = Path(directory)
        path = directory / MANIFEST_NAME
        save_json(self.deterministic_dict(), path)
        if self.elapsed_seconds is not None:
            save_json({"elapsed_seconds": self.elapsed_seconds}, directory / TIMING_NAME)
        return path

    @classmethod
    def load(cls, directory: Path) -> "RunManifest":
        directory = Path(directory)
        data = load_json(directory / MANIFEST_NAME)
        timing = directory / TIMING_NAME
        if timing.exists():
            data["elapsed_seconds"] = load_json(timing).get("elapsed_seconds")
        return cls.from_dict(data)
