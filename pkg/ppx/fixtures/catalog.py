"""
Catalog of the shipped JSON fixtures.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

from ppx.fixtures.examples import BUILDERS, Example
from ppx.homotopy.realization import SemiSimplicialSet
from ppx.utils.helpers import load_json, load_semi_simplicial, save_json
from ppx.utils.validators import validate_polygraph_data

LOGGER = logging.getLogger(__name__)

DEFAULT_FIXTURE_DIR = Path(__file__).resolve().parent.parent.parent / "data" / "fixtures"
EXPECTED_FILE = "expected.json"
SIMPLICIAL_DIR = "simplicial"


class FixtureCatalog:
    """
    Named fixtures read from a directory tree of JSON files.

    Files are looked up by stem, so "globes/d3.json" is the fixture "d3".
    """

    def __init__(self, root: Optional[Path] = None):
        """
        Initialize the catalog.

        Args:
            root: Fixture directory, data/fixtures by default
        """
        self.root = Path(root) if root is not None else DEFAULT_FIXTURE_DIR
        self._paths: Dict[str, Path] = {}
        if self.root.is_dir():
            for path in sorted(self.root.rglob("*.json")):
                if path.name != EXPECTED_FILE and path.parent.name != SIMPLICIAL_DIR:
                    self._paths[path.stem] = path
        self._loaded: Dict[str, Example] = {}

    def names(self) -> List[str]:
        """Names of the fixtures on disk."""
        return sorted(self._paths)

    def path(self, name: str) -> Path:
        """
        File of a fixture.

        Raises:
            KeyError: If no fixture has that name
        """
        if name not in self._paths:
            raise KeyError(f"No fixture named {name!r} under {self.root}")
        return self._paths[name]

    def get(self, name: str) -> Example:
        """
        Load a fixture.

        Raises:
            KeyError: If no fixture has that name
            ValueError: If the file is not a valid polygraph
        """
        if name not in self._loaded:
            data = load_json(self.path(name))
            ok, errors = validate_polygraph_data(data)
            if not ok:
                raise ValueError(f"Fixture {name}: " + "; ".join(errors))
            self._loaded[name] = Example.from_dict(data)
        return self._loaded[name]

    def expected(self) -> Dict[str, Any]:
        """The table of expected values."""
        return load_json(self.root / EXPECTED_FILE)

    def simplicial(self, name: str) -> SemiSimplicialSet:
        """
        Load a semi-simplicial set from the simplicial directory.

        Raises:
            ValueError: If the file is inconsistent
        """
        return load_semi_simplicial(self.root / SIMPLICIAL_DIR / f"{name}.json")

    def stale(self) -> List[str]:
        """Fixtures whose file differs from what the in-code builder produces."""
        differing = []
        for name in self.names():
            if name in BUILDERS and load_json(self._paths[name]) != BUILDERS[name]().to_dict():
                differing.append(name)
        return differing

    def regenerate(self, names: Optional[List[str]] = None) -> List[Path]:
        """
        Rewrite fixture files from the in-code builders.

        Args:
            names: Fixtures to rewrite, every known builder by default

        Returns:
            The files written
        """
        written = []
        for name in names or sorted(BUILDERS):
            path = self._paths.get(name, self.root / f"{name}.json")
            save_json(BUILDERS[name]().to_dict(), path)
            self._paths[name] = path
            self._loaded.pop(name, None)
            written.append(path)
        LOGGER.info("Wrote %d fixtures under %s", len(written), self.root)
        return written

    def get_statistics(self) -> Dict[str, Any]:
        """Cell counts of every fixture."""
        return {name: list(self.get(name).polygraph.grades()) for name in self.names()}

    def __len__(self) -> int:
        return len(self._paths)

    def __iter__(self) -> Iterator[Example]:
        return (self.get(name) for name in self.names())
