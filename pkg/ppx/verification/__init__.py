"""Property suites, their results and run manifests."""

from ppx.verification.manifest import MANIFEST_NAME, TIMING_NAME, RunManifest
from ppx.verification.results import PropertyResult, SuiteReport
from ppx.verification.runner import PAIR_MAX_CELLS, SUITES, PaperVerifier

__all__ = [
    "MANIFEST_NAME",
    "PAIR_MAX_CELLS",
    "PaperVerifier",
    "PropertyResult",
    "RunManifest",
    "SUITES",
    "SuiteReport",
    "TIMING_NAME",
]
