"""
ppx: computations with positive and regular polygraphs.

This package provides:
1. Polygraphs, their arrows and the signed counting function delta
2. Recognition of polyplexes, plexes and spherical boundaries
3. Gray tensor products, joins, cones, orientals and cubes
4. Horn inclusions and the semi-simplicial realization with homology
5. Property suites re-checking all of the above on small instances
"""

__version__ = "0.1.0"
__author__ = "RomeroCode"

from ppx.verification.results import SuiteReport
from ppx.verification.runner import PaperVerifier

__all__ = ["PaperVerifier", "SuiteReport", "__version__"]
