"""Example polygraphs, random instances and the fixture catalog."""

from ppx.fixtures.catalog import DEFAULT_FIXTURE_DIR, FixtureCatalog
from ppx.fixtures.examples import (
    BUILDERS,
    Example,
    build_example,
    ce1_collapse,
    ce1_omega,
    ce1_X,
    ce1_Y,
    ce1_Y_prime,
    ce2_collapse,
    ce2_lambda,
    ce2_lambda_prime,
    ce2_X,
    ce2_Y,
    ce2_Y_prime,
    d_prime_star,
)
from ppx.fixtures.randomized import random_chain_complex, random_identifications, random_terms

__all__ = [
    "BUILDERS",
    "DEFAULT_FIXTURE_DIR",
    "Example",
    "FixtureCatalog",
    "build_example",
    "ce1_X",
    "ce1_Y",
    "ce1_Y_prime",
    "ce1_collapse",
    "ce1_omega",
    "ce2_X",
    "ce2_Y",
    "ce2_Y_prime",
    "ce2_collapse",
    "ce2_lambda",
    "ce2_lambda_prime",
    "d_prime_star",
    "random_chain_complex",
    "random_identifications",
    "random_terms",
]
