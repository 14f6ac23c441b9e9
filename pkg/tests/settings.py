"""Hypothesis settings profiles shared by the property tests.

Usage:
    from tests.settings import STANDARD_SETTINGS

    @given(seed=st.integers(0, 10_000))
    @STANDARD_SETTINGS
    def test_something(seed):
        ...
"""

from hypothesis import HealthCheck, settings

# Regular property tests
STANDARD_SETTINGS = settings(max_examples=50, deadline=None)

# Tests that build tensors or realizations per example
SLOW_SETTINGS = settings(max_examples=10, deadline=None, suppress_health_check=[HealthCheck.too_slow])

# Cheap checks where more examples add little
QUICK_SETTINGS = settings(max_examples=20, deadline=None)
