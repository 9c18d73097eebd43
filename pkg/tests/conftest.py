import random

import pytest


@pytest.fixture
def rng() -> random.Random:
    """Per-test deterministic generator; reseed locally for independence."""
    return random.Random(0xC9)
