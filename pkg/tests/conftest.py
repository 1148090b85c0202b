from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings

from skewgoppa.field_tower import build_tower
from skewgoppa.ore_poly import OreRing

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, str]] = {}

EXAMPLE_MODULUS = [1, 0, 1, 1, 1, 0, 0, 0, 1]


@pytest.fixture(scope="session")
def example_tower():
    return build_tower(2, 8, 1, 4, EXAMPLE_MODULUS)


@pytest.fixture(scope="session")
def example_ring(example_tower):
    return OreRing(example_tower)


@pytest.fixture(scope="session")
def Z(example_tower):
    from skewgoppa.reference import Exponents

    return Exponents(example_tower)


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {status}  {detail}")
