"""Shared fixtures: the special-umbra catalogue and seeded random umbrae."""

import random

import pytest

from umbral_tsh.umbral import Umbra, special

CATALOGUE = ("unity", "bell", "boolean_unity", "bernoulli", "euler")


@pytest.fixture(scope="session")
def catalogue():
    return {name: special(name) for name in CATALOGUE}


@pytest.fixture(scope="session")
def random_umbrae():
    """Three umbrae with small integer moments up to order 8."""
    rng = random.Random(20240611)
    umbrae = []
    for position in range(3):
        values = [1] + [rng.randint(-4, 4) for _ in range(8)]
        umbrae.append(Umbra.from_sequence(values, f"random{position}"))
    return umbrae


@pytest.fixture(scope="session")
def test_umbrae(catalogue, random_umbrae):
    return list(catalogue.values()) + list(random_umbrae)
