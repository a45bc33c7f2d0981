"""
Shared fixtures: small universes and families are built once per session.
"""

import pytest

from src.concepts.syntax import Signature
from src.oracle.families import AllSubsetsFamily, el_family
from src.oracle.universe import enumerate_universe


@pytest.fixture(scope="session")
def sig_r():
    return Signature.of([], ["r"])


@pytest.fixture(scope="session")
def sig_a():
    return Signature.of(["A"], ["r"])


@pytest.fixture(scope="session")
def chains_universe(sig_r):
    """Trees of height <= 2 without concept names: 4 classes."""
    return enumerate_universe(sig_r, 2)


@pytest.fixture(scope="session")
def small_universe(sig_a):
    """Trees of height <= 1 over ({A}, {r}): 8 classes."""
    return enumerate_universe(sig_a, 1)


@pytest.fixture(scope="session")
def labelled_universe(sig_a):
    """Trees of height <= 2 over ({A}, {r}): 512 classes."""
    return enumerate_universe(sig_a, 2)


@pytest.fixture(scope="session")
def chains_el(chains_universe):
    return el_family(chains_universe)


@pytest.fixture(scope="session")
def small_el(small_universe):
    return el_family(small_universe)


@pytest.fixture(scope="session")
def small_alc(small_universe):
    return AllSubsetsFamily(small_universe)


@pytest.fixture(scope="session")
def labelled_el(labelled_universe):
    return el_family(labelled_universe)
