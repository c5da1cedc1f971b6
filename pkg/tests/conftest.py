# tests/conftest.py
"""
Shared fixtures: catalog codes and a seeded random-code factory.
"""
from pathlib import Path

import numpy as np
import pytest

from ldikit.schemas import GeneratorMatrix
from ldikit.services import (
    make_ldi,
    random_commuting_code,
    steane_ldi,
    steane_standard,
    two_register_example,
)

CODES_DIR = Path(__file__).resolve().parent.parent / "docs" / "codes"


@pytest.fixture
def codes_dir() -> Path:
    return CODES_DIR


@pytest.fixture
def steane() -> GeneratorMatrix:
    return steane_ldi().matrix


@pytest.fixture
def steane_qubit() -> GeneratorMatrix:
    return steane_standard().matrix


@pytest.fixture
def pair() -> GeneratorMatrix:
    return two_register_example().matrix


@pytest.fixture
def xx_zz() -> GeneratorMatrix:
    """<XX, ZZ>: commutes for qubits only."""
    return GeneratorMatrix.from_rows(2, [[1, 1, 0, 0], [0, 0, 1, 1]])


@pytest.fixture
def random_codes():
    """Yield (code, q) pairs from a seeded generator."""

    def factory(count, n_range=(2, 5), primes=(2, 3, 5), seed=0):
        rng = np.random.default_rng(seed)
        for index in range(count):
            n = int(rng.integers(n_range[0], n_range[1] + 1))
            r = int(rng.integers(1, n + 1))
            q = int(rng.choice(primes))
            yield random_commuting_code(n, r, q, seed=seed * 100_003 + index), q

    return factory


@pytest.fixture
def random_ldi_codes(random_codes):
    def factory(count, n_range=(2, 4), primes=(2, 3), seed=1):
        for code, q in random_codes(count, n_range=n_range, primes=primes, seed=seed):
            yield make_ldi(code, q), q

    return factory
