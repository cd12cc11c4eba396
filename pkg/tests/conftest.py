import numpy as np
import pytest

from hardylab.arith import divisor_sieve


@pytest.fixture(scope="session")
def d2_table():
    return divisor_sieve(2, 10_000)


@pytest.fixture(scope="session")
def d3_table():
    return divisor_sieve(3, 20_000)


@pytest.fixture(scope="session")
def d4_table():
    return divisor_sieve(4, 10_000)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260808)
