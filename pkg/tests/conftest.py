import os
import sys

import numpy as np
import pytest

HERE = os.path.dirname(os.path.abspath(__file__))
SRC = os.path.join(os.path.dirname(HERE), "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)

from fourq_slocc.core.catalog import named_state  # noqa: E402
from fourq_slocc.core.state import PureState4  # noqa: E402


def random_state(rng: np.random.Generator) -> PureState4:
    """Unit-norm state with i.i.d. complex-Gaussian amplitudes."""
    z = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    return PureState4(z / np.linalg.norm(z))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def chi():
    return named_state("chi")


@pytest.fixture
def phi_m1():
    return named_state("phi_m1")


@pytest.fixture
def phi_m2():
    return named_state("phi_m2")


@pytest.fixture
def ghz4():
    return named_state("ghz4")


@pytest.fixture
def w4():
    return named_state("w4")


@pytest.fixture
def cluster4():
    return named_state("cluster4")


@pytest.fixture
def zero_ket():
    return named_state("zero_ket")
