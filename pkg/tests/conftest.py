import numpy as np
import pytest

from helicity_clifford.clifford import build_gamma_set


@pytest.fixture(scope="session")
def gs():
    return build_gamma_set()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
