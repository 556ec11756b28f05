import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'src'))

from qfock.fock import FockBasis  # noqa: E402

Q_GRID = [-0.9, -0.5, 0.0, 0.5, 0.9]


@pytest.fixture(params=Q_GRID)
def q(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def basis_d2():
    """Two letters (e, f), truncated at level 6, q = 1/2"""
    return FockBasis(2, 6, 0.5)
