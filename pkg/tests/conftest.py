import numpy as np
import pytest

from smplab.linalg import Mat2, MatrixPair


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_pair(rng: np.random.Generator) -> MatrixPair:
    e = rng.standard_normal(8)
    return MatrixPair(Mat2(*e[:4]), Mat2(*e[4:]))
