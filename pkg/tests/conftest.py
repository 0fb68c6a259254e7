import numpy as np
import pytest

from s3harmonics import sample_interior_points


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)


@pytest.fixture
def points(rng):
    return sample_interior_points(40, rng)
