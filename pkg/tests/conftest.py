import numpy as np
import pytest

import vilenkin as vk


@pytest.fixture(scope="session")
def walsh():
    return vk.number_system([2] * 6)


@pytest.fixture(scope="session")
def mixed():
    return vk.number_system([2, 3, 4, 2])


@pytest.fixture(params=["walsh", "mixed"])
def ns(request, walsh, mixed):
    return {"walsh": walsh, "mixed": mixed}[request.param]


@pytest.fixture()
def rng():
    return np.random.default_rng(1234)
