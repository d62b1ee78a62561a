import random

import pytest

from hilb4n.borel import borel_catalog
from hilb4n.poly import variables


@pytest.fixture(scope="session")
def catalog():
    return borel_catalog()


@pytest.fixture(scope="session")
def xyzt():
    return variables()


@pytest.fixture
def rng():
    return random.Random(20260810)
