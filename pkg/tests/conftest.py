import random

import pytest

from geu.worked import worked_problem


@pytest.fixture
def worked():
    return worked_problem()


@pytest.fixture
def rng():
    return random.Random(20240811)
