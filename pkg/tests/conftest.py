import math
import random

import pytest

from corpus import load_diagram
from laurent import LaurentPoly, TorusPoint

MINUS_ONE_2 = TorusPoint.of(math.pi, math.pi)


def poly(text: str, num_vars: int = 2) -> LaurentPoly:
    return LaurentPoly.parse(text, num_vars)


@pytest.fixture
def clasp_kink():
    return load_diagram("clasp_kink")


@pytest.fixture
def trefoil_right():
    return load_diagram("trefoil_right")


@pytest.fixture
def trefoil_left():
    return load_diagram("trefoil_left")


@pytest.fixture
def hopf():
    return load_diagram("hopf")


@pytest.fixture
def rng():
    return random.Random(20231)
