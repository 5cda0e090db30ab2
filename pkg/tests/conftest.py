import itertools
import json
from pathlib import Path

import pytest
from hypothesis import settings

from planesat.drawing import drawing_from_rotation
from planesat.graph import make_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def derived():
    return json.loads((FIXTURES / "derived.json").read_text())


@pytest.fixture
def k4():
    return make_graph(4, itertools.combinations(range(4), 2))


def k4_drawing():
    # 3 inside triangle 0-1-2
    return drawing_from_rotation(4, {0: (1, 3, 2), 1: (2, 3, 0), 2: (0, 3, 1), 3: (0, 1, 2)})


def triangle(n=3, placement=None):
    return drawing_from_rotation(n, {0: (1, 2), 1: (2, 0), 2: (0, 1)}, placement=placement)


INNER = (0, (0, 2))  # inner face of the triangle 0-1-2 as drawn by ``triangle``
