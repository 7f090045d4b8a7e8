import numpy as np
import pytest

from core.graph import directed_cycle, directed_path
from gadget.fixtures import (
    diamond_gadget,
    h_gadget,
    marked_graph_gadget,
    path_gadget,
    single_edge_gadget,
    ternary_shared_system,
    ternary_system,
)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def hcal():
    return h_gadget()


@pytest.fixture
def path1():
    return path_gadget(1)


@pytest.fixture
def edge_gadget():
    return single_edge_gadget()


@pytest.fixture
def ternary():
    return ternary_system()


@pytest.fixture
def ternary_shared():
    return ternary_shared_system()


@pytest.fixture
def marked():
    return marked_graph_gadget()


@pytest.fixture
def diamond():
    return diamond_gadget()


@pytest.fixture
def p2():
    return directed_path(2)


@pytest.fixture
def c3():
    return directed_cycle(3)
