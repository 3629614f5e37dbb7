import pytest

from edgereg.graphs import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)


@pytest.fixture(scope="session")
def c4():
    return cycle_graph(4)


@pytest.fixture(scope="session")
def c6():
    return cycle_graph(6)


@pytest.fixture(scope="session")
def c8():
    return cycle_graph(8)


@pytest.fixture(scope="session")
def p4():
    return path_graph(4)


@pytest.fixture(scope="session")
def k3():
    return complete_graph(3)


@pytest.fixture(scope="session")
def star3():
    return complete_bipartite(1, 3)
