"""Shared fixtures."""

import pytest

from union_coloring import ColorSet, Coloring, build_graph
from union_coloring.generators import cycle_graph, path_graph


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p3_coloring():
    """The coloring {1}, {2} of P_3."""
    return Coloring(2, (ColorSet.of(1), ColorSet.of(2)))


@pytest.fixture
def c7():
    return cycle_graph(7)


@pytest.fixture
def two_p3():
    return build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
