import pytest

from hchroma.graphs import SimpleGraph


@pytest.fixture
def csf_equal_pair():
    """Classic 5-vertex pair sharing the chromatic symmetric function.

    Non-isomorphic, equal at uniformity 1, separated at uniformity 2.
    """
    g1 = SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    g2 = SimpleGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4)])
    return g1, g2
