import random

import pytest

from ribs import (
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    line_graph,
    make_graph,
    path_graph,
)


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return make_graph(10, outer + inner + spokes)


def graph_zoo() -> dict[str, Graph]:
    """Named small graphs reused across test modules, all <= 12 vertices."""
    zoo = {
        "empty1": empty_graph(1),
        "empty4": empty_graph(4),
        "k1": complete_graph(1),
        "k4": complete_graph(4),
        "k5": complete_graph(5),
        "p2": path_graph(2),
        "p4": path_graph(4),
        "p7": path_graph(7),
        "c4": cycle_graph(4),
        "c5": cycle_graph(5),
        "c6": cycle_graph(6),
        "c9": cycle_graph(9),
        "k33": complete_multipartite([3, 3]),
        "k223": complete_multipartite([2, 2, 3]),
        "star5": make_graph(6, [(0, i) for i in range(1, 6)]),
        "paw": make_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
        "bull": make_graph(5, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]),
        "prism": make_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
        "cube": make_graph(8, [(i, i ^ 1) for i in range(0, 8, 2)]
                              + [(i, i ^ 2) for i in range(8) if i < i ^ 2]
                              + [(i, i ^ 4) for i in range(8) if i < i ^ 4]),
        "petersen": _petersen(),
        "l_c6": line_graph(cycle_graph(6))[0],
        "grid23": make_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]),
        "two_triangles": disjoint_union([complete_graph(3), complete_graph(3)]),
        "p4_and_c5": disjoint_union([path_graph(4), cycle_graph(5)]),
        "k4_minus": make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        "wheel6": make_graph(6, [(i, (i % 5) + 1) for i in range(1, 6)]
                                + [(0, i) for i in range(1, 6)]),
    }
    return zoo


@pytest.fixture(scope="session")
def zoo() -> dict[str, Graph]:
    return graph_zoo()


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return make_graph(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260822)
