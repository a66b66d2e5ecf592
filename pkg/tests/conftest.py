import random

import pytest

from pathlab.graph import Graph


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def two_triangles_shared_vertex() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def wheel(rim: int) -> Graph:
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(rim, i) for i in range(rim)]
    return Graph(rim + 1, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def all_simple_paths(g: Graph):
    """Every simple path with >= 1 edge, enumerated from each start vertex."""
    rows = g.rows()
    out = []
    for start in range(g.n):
        stack = [(start, 1 << start, (start,))]
        while stack:
            v, used, seq = stack.pop()
            if len(seq) >= 2:
                out.append(seq)
            ext = rows[v] & ~used
            while ext:
                low = ext & -ext
                w = low.bit_length() - 1
                stack.append((w, used | low, seq + (w,)))
                ext ^= low
    return out


@pytest.fixture(scope="session")
def two_conn_le8():
    from pathlab.corpus import CORPUS_2CONN_LE8, load_corpus

    return load_corpus(CORPUS_2CONN_LE8)


@pytest.fixture(scope="session")
def connected_le6():
    from pathlab.corpus import connected_graphs

    out = []
    for n in range(1, 7):
        out.extend(connected_graphs(n))
    return out


@pytest.fixture(scope="session")
def two_conn_le7():
    from pathlab.corpus import two_connected_graphs

    out = []
    for n in range(3, 8):
        out.extend(two_connected_graphs(n))
    return out
