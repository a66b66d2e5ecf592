import random

from pathlab.connectivity import is_two_connected
from pathlab.corpus import (
    CORPUS_2CONN_9,
    CORPUS_2CONN_LE8,
    all_graphs,
    are_isomorphic,
    connected_graphs,
    corpus_lines,
    iso_invariant,
    random_two_connected_stream,
    sorted_graph6,
    two_connected_graphs,
)
from pathlab.graph import Graph
from pathlab.graph6 import parse_graph6

# Published counts for graphs up to isomorphism.
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
TWO_CONNECTED_COUNTS = {3: 1, 4: 3, 5: 10, 6: 56, 7: 468, 8: 7123, 9: 194066}


def test_enumeration_counts_small():
    for n, want in ALL_COUNTS.items():
        assert len(all_graphs(n)) == want
    for n, want in CONNECTED_COUNTS.items():
        assert len(connected_graphs(n)) == want
    for n in (3, 4, 5, 6):
        assert len(two_connected_graphs(n)) == TWO_CONNECTED_COUNTS[n]


def test_two_connected_graphs_really_are():
    for n in (3, 4, 5, 6):
        for g in two_connected_graphs(n):
            assert is_two_connected(g)


def test_no_isomorphic_duplicates_small():
    graphs = all_graphs(5)
    for i, g in enumerate(graphs):
        for h in graphs[i + 1:]:
            assert not are_isomorphic(g.rows(), h.rows())


def test_invariant_is_isomorphism_invariant():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 8)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.4
        ]
        g = Graph(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph(n, [(perm[u], perm[v]) for u, v in edges])
        assert iso_invariant(g.rows()) == iso_invariant(h.rows())
        assert are_isomorphic(g.rows(), h.rows())


def test_non_isomorphic_detected():
    c6 = Graph.cycle(6)
    two_triangles = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not are_isomorphic(c6.rows(), two_triangles.rows())


def test_shipped_corpus_le8(two_conn_le8):
    assert len(two_conn_le8) == sum(
        TWO_CONNECTED_COUNTS[n] for n in range(3, 9)
    )
    by_n = {}
    for g in two_conn_le8:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == {n: TWO_CONNECTED_COUNTS[n] for n in range(3, 9)}
    rng = random.Random(7)
    for g in rng.sample(two_conn_le8, 300):
        assert is_two_connected(g)


def test_shipped_corpus_9_counts():
    lines = corpus_lines(CORPUS_2CONN_9)
    assert len(lines) == TWO_CONNECTED_COUNTS[9]
    rng = random.Random(9)
    for line in rng.sample(lines, 200):
        g = parse_graph6(line)
        assert g.n == 9
        assert is_two_connected(g)


def test_corpus_lines_sorted_and_unique(two_conn_le8):
    lines = corpus_lines(CORPUS_2CONN_LE8)
    assert lines == sorted_graph6(two_conn_le8)
    assert len(set(lines)) == len(lines)


def test_random_stream_deterministic():
    a = [g for g in random_two_connected_stream(30, seed=5, n_min=5, n_max=10)]
    b = [g for g in random_two_connected_stream(30, seed=5, n_min=5, n_max=10)]
    assert a == b
    c = [g for g in random_two_connected_stream(30, seed=6, n_min=5, n_max=10)]
    assert a != c
    for g in a:
        assert is_two_connected(g)
        assert 5 <= g.n <= 10
