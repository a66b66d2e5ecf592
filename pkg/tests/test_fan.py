import random

import pytest

from conftest import random_graph, wheel
from pathlab.fan import (
    Fan,
    attachment_graph,
    cycle_components,
    extract_fan,
    fan_implies_long_cycle,
    max_fan_edges,
    validate_fan,
)
from pathlab.connectivity import is_two_connected
from pathlab.graph import Graph, GraphBuilder
from pathlab.solver import Cycle, Path, longest_cycle


def test_star_fan_on_wheel():
    g = wheel(5)
    rim = Cycle((0, 1, 2, 3, 4))
    h = frozenset({5})
    fan = extract_fan(g, rim, h, 5)
    ok, clause = validate_fan(g, rim, h, fan)
    assert ok, clause
    assert fan.edge_count == 5
    assert fan.origin == 5
    assert set(fan.termini) == {0, 1, 2, 3, 4}


def test_validate_fan_violations():
    g = wheel(5)
    rim = Cycle((0, 1, 2, 3, 4))
    h = frozenset({5})
    single = Fan(5, (Path((5, 0)),))
    ok, clause = validate_fan(g, rim, h, single)
    assert not ok and clause == "t>=2"

    dup_termini = Fan(5, (Path((5, 0)), Path((5, 0))))
    ok, clause = validate_fan(g, rim, h, dup_termini)
    assert not ok and clause == "termini-distinct"

    # paths sharing an internal vertex
    g2 = GraphBuilder.from_graph(wheel(5))
    v6 = g2.add_vertex()
    g2.add_edge(v6, 5).add_edge(v6, 0).add_edge(v6, 2)
    g2 = g2.build()
    h2 = frozenset({5, 6})
    fan = Fan(5, (Path((5, 6, 0)), Path((5, 6, 2))))
    ok, clause = validate_fan(g2, Cycle((0, 1, 2, 3, 4)), h2, fan)
    assert not ok and clause == "internally-disjoint"


def test_attachment_graph_t2_single_vertex():
    # C4 plus one vertex adjacent to two cycle vertices: triangle terminal graph
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)])
    cyc = Cycle((0, 1, 2, 3))
    ag = attachment_graph(g, cyc, frozenset({4}))
    assert ag.t == 2
    assert ag.u1 == ag.u2 == frozenset({4})
    assert ag.graph.n == 3
    assert ag.graph.edge_count == 3
    assert is_two_connected(ag.graph)


def test_attachment_graph_t1_path_component():
    # C6 with a path 6-7-8 attached at rim 0 and 3: terminal graph is C5-like
    g = Graph(
        9,
        [(i, (i + 1) % 6) for i in range(6)]
        + [(6, 7), (7, 8), (6, 0), (8, 3)],
    )
    cyc = Cycle((0, 1, 2, 3, 4, 5))
    h = frozenset({6, 7, 8})
    ag = attachment_graph(g, cyc, h)
    assert ag.t == 1
    assert ag.anchor == 0
    assert is_two_connected(ag.graph)
    # degree preservation for every component vertex
    for i, v in enumerate(ag.h_vertices):
        assert ag.graph.degree(i) == g.degree(v)


def test_extract_fan_t1_construction():
    g = Graph(
        9,
        [(i, (i + 1) % 6) for i in range(6)]
        + [(6, 7), (7, 8), (6, 0), (8, 3)],
    )
    cyc = Cycle((0, 1, 2, 3, 4, 5))
    h = frozenset({6, 7, 8})
    # hypothesis holds for k = 2 (all component degrees are 2)
    fan = extract_fan(g, cyc, h, 2)
    ok, clause = validate_fan(g, cyc, h, fan)
    assert ok, clause
    assert fan.edge_count >= 2
    # k = 3 fails the hypothesis but the construction still succeeds
    with pytest.raises(ValueError, match="hypothesis fails"):
        extract_fan(g, cyc, h, 3)
    fan = extract_fan(g, cyc, h, 3, require_hypothesis=False)
    ok, clause = validate_fan(g, cyc, h, fan)
    assert ok, clause
    assert fan.edge_count >= 3


def test_extract_fan_component_mismatch():
    g = wheel(5)
    with pytest.raises(ValueError, match="component"):
        extract_fan(g, Cycle((0, 1, 2, 3, 4)), frozenset({0, 5}), 2)


def test_max_fan_edges_wheel():
    g = wheel(5)
    assert max_fan_edges(g, Cycle((0, 1, 2, 3, 4)), frozenset({5})) == 5


def test_fan_implies_long_cycle_k23():
    # K_{2,3}: longest cycle misses one degree-2 vertex; it fans with 2 edges
    g = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert fan_implies_long_cycle(g, 2)
    for k in range(1, 6):
        assert fan_implies_long_cycle(g, k)
    with pytest.raises(ValueError, match="vacuous"):
        fan_implies_long_cycle(Graph.complete(4), 2)
    with pytest.raises(ValueError, match="2-connected"):
        fan_implies_long_cycle(Graph.path(4), 2)


def test_cycle_components():
    g = Graph(7, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (3, 4), (2, 5), (5, 6), (6, 2)])
    comps = cycle_components(g, Cycle((0, 1, 2)))
    assert comps == [frozenset({3, 4}), frozenset({5, 6})]


def _random_fan_instance(rng):
    """A 2-connected graph, a deterministic cycle, a component, and a k
    satisfying the extraction hypothesis."""
    n = rng.randint(6, 10)
    g = random_graph(n, rng.uniform(0.3, 0.55), rng)
    if not is_two_connected(g):
        return None
    cyc = longest_cycle(g)
    comps = cycle_components(g, cyc)
    if not comps:
        return None
    h = comps[rng.randrange(len(comps))]
    degs = sorted((g.degree(v) for v in h), reverse=True)
    need = (len(h) + 2) // 2
    kmax = degs[need - 1]
    if kmax < 1:
        return None
    return g, cyc, h, rng.randint(1, kmax)


def test_random_extractions_quick():
    rng = random.Random(777)
    done = 0
    while done < 150:
        inst = _random_fan_instance(rng)
        if inst is None:
            continue
        g, cyc, h, k = inst
        fan = extract_fan(g, cyc, h, k)
        ok, clause = validate_fan(g, cyc, h, fan)
        assert ok, clause
        assert fan.edge_count >= k
        done += 1
