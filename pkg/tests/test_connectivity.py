import random

import pytest

from conftest import random_graph, two_triangles_shared_vertex
from pathlab.connectivity import (
    add_binding_vertex,
    connected_components,
    cut_components,
    decompose,
    end_block_anchors,
    is_separable,
    is_two_connected,
    join_to_end_blocks,
    remove_simplicial,
    two_cut_piece,
)
from pathlab.graph import Graph, GraphBuilder


def test_decompose_two_triangles():
    d = decompose(two_triangles_shared_vertex())
    assert sorted(sorted(b) for b in d.blocks) == [[0, 1, 2], [2, 3, 4]]
    assert d.cut_vertices == {2}
    assert len(d.end_blocks) == 2
    for eb in d.end_blocks:
        assert eb.cut_vertex == 2
        assert eb.inner == eb.vertices - {2}


def test_decompose_path():
    d = decompose(Graph.path(4))
    assert len(d.blocks) == 3
    assert d.cut_vertices == {1, 2}
    assert len(d.end_blocks) == 2


def test_decompose_complete():
    d = decompose(Graph.complete(4))
    assert len(d.blocks) == 1
    assert not d.cut_vertices
    assert not d.end_blocks


def test_decompose_single_vertex_and_edge():
    assert decompose(Graph(1)).blocks == (frozenset({0}),)
    d = decompose(Graph(2, [(0, 1)]))
    assert d.blocks == (frozenset({0, 1}),)
    assert not d.end_blocks


def test_decompose_rejects_disconnected():
    with pytest.raises(ValueError, match="different components"):
        decompose(Graph(4, [(0, 1), (2, 3)]))


def test_is_two_connected_examples():
    assert is_two_connected(Graph.cycle(4))
    assert not is_two_connected(Graph.path(4))
    assert not is_two_connected(Graph(2, [(0, 1)]))


def test_connected_components():
    comps = connected_components(Graph(5, [(0, 2), (1, 3)]))
    assert comps == [frozenset({0, 2}), frozenset({1, 3}), frozenset({4})]


def test_decompose_invariants(two_conn_le7, connected_le6):
    for g in connected_le6:
        d = decompose(g)
        # edges partition across blocks
        seen = set()
        for blk in d.blocks:
            blk_edges = {
                (u, v) for u, v in g.edges() if u in blk and v in blk
            }
            assert not (blk_edges & seen)
            seen |= blk_edges
        assert seen == set(g.edges())
        # block-cut tree is a tree
        if len(d.blocks) > 1:
            incidences = sum(
                sum(1 for blk in d.blocks if c in blk) - 1
                for c in d.cut_vertices
            )
            assert len(d.blocks) - 1 == incidences
        # 2-connectivity iff single block on >= 3 vertices
        assert is_two_connected(g) == (len(d.blocks) == 1 and g.n >= 3)


def test_end_block_anchors_examples():
    # two triangles sharing c=2, apex adjacent to one non-cut vertex of each
    g = GraphBuilder.from_graph(two_triangles_shared_vertex())
    v = g.add_vertex()
    g.add_edge(v, 0).add_edge(v, 3)
    g = g.build()
    assert is_two_connected(g)
    anchors = end_block_anchors(g, v)
    assert set(anchors.values()) == {0, 3}

    # C4 with v on the cycle: both end edges of the leftover path anchor
    c4 = Graph.cycle(4)
    anchors = end_block_anchors(c4, 0)
    assert len(anchors) == 2
    assert set(anchors.values()) == {1, 3}


def test_end_block_anchors_rejects_bad_inputs():
    with pytest.raises(ValueError):
        end_block_anchors(Graph.path(4), 0)  # not 2-connected
    with pytest.raises(ValueError):
        end_block_anchors(Graph.complete(4), 0)  # removal stays 2-connected


def test_join_to_end_blocks_examples():
    # P3, v an endpoint: one end-block not containing v -> triangle
    out = join_to_end_blocks(Graph.path(3), 0)
    assert out == Graph(3, [(0, 1), (1, 2), (0, 2)])

    g = two_triangles_shared_vertex()
    out = join_to_end_blocks(g, 0)
    assert is_two_connected(out)

    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    out = join_to_end_blocks(star, 1)
    assert out.edge_count == 5
    assert is_two_connected(out)


def test_join_to_end_blocks_rejects():
    with pytest.raises(ValueError, match="not separable"):
        join_to_end_blocks(Graph.cycle(4), 0)
    with pytest.raises(ValueError, match="cut vertex"):
        join_to_end_blocks(Graph.path(3), 1)


def test_add_binding_vertex_examples():
    out, v = add_binding_vertex(Graph.path(3))
    assert out == Graph.cycle(4) or is_two_connected(out)
    assert v == 3
    out, v = add_binding_vertex(Graph.path(5))
    assert out.degree(5) == 2 and is_two_connected(out)
    out, v = add_binding_vertex(two_triangles_shared_vertex())
    assert out.n == 6 and is_two_connected(out)


def test_two_cut_piece_examples():
    c6 = Graph.cycle(6)
    comps = cut_components(c6, 0, 3)
    assert len(comps) == 2
    piece, mapping = two_cut_piece(c6, 0, 3, [comps[0]])
    assert piece.n == 4 and is_two_connected(piece)
    assert piece.edge_count == 4  # path of 3 edges plus the added chord

    # theta graph: three length-2 paths between 0 and 1
    theta = Graph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    comps = cut_components(theta, 0, 1)
    piece, mapping = two_cut_piece(theta, 0, 1, comps[:2])
    assert piece.n == 4 and is_two_connected(piece)


def test_two_cut_piece_k4_minus_matching():
    # C4 written as K4 minus a perfect matching; cut pair gives a triangle
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    comps = cut_components(g, 0, 2)
    piece, mapping = two_cut_piece(g, 0, 2, [comps[0]])
    assert piece == Graph.complete(3)


def test_two_cut_piece_rejects():
    with pytest.raises(ValueError, match="not a cut"):
        two_cut_piece(Graph.complete(4), 0, 1, [frozenset({2})])
    c6 = Graph.cycle(6)
    with pytest.raises(ValueError, match="at least one"):
        two_cut_piece(c6, 0, 3, [])
    with pytest.raises(ValueError, match="not a component"):
        two_cut_piece(c6, 0, 3, [frozenset({1})])


def test_remove_simplicial_examples():
    out, mapping = remove_simplicial(Graph.complete(4), 0)
    assert out == Graph.complete(3)

    # C4 plus a chord: a degree-2 vertex on the chorded triangle is simplicial
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    out, mapping = remove_simplicial(g, 1)
    assert is_two_connected(out)

    with pytest.raises(ValueError, match="not a clique"):
        remove_simplicial(Graph.cycle(5), 0)
    with pytest.raises(ValueError, match="fewer than 3"):
        remove_simplicial(Graph.complete(3), 0)


def test_anchor_sweep_small(two_conn_le7):
    # every end-block of g - v owns an anchor adjacent to v
    for g in two_conn_le7:
        if g.n < 4:
            continue
        for v in range(g.n):
            try:
                anchors = end_block_anchors(g, v)
            except ValueError:
                continue  # g - v not separable
            assert anchors
            row = g.adjacency_mask(v)
            for block, anchor in anchors.items():
                assert anchor in block
                assert row >> anchor & 1


def test_randomized_constructions_quick():
    rng = random.Random(20240811)
    done = {"ii": 0, "iii": 0, "iv": 0, "v": 0}
    while min(done.values()) < 200:
        n = rng.randint(4, 9)
        g = random_graph(n, rng.uniform(0.25, 0.6), rng)
        if is_separable(g):
            dec = decompose(g)
            non_cut = [v for v in range(n) if v not in dec.cut_vertices]
            if non_cut and done["ii"] < 200:
                v = rng.choice(non_cut)
                assert is_two_connected(join_to_end_blocks(g, v))
                done["ii"] += 1
            if done["iii"] < 200:
                out, _ = add_binding_vertex(g)
                assert is_two_connected(out)
                done["iii"] += 1
        elif is_two_connected(g):
            cuts = [
                (x, y)
                for x in range(n)
                for y in range(x + 1, n)
                if len(cut_components(g, x, y)) >= 2
            ]
            if cuts and done["iv"] < 200:
                x, y = rng.choice(cuts)
                comps = cut_components(g, x, y)
                chosen = [c for c in comps if rng.random() < 0.5] or [comps[0]]
                piece, _ = two_cut_piece(g, x, y, chosen)
                assert is_two_connected(piece)
                done["iv"] += 1
            if n >= 4 and done["v"] < 200:
                v = rng.randrange(n)
                b = GraphBuilder.from_graph(g)
                nbrs = list(g.neighbors(v))
                for i, a in enumerate(nbrs):
                    for bvert in nbrs[i + 1:]:
                        b.add_edge(a, bvert)
                planted = b.build()
                out, _ = remove_simplicial(planted, v)
                assert is_two_connected(out)
                done["v"] += 1
