"""Cut vertices, blocks, 2-connectivity, and block-level surgery.

The five construction helpers each assert their guaranteed postcondition
(the result is 2-connected); a failed assertion raises
:class:`InvariantViolation` and means a bug, not bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InvariantViolation
from .graph import Graph, GraphBuilder, induced_subgraph, iter_bits


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components as vertex sets, ordered by smallest member."""
    rows = g.rows()
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 0
        frontier = 1 << s
        while frontier:
            comp |= frontier
            step = 0
            for v in iter_bits(frontier):
                step |= rows[v]
            frontier = step & ~comp
        seen |= comp
        comps.append(frozenset(iter_bits(comp)))
    return comps


def _articulation_scan(g: Graph) -> tuple[bool, set[int]]:
    """(is connected, set of cut vertices); empty graph counts as connected."""
    n = g.n
    if n == 0:
        return True, set()
    nbrs = [list(iter_bits(row)) for row in g.rows()]
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    idx = [0] * n
    cuts: set[int] = set()
    disc[0] = low[0] = 0
    clock = 1
    stack = [0]
    root_children = 0
    while stack:
        v = stack[-1]
        if idx[v] < len(nbrs[v]):
            w = nbrs[v][idx[v]]
            idx[v] += 1
            if disc[w] == -1:
                parent[w] = v
                if v == 0:
                    root_children += 1
                disc[w] = low[w] = clock
                clock += 1
                stack.append(w)
            elif w != parent[v] and disc[w] < low[v]:
                low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                u = stack[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if u != 0 and low[v] >= disc[u]:
                    cuts.add(u)
    if root_children > 1:
        cuts.add(0)
    return clock == n, cuts


def is_two_connected(g: Graph) -> bool:
    """True iff n >= 3, connected, and no cut vertex."""
    if g.n < 3:
        return False
    connected, cuts = _articulation_scan(g)
    return connected and not cuts


def is_separable(g: Graph) -> bool:
    """True iff connected with at least one cut vertex."""
    connected, cuts = _articulation_scan(g)
    return connected and bool(cuts)


@dataclass(frozen=True)
class EndBlock:
    vertices: frozenset[int]
    cut_vertex: int
    inner: frozenset[int]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    end_blocks: tuple[EndBlock, ...]


def decompose(g: Graph) -> BlockDecomposition:
    """Blocks, cut vertices, and end-blocks of a connected graph.

    One iterative lowpoint DFS; vertices are expanded in index order so
    the result is deterministic.
    """
    n = g.n
    if n < 1:
        raise ValueError("decompose needs at least one vertex")
    comps = connected_components(g)
    if len(comps) > 1:
        a = min(comps[0])
        b = min(comps[1])
        raise ValueError(
            f"graph is disconnected: vertices {a} and {b} lie in different components"
        )
    if n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset(), ())

    nbrs = [list(iter_bits(row)) for row in g.rows()]
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    idx = [0] * n
    estack: list[tuple[int, int]] = []
    raw_blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    disc[0] = low[0] = 0
    clock = 1
    stack = [0]
    root_children = 0
    while stack:
        v = stack[-1]
        if idx[v] < len(nbrs[v]):
            w = nbrs[v][idx[v]]
            idx[v] += 1
            if disc[w] == -1:
                parent[w] = v
                if v == 0:
                    root_children += 1
                estack.append((v, w))
                disc[w] = low[w] = clock
                clock += 1
                stack.append(w)
            elif w != parent[v] and disc[w] < disc[v]:
                estack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                u = stack[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    verts = set()
                    while True:
                        e = estack.pop()
                        verts.add(e[0])
                        verts.add(e[1])
                        if e == (u, v):
                            break
                    raw_blocks.append(frozenset(verts))
                    if u != 0:
                        cuts.add(u)
    if root_children > 1:
        cuts.add(0)

    blocks = tuple(sorted(raw_blocks, key=sorted))
    end_blocks = []
    for blk in blocks:
        in_block = blk & cuts
        if len(in_block) == 1:
            c = next(iter(in_block))
            end_blocks.append(EndBlock(blk, c, blk - {c}))
    return BlockDecomposition(blocks, frozenset(cuts), tuple(end_blocks))


def _default_picks(end_blocks: Iterable[EndBlock]) -> dict[frozenset[int], int]:
    return {eb.vertices: min(eb.inner) for eb in end_blocks}


def end_block_anchors(g: Graph, v: int) -> dict[frozenset[int], int]:
    """For each end-block of ``g - v``, an inner vertex adjacent to ``v``.

    Requires ``g`` 2-connected with ``g - v`` separable; such an anchor
    always exists, so a missing one raises :class:`InvariantViolation`.
    """
    if not is_two_connected(g):
        raise ValueError("graph must be 2-connected")
    sub, mapping = induced_subgraph(g, set(range(g.n)) - {v})
    dec = decompose(sub)
    if not dec.end_blocks:
        raise ValueError(f"removing vertex {v} leaves a non-separable graph")
    row = g.adjacency_mask(v)
    anchors: dict[frozenset[int], int] = {}
    for eb in dec.end_blocks:
        block_old = frozenset(mapping[i] for i in eb.vertices)
        anchor = None
        for i in sorted(eb.inner):
            if row >> mapping[i] & 1:
                anchor = mapping[i]
                break
        if anchor is None:
            raise InvariantViolation(
                f"end-block {sorted(block_old)} has no inner vertex adjacent to {v}"
            )
        anchors[block_old] = anchor
    return anchors


def join_to_end_blocks(
    g: Graph,
    v: int,
    picks: Mapping[frozenset[int], int] | None = None,
) -> Graph:
    """Join ``v`` to one inner vertex of every end-block not containing it.

    ``g`` must be separable and ``v`` must not be a cut vertex; the result
    is 2-connected.  With ``picks=None`` the smallest inner vertex of each
    end-block is used.
    """
    dec = decompose(g)
    if not dec.cut_vertices:
        raise ValueError("graph is not separable")
    if v in dec.cut_vertices:
        raise ValueError(f"vertex {v} is a cut vertex")
    targets = [eb for eb in dec.end_blocks if v not in eb.vertices]
    if picks is None:
        picks = _default_picks(targets)
    builder = GraphBuilder.from_graph(g)
    for eb in targets:
        if eb.vertices not in picks:
            raise ValueError(f"no pick for end-block {sorted(eb.vertices)}")
        pick = picks[eb.vertices]
        if pick not in eb.inner:
            raise ValueError(
                f"pick {pick} is not an inner vertex of end-block {sorted(eb.vertices)}"
            )
        builder.add_edge(v, pick)
    out = builder.build()
    if not is_two_connected(out):
        raise InvariantViolation("join_to_end_blocks result is not 2-connected")
    return out


def add_binding_vertex(
    g: Graph,
    picks: Mapping[frozenset[int], int] | None = None,
) -> tuple[Graph, int]:
    """Add a new vertex joined to one inner vertex of every end-block.

    ``g`` must be separable; returns the 2-connected result and the new
    vertex's index (always ``g.n``).
    """
    dec = decompose(g)
    if not dec.cut_vertices:
        raise ValueError("graph is not separable")
    if picks is None:
        picks = _default_picks(dec.end_blocks)
    builder = GraphBuilder.from_graph(g)
    v = builder.add_vertex()
    for eb in dec.end_blocks:
        if eb.vertices not in picks:
            raise ValueError(f"no pick for end-block {sorted(eb.vertices)}")
        pick = picks[eb.vertices]
        if pick not in eb.inner:
            raise ValueError(
                f"pick {pick} is not an inner vertex of end-block {sorted(eb.vertices)}"
            )
        builder.add_edge(v, pick)
    out = builder.build()
    if not is_two_connected(out):
        raise InvariantViolation("add_binding_vertex result is not 2-connected")
    return out, v


def cut_components(g: Graph, x: int, y: int) -> list[frozenset[int]]:
    """Components of ``g - {x, y}``, ordered by smallest member."""
    if x == y:
        raise ValueError("x and y must differ")
    sub, mapping = induced_subgraph(g, set(range(g.n)) - {x, y})
    return [
        frozenset(mapping[i] for i in comp) for comp in connected_components(sub)
    ]


def two_cut_piece(
    g: Graph,
    x: int,
    y: int,
    components: Iterable[frozenset[int]],
) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on chosen components of ``g - {x,y}`` plus x, y.

    The edge xy is added when absent.  ``g`` must be 2-connected and
    ``{x, y}`` an actual cut; the re-indexed result is 2-connected.
    Returns (graph, mapping) where new index i is old vertex mapping[i].
    """
    if not is_two_connected(g):
        raise ValueError("graph must be 2-connected")
    actual = cut_components(g, x, y)
    if len(actual) < 2:
        raise ValueError(f"{{{x},{y}}} is not a cut")
    chosen = [frozenset(c) for c in components]
    if not chosen:
        raise ValueError("at least one component must be selected")
    actual_set = set(actual)
    for c in chosen:
        if c not in actual_set:
            raise ValueError(f"{sorted(c)} is not a component of the cut")
    keep: set[int] = {x, y}
    for c in chosen:
        keep |= c
    sub, mapping = induced_subgraph(g, keep)
    nx = mapping.index(x)
    ny = mapping.index(y)
    if not sub.has_edge(nx, ny):
        sub = GraphBuilder.from_graph(sub).add_edge(nx, ny).build()
    if not is_two_connected(sub):
        raise InvariantViolation("two_cut_piece result is not 2-connected")
    return sub, mapping


def remove_simplicial(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    """Delete a vertex whose neighborhood is a clique.

    ``g`` must be 2-connected with at least 4 vertices; the re-indexed
    result is 2-connected.  Returns (graph, mapping).
    """
    if not is_two_connected(g):
        raise ValueError("graph must be 2-connected")
    if g.n - 1 < 3:
        raise ValueError("result would have fewer than 3 vertices")
    nbrs = list(g.neighbors(v))
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if not g.has_edge(a, b):
                raise ValueError(
                    f"neighborhood of {v} is not a clique: {a} and {b} are not adjacent"
                )
    sub, mapping = induced_subgraph(g, set(range(g.n)) - {v})
    if not is_two_connected(sub):
        raise InvariantViolation("remove_simplicial result is not 2-connected")
    return sub, mapping
