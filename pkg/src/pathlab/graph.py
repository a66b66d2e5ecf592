"""Simple undirected graphs on dense vertex indices 0..n-1.

Adjacency is stored as one int bitmask per vertex, which keeps the
exact solvers and the enumeration pipeline fast.  Graphs are immutable
after construction; use :class:`GraphBuilder` to assemble or edit one.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator

from .errors import CapacityError

_HARD_CAP = 128
_max_vertices = 64


def max_vertices() -> int:
    """Current vertex capacity (default 64)."""
    return _max_vertices


def set_max_vertices(limit: int) -> None:
    """Raise or lower the vertex capacity; hard cap is 128."""
    global _max_vertices
    if not 1 <= limit <= _HARD_CAP:
        raise ValueError(f"capacity must be in [1, {_HARD_CAP}], got {limit}")
    _max_vertices = limit


def _check_capacity(n: int) -> None:
    if n > _max_vertices:
        raise CapacityError(f"{n} vertices exceeds capacity {_max_vertices}")
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph: symmetric, irreflexive adjacency."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        _check_capacity(n)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def _from_rows(cls, rows: tuple[int, ...]) -> "Graph":
        # Trusted fast path: rows must already be symmetric and irreflexive.
        g = object.__new__(cls)
        g.n = len(rows)
        g._adj = rows
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        _check_capacity(n)
        full = (1 << n) - 1
        return cls._from_rows(tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        edges = [(i, (i + 1) % n) for i in range(n)]
        return cls(n, edges)

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def rows(self) -> tuple[int, ...]:
        return self._adj

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self._adj[u] >> (u + 1)
            for d in iter_bits(row):
                yield (u, u + 1 + d)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class GraphBuilder:
    """Mutable assembler for :class:`Graph` values."""

    def __init__(self, n: int = 0):
        _check_capacity(n)
        self._adj: list[int] = [0] * n

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphBuilder":
        b = cls(0)
        b._adj = list(g.rows())
        return b

    @property
    def n(self) -> int:
        return len(self._adj)

    def add_vertex(self) -> int:
        _check_capacity(len(self._adj) + 1)
        self._adj.append(0)
        return len(self._adj) - 1

    def add_edge(self, u: int, v: int) -> "GraphBuilder":
        n = len(self._adj)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        self._adj[u] |= 1 << v
        self._adj[v] |= 1 << u
        return self

    def remove_edge(self, u: int, v: int) -> "GraphBuilder":
        self._adj[u] &= ~(1 << v)
        self._adj[v] &= ~(1 << u)
        return self

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def build(self) -> Graph:
        return Graph._from_rows(tuple(self._adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, densely re-indexed.

    Returns the new graph and the mapping: new index ``i`` corresponds to
    old vertex ``mapping[i]`` (ascending).
    """
    keep = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in iter_bits(g.adjacency_mask(v)):
            if w in pos:
                row |= 1 << pos[w]
        rows.append(row)
    return Graph._from_rows(tuple(rows)), tuple(keep)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted up by ``g1.n``."""
    n = g1.n + g2.n
    _check_capacity(n)
    rows = list(g1.rows()) + [row << g1.n for row in g2.rows()]
    return Graph._from_rows(tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n = g1.n + g2.n
    _check_capacity(n)
    left_mask = (1 << g1.n) - 1
    right_mask = ((1 << n) - 1) ^ left_mask
    rows = [row | right_mask for row in g1.rows()]
    rows += [(row << g1.n) | left_mask for row in g2.rows()]
    return Graph._from_rows(tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._from_rows(
        tuple((full ^ row ^ (1 << v)) for v, row in enumerate(g.rows()))
    )


def count_high_degree(g: Graph, k: int, exclude: Iterable[int] = ()) -> int:
    """Number of vertices outside ``exclude`` with degree at least ``k``."""
    skip = 0
    for v in exclude:
        if not 0 <= v < g.n:
            raise ValueError(f"excluded vertex {v} out of range")
        skip |= 1 << v
    return sum(
        1 for v in range(g.n) if not (skip >> v & 1) and g.degree(v) >= k
    )


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Non-increasing degree sequence."""
    return tuple(sorted((row.bit_count() for row in g.rows()), reverse=True))


class SequenceOrder(enum.Enum):
    LARGER = "larger"
    SMALLER = "smaller"
    EQUAL = "equal"
    INCOMPARABLE_LENGTHS = "incomparable-lengths"


def tau_compare(a: tuple[int, ...], b: tuple[int, ...]) -> SequenceOrder:
    """Lexicographic comparison of equal-length non-increasing sequences.

    The first index where the sequences differ decides; sequences of
    different lengths are not comparable.
    """
    if len(a) != len(b):
        return SequenceOrder.INCOMPARABLE_LENGTHS
    for x, y in zip(a, b):
        if x > y:
            return SequenceOrder.LARGER
        if x < y:
            return SequenceOrder.SMALLER
    return SequenceOrder.EQUAL
