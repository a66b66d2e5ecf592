"""Small-graph corpora: exhaustive enumeration up to isomorphism,
seeded random 2-connected samples, and the shipped graph6 data files.

Enumeration grows one vertex at a time with every possible neighborhood,
deduplicating through a refinement-based invariant plus an exact
isomorphism test.  The level counts are pinned against the published
sequence values in the tests, which certifies the enumerator.
"""

from __future__ import annotations

import random
from importlib import resources
from typing import Iterable, Iterator

from .connectivity import is_two_connected
from .graph import Graph, iter_bits
from .graph6 import parse_graph6, serialize_graph6

Rows = tuple[int, ...]

DEFAULT_SEED = 1729


def _triangle_counts(rows: Rows) -> list[int]:
    out = []
    for v in range(len(rows)):
        c = 0
        row = rows[v]
        for w in iter_bits(row):
            c += (row & rows[w]).bit_count()
        out.append(c // 2)
    return out


def _refine(rows: Rows) -> tuple[tuple[int, ...], tuple]:
    """Stable vertex coloring plus a canonical signature multiset.

    Color ids are assigned from sorted signatures, so they are invariant
    under relabeling; the signature multiset is the isomorphism invariant.
    """
    n = len(rows)
    tri = _triangle_counts(rows)
    init = [(rows[v].bit_count(), tri[v]) for v in range(n)]
    ids = {c: i for i, c in enumerate(sorted(set(init)))}
    colors = [ids[c] for c in init]
    classes = len(ids)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in iter_bits(rows[v]))))
            for v in range(n)
        ]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(ids) == classes:
            return tuple(colors), tuple(sorted(sigs))
        colors = [ids[s] for s in sigs]
        classes = len(ids)


def iso_invariant(rows: Rows) -> tuple:
    _, sigs = _refine(rows)
    return (len(rows), sigs)


def are_isomorphic(a: Rows, b: Rows) -> bool:
    """Exact isomorphism test via color-guided backtracking."""
    n = len(a)
    if len(b) != n:
        return False
    colors_a, sig_a = _refine(a)
    colors_b, sig_b = _refine(b)
    if sig_a != sig_b:
        return False
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors_b[v], []).append(v)
    # Map rare color classes first.
    order = sorted(range(n), key=lambda v: (len(by_color[colors_a[v]]), colors_a[v], v))
    mapping = [-1] * n
    mapped: list[int] = []

    def backtrack(depth: int, used: int) -> bool:
        if depth == n:
            return True
        u = order[depth]
        row_u = a[u]
        for w in by_color[colors_a[u]]:
            if used >> w & 1:
                continue
            row_w = b[w]
            ok = True
            for prev in mapped:
                if (row_u >> prev & 1) != (row_w >> mapping[prev] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = w
            mapped.append(u)
            if backtrack(depth + 1, used | (1 << w)):
                return True
            mapped.pop()
            mapping[u] = -1
        return False

    return backtrack(0, 0)


class _IsoSet:
    """Set of graphs up to isomorphism, keyed by the refinement invariant."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[Rows]] = {}
        self.items: list[Rows] = []

    def add(self, rows: Rows) -> bool:
        key = iso_invariant(rows)
        bucket = self._buckets.setdefault(key, [])
        for other in bucket:
            if are_isomorphic(rows, other):
                return False
        bucket.append(rows)
        self.items.append(rows)
        return True


def _rows_connected(rows: Rows) -> bool:
    n = len(rows)
    if n == 0:
        return True
    comp = 1
    frontier = 1
    while frontier:
        step = 0
        for v in iter_bits(frontier):
            step |= rows[v]
        frontier = step & ~comp
        comp |= frontier
    return comp == (1 << n) - 1


def _rows_two_connected(rows: Rows) -> bool:
    return is_two_connected(Graph._from_rows(rows))


def _extend(parents: list[Rows], new_filter) -> list[Rows]:
    """All graphs obtained from ``parents`` by adding one vertex, deduped.

    ``new_filter(rows)`` decides membership at the new level; cheap mask
    tests run before the tuple is materialized.
    """
    out = _IsoSet()
    for p in parents:
        np_ = len(p)
        newbit = 1 << np_
        for mask in range(1 << np_):
            child = list(p)
            for i in iter_bits(mask):
                child[i] |= newbit
            child.append(mask)
            rows = tuple(child)
            if new_filter(rows):
                out.add(rows)
    return out.items


_all_levels: dict[int, list[Rows]] = {0: [()]}
_connected_levels: dict[int, list[Rows]] = {1: [(0,)]}


def _all_rows(n: int) -> list[Rows]:
    if n not in _all_levels:
        _all_levels[n] = _extend(_all_rows(n - 1), lambda rows: True)
    return _all_levels[n]


def _connected_rows(n: int) -> list[Rows]:
    # A connected graph stays connected after deleting a non-cut vertex,
    # and one always exists, so connected parents suffice.
    if n not in _connected_levels:
        parents = _connected_rows(n - 1)
        _connected_levels[n] = _extend(
            parents, lambda rows: rows[-1] != 0
        )
    return _connected_levels[n]


def all_graphs(n: int) -> list[Graph]:
    """Every graph on n vertices, one per isomorphism class."""
    return [Graph._from_rows(r) for r in _all_rows(n)]


def connected_graphs(n: int) -> list[Graph]:
    return [Graph._from_rows(r) for r in _connected_rows(n)]


def two_connected_graphs(n: int) -> list[Graph]:
    """Every 2-connected graph on n vertices, one per isomorphism class.

    Built from connected parents on n-1 vertices (deleting any vertex of
    a 2-connected graph leaves it connected) with the 2-connectivity
    check as the level filter.
    """
    if n < 3:
        return []
    parents = _connected_rows(n - 1)

    def keep(rows: Rows) -> bool:
        mask = rows[-1]
        if mask.bit_count() < 2:
            return False
        return _rows_two_connected(rows)

    return [Graph._from_rows(r) for r in _extend(parents, keep)]


def sorted_graph6(graphs: Iterable[Graph]) -> list[str]:
    return sorted(
        (serialize_graph6(g) for g in graphs), key=lambda s: (len(s), s)
    )


# ---------------------------------------------------------------------------
# Seeded random corpora


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph._from_rows(tuple(rows))


def random_two_connected(
    n: int, p: float, rng: random.Random, max_tries: int = 200_000
) -> Graph:
    for _ in range(max_tries):
        g = random_graph(n, p, rng)
        if is_two_connected(g):
            return g
    raise RuntimeError(f"no 2-connected sample after {max_tries} tries (n={n}, p={p})")


def random_two_connected_stream(
    count: int,
    seed: int = DEFAULT_SEED,
    n_min: int = 5,
    n_max: int = 16,
    ps: tuple[float, ...] = (0.2, 0.35, 0.5),
) -> Iterator[Graph]:
    """Deterministic stream of 2-connected samples (rejection sampling)."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.choice(ps)
        yield random_two_connected(n, p, rng)


# ---------------------------------------------------------------------------
# Shipped corpus files

CORPUS_2CONN_LE8 = "two_connected_le8.g6"
CORPUS_2CONN_9 = "two_connected_9.g6"


def load_corpus(name: str) -> list[Graph]:
    """Load one of the shipped graph6 corpora by file name."""
    text = resources.files("pathlab").joinpath("data", name).read_text("ascii")
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def corpus_lines(name: str) -> list[str]:
    text = resources.files("pathlab").joinpath("data", name).read_text("ascii")
    return [line for line in text.splitlines() if line.strip()]
