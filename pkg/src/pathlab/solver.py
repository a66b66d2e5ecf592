"""Exact longest-(x,y)-path, longest-path, and circumference engines.

Two engines share the work:

* a dynamic program over vertex subsets (state: subset covered, current
  endpoint), used whenever ``n <= SUBSET_DP_LIMIT``;
* a depth-first branch-and-bound with reachability and block-chain
  pruning, used as the decision-form fast path and beyond the DP limit.

All searches expand neighbors in ascending index order, so lengths and
witnesses are deterministic; maximum-length witnesses are the
lexicographically smallest vertex sequences among the maxima.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits

SUBSET_DP_LIMIT = 20
_DECISION_BUDGET = 50_000


@dataclass(frozen=True)
class Path:
    """Simple path as a vertex sequence; length counts edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if not vs:
            raise ValueError("a path has at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in path {vs}")
        for v in vs:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"consecutive vertices {a},{b} are not adjacent")


@dataclass(frozen=True)
class Cycle:
    """Simple cycle as a cyclic vertex sequence; length counts vertices."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if len(vs) < 3:
            raise ValueError("a cycle has at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        for v in vs:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not g.has_edge(a, b):
                raise ValueError(f"cyclically consecutive {a},{b} are not adjacent")


def _reach_mask(rows: tuple[int, ...], start: int, region: int) -> int:
    """Vertices reachable from ``start`` inside ``region`` (which holds start)."""
    comp = 1 << start
    frontier = comp
    while frontier:
        step = 0
        for v in iter_bits(frontier):
            step |= rows[v]
        frontier = step & region & ~comp
        comp |= frontier
    return comp


def _chain_mask(rows: tuple[int, ...], src: int, dst: int, region: int) -> int:
    """Union of blocks on the block-tree chain from src to dst within region.

    Every src-dst path through ``region`` stays inside the returned mask,
    so it is a sound pruning region.  Small local lowpoint DFS.
    """
    verts = list(iter_bits(region))
    pos = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    sub = [rows[v] for v in verts]
    nbrs = [[pos[w] for w in iter_bits(row & region)] for row in sub]
    s = pos[src]
    t = pos[dst]
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    idx = [0] * n
    estack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    disc[s] = low[s] = 0
    clock = 1
    stack = [s]
    while stack:
        v = stack[-1]
        if idx[v] < len(nbrs[v]):
            w = nbrs[v][idx[v]]
            idx[v] += 1
            if disc[w] == -1:
                parent[w] = v
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
                    verts_blk = set()
                    while True:
                        e = estack.pop()
                        verts_blk.add(e[0])
                        verts_blk.add(e[1])
                        if e == (u, v):
                            break
                    blocks.append(frozenset(verts_blk))
    if disc[t] == -1:
        return 0
    # Walk the block-cut tree from t's side back toward s via parents:
    # collect blocks met along t -> s using the DFS tree ancestry.
    chain = 0
    cur = t
    on_path = set()
    while cur != -1:
        on_path.add(cur)
        cur = parent[cur]
    # Blocks on the chain are those containing two consecutive tree-path
    # vertices, plus any block containing both a chain cut vertex pair.
    path_vertices = []
    cur = t
    while cur != -1:
        path_vertices.append(cur)
        cur = parent[cur]
    path_edges = set(zip(path_vertices[1:], path_vertices))
    for blk in blocks:
        if any((a in blk and b in blk) for a, b in path_edges):
            for v in blk:
                chain |= 1 << verts[v]
    chain |= (1 << src) | (1 << dst)
    return chain


def _decide_to_set(
    rows: tuple[int, ...],
    start: int,
    targets: int,
    k: int,
    allowed: int,
    budget: int | None = None,
):
    """Search for a simple path from ``start`` within ``allowed`` that has
    at least ``k`` edges and ends at a vertex of ``targets``.

    Returns (True, vertex list), (False, None) when exhaustively refuted,
    or (None, None) when the node budget ran out.
    """
    if k <= 0 and targets >> start & 1:
        return True, [start]
    singleton = targets.bit_count() == 1
    target_vertex = targets.bit_length() - 1 if singleton else -1
    path = [start]
    used = 1 << start
    pending = [rows[start] & allowed & ~used]
    nodes = 0
    while path:
        pend = pending[-1]
        if not pend:
            w = path.pop()
            pending.pop()
            used ^= 1 << w
            continue
        b = pend & -pend
        pending[-1] = pend ^ b
        w = b.bit_length() - 1
        nodes += 1
        if budget is not None and nodes > budget:
            return None, None
        edges = len(path)
        if targets >> w & 1:
            if edges >= k:
                return True, path + [w]
            if singleton:
                continue
        used_w = used | b
        region = (allowed & ~used_w) | b
        reach = _reach_mask(rows, w, region)
        if not reach & targets:
            continue
        bound = edges + (reach & ~b).bit_count()
        if bound < k:
            continue
        if singleton and bound - k <= 2:
            chain = _chain_mask(rows, w, target_vertex, reach)
            if edges + (chain & ~b).bit_count() < k:
                continue
        path.append(w)
        used = used_w
        pending.append(rows[w] & allowed & ~used)
    return False, None


def _bnb_max_path(
    rows: tuple[int, ...],
    start: int,
    targets: int,
    allowed: int,
):
    """Exact maximum number of edges over simple paths from ``start``
    ending in ``targets``; first (lex-least) witness at the maximum.
    """
    best = -1
    best_path: list[int] | None = None
    if targets >> start & 1:
        best = 0
        best_path = [start]
    singleton = targets.bit_count() == 1
    path = [start]
    used = 1 << start
    pending = [rows[start] & allowed & ~used]
    while path:
        pend = pending[-1]
        if not pend:
            w = path.pop()
            pending.pop()
            used ^= 1 << w
            continue
        b = pend & -pend
        pending[-1] = pend ^ b
        w = b.bit_length() - 1
        edges = len(path)
        hit = targets >> w & 1
        if hit and edges > best:
            best = edges
            best_path = path + [w]
        if hit and singleton:
            continue
        used_w = used | b
        region = (allowed & ~used_w) | b
        reach = _reach_mask(rows, w, region)
        if not reach & targets:
            continue
        if edges + (reach & ~b).bit_count() <= best:
            continue
        path.append(w)
        used = used_w
        pending.append(rows[w] & allowed & ~used)
    return best, best_path


def _reach_table(rows: tuple[int, ...], n: int, source: int, allowed: int):
    """Subset DP from ``source``.

    Returns (table, best) where table[S] is the bitmask of endpoints v
    admitting a source-v path covering exactly subset S, and best[v] is
    the maximum path length from source to v (-1 if unreachable).
    """
    size = 1 << n
    table = [0] * size
    s0 = 1 << source
    table[s0] = s0
    best = [-1] * n
    best[source] = 0
    for subset in range(s0, size):
        endpoints = table[subset]
        if not endpoints:
            continue
        length = subset.bit_count() - 1
        inv = ~subset
        for v in iter_bits(endpoints):
            if length > best[v]:
                best[v] = length
            ext = rows[v] & allowed & inv
            while ext:
                low = ext & -ext
                table[subset | low] |= low
                ext ^= low
    return table, best


def _same_component(rows, x: int, y: int, n: int) -> bool:
    full = (1 << n) - 1
    return bool(_reach_mask(rows, x, full) >> y & 1)


def _check_pair(g: Graph, x: int, y: int) -> None:
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError(f"x={x}, y={y} out of range for n={g.n}")
    if x == y:
        raise ValueError("x and y must be distinct")
    if not _same_component(g.rows(), x, y, g.n):
        raise ValueError(f"no ({x},{y})-path: x and y lie in different components")


def xy_length_row(g: Graph, x: int) -> list[int]:
    """Maximum (x,v)-path length for every v; -1 where unreachable.

    Exact; requires n within the subset-DP limit.
    """
    if g.n > SUBSET_DP_LIMIT:
        raise ValueError(f"n={g.n} exceeds subset DP limit {SUBSET_DP_LIMIT}")
    _, best = _reach_table(g.rows(), g.n, x, (1 << g.n) - 1)
    return best


def _reconstruct_from_table(g, x, y, length, table):
    """Lexicographically smallest maximum (x,y)-path from the y-rooted table."""
    n = g.n
    rows = g.rows()
    buckets: dict[int, list[tuple[int, int]]] = {}
    for subset, endpoints in enumerate(table):
        if endpoints:
            buckets.setdefault(subset.bit_count(), []).append((subset, endpoints))
    path = [x]
    used = 1 << x
    cur = x
    for remaining in range(length, 0, -1):
        viable = 0
        for subset, endpoints in buckets.get(remaining, ()):
            if not subset & used:
                viable |= endpoints
        step = rows[cur] & viable & ~used
        if not step:
            raise AssertionError("witness reconstruction dead end")
        w = (step & -step).bit_length() - 1
        path.append(w)
        used |= 1 << w
        cur = w
    assert cur == y
    return Path(tuple(path))


def longest_xy_path(g: Graph, x: int, y: int) -> Path:
    """Longest (x,y)-path; deterministic lex-smallest maximum witness."""
    _check_pair(g, x, y)
    rows = g.rows()
    n = g.n
    full = (1 << n) - 1
    if n <= SUBSET_DP_LIMIT:
        table, best = _reach_table(rows, n, y, full)
        length = best[x]
        return _reconstruct_from_table(g, x, y, length, table)
    length, _ = _bnb_max_path(rows, x, 1 << y, full)
    # Greedy lex-min reconstruction with exact completion decisions.
    path = [x]
    used = 1 << x
    cur = x
    for remaining in range(length, 0, -1):
        for w in iter_bits(rows[cur] & ~used):
            ok, _ = _decide_to_set(rows, w, 1 << y, remaining - 1, full & ~used)
            if ok:
                path.append(w)
                used |= 1 << w
                cur = w
                break
        else:
            raise AssertionError("witness reconstruction dead end")
    return Path(tuple(path))


def has_xy_path_at_least(g: Graph, x: int, y: int, k: int):
    """Decision form: is there an (x,y)-path with at least ``k`` edges?

    Returns (True, witness Path) or (False, None); the witness is not
    necessarily maximum.  Agrees with :func:`longest_xy_path`.
    """
    _check_pair(g, x, y)
    rows = g.rows()
    full = (1 << g.n) - 1
    status, wit = _decide_to_set(rows, x, 1 << y, k, full, budget=_DECISION_BUDGET)
    if status is True:
        return True, Path(tuple(wit))
    if status is False:
        return False, None
    if g.n <= SUBSET_DP_LIMIT:
        path = longest_xy_path(g, x, y)
        if path.length >= k:
            return True, path
        return False, None
    status, wit = _decide_to_set(rows, x, 1 << y, k, full)
    if status:
        return True, Path(tuple(wit))
    return False, None


def longest_path_length(g: Graph) -> int:
    """Length of a longest path (0 for an edgeless graph)."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    rows = g.rows()
    n = g.n
    full = (1 << n) - 1
    best = 0
    if n <= SUBSET_DP_LIMIT:
        for x in range(n):
            _, row = _reach_table(rows, n, x, full)
            m = max(row)
            if m > best:
                best = m
            if best == n - 1:
                break
    else:
        for x in range(n):
            length, _ = _bnb_max_path(rows, x, full, full)
            if length > best:
                best = length
            if best == n - 1:
                break
    return best


def longest_path(g: Graph) -> Path:
    """Longest path with deterministic lex-smallest maximum witness."""
    length = longest_path_length(g)
    rows = g.rows()
    full = (1 << g.n) - 1
    starts = []
    if g.n <= SUBSET_DP_LIMIT:
        for x in range(g.n):
            _, row = _reach_table(rows, g.n, x, full)
            if max(row) == length:
                starts.append(x)
                break
    else:
        for x in range(g.n):
            m, _ = _bnb_max_path(rows, x, full, full)
            if m == length:
                starts.append(x)
                break
    x = starts[0]
    path = [x]
    used = 1 << x
    cur = x
    for remaining in range(length, 0, -1):
        for w in iter_bits(rows[cur] & ~used):
            avail = full & ~used
            ok, _ = _decide_to_set(rows, w, avail, remaining - 1, avail)
            if ok:
                path.append(w)
                used |= 1 << w
                cur = w
                break
        else:
            raise AssertionError("witness reconstruction dead end")
    return Path(tuple(path))


def circumference(g: Graph) -> int:
    """Exact circumference; 0 when the graph is acyclic."""
    rows = g.rows()
    n = g.n
    best = 0
    if n <= SUBSET_DP_LIMIT:
        size = 1 << n
        for root in range(n - 2):
            if n - root <= best:
                break
            allowed = (size - 1) & ~((1 << root) - 1)
            radj = rows[root]
            table = [0] * size
            s0 = 1 << root
            table[s0] = s0
            for subset in range(s0, size):
                endpoints = table[subset]
                if not endpoints:
                    continue
                count = subset.bit_count()
                if count >= 3 and count > best and endpoints & radj:
                    best = count
                inv = ~subset
                for v in iter_bits(endpoints):
                    ext = rows[v] & allowed & inv
                    while ext:
                        low = ext & -ext
                        table[subset | low] |= low
                        ext ^= low
            if best == n:
                break
    else:
        for root in range(n - 2):
            if n - root <= best:
                break
            allowed = ((1 << n) - 1) & ~((1 << root) - 1)
            targets = rows[root] & allowed
            if targets.bit_count() < 2:
                continue
            length, _ = _bnb_max_path(rows, root, targets, allowed)
            if length >= 2 and length + 1 > best:
                best = length + 1
    return best


def longest_cycle(g: Graph) -> Cycle | None:
    """Deterministic maximum-length cycle witness; None when acyclic."""
    total = circumference(g)
    if total == 0:
        return None
    rows = g.rows()
    n = g.n
    for root in range(n):
        allowed = ((1 << n) - 1) & ~((1 << root) - 1)
        targets = rows[root] & allowed
        if targets.bit_count() < 2:
            continue
        length, _ = _bnb_max_path(rows, root, targets, allowed)
        if length + 1 == total:
            path = [root]
            used = 1 << root
            cur = root
            for remaining in range(total - 1, 0, -1):
                for w in iter_bits(rows[cur] & allowed & ~used):
                    avail = (allowed & ~used & ~(1 << w)) | (1 << w)
                    ok, _ = _decide_to_set(
                        rows, w, rows[root] & avail, remaining - 1, avail
                    )
                    if ok:
                        path.append(w)
                        used |= 1 << w
                        cur = w
                        break
                else:
                    raise AssertionError("cycle reconstruction dead end")
            cyc = Cycle(tuple(path))
            cyc.validate(g)
            return cyc
    raise AssertionError("no root reproduces the circumference")


def has_cycle_at_least(g: Graph, k: int):
    """Decision form: is there a cycle of length at least ``k``?

    Returns (True, witness Cycle) or (False, None).  Cycles have length
    at least 3, so any k <= 3 asks for an arbitrary cycle.
    """
    rows = g.rows()
    n = g.n
    need = max(k, 3)
    if n < need:
        return False, None
    blown = False
    for root in range(n - 2):
        allowed = ((1 << n) - 1) & ~((1 << root) - 1)
        if (allowed.bit_count()) < need:
            break
        targets = rows[root] & allowed
        if targets.bit_count() < 2:
            continue
        status, wit = _decide_to_set(
            rows, root, targets, need - 1, allowed, budget=_DECISION_BUDGET
        )
        if status is True:
            cyc = Cycle(tuple(wit))
            cyc.validate(g)
            return True, cyc
        if status is None:
            blown = True
    if not blown:
        return False, None
    if circumference(g) >= need:
        return True, longest_cycle(g)
    return False, None


def brute_oracle_xy(g: Graph, x: int, y: int) -> int:
    """Longest (x,y)-path length by plain enumeration of simple paths.

    Exists solely to cross-check the main solver; refuses n > 10.
    """
    if g.n > 10:
        raise ValueError(f"oracle refuses n={g.n} > 10")
    _check_pair(g, x, y)
    rows = g.rows()
    best = -1
    stack = [(x, 1 << x, 0)]
    while stack:
        v, used, length = stack.pop()
        if v == y:
            if length > best:
                best = length
            continue
        for w in iter_bits(rows[v] & ~used):
            stack.append((w, used | (1 << w), length + 1))
    return best


def brute_oracle_row(g: Graph, x: int) -> list[int]:
    """Longest simple-path length from ``x`` to every vertex, by enumeration."""
    if g.n > 10:
        raise ValueError(f"oracle refuses n={g.n} > 10")
    rows = g.rows()
    best = [-1] * g.n
    best[x] = 0
    stack = [(x, 1 << x, 0)]
    while stack:
        v, used, length = stack.pop()
        if length > best[v]:
            best[v] = length
        for w in iter_bits(rows[v] & ~used):
            stack.append((w, used | (1 << w), length + 1))
    return best
