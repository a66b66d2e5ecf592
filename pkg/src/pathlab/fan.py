"""Fans from a cycle-complement component into the cycle.

A fan is a system of two or more internally disjoint paths with a common
origin inside one component H of G - C, pairwise distinct termini on C,
and all internal vertices in H.  ``extract_fan`` builds one with many
edges constructively; ``max_fan_edges`` finds the exact optimum by
exhaustive search (small components only) and backs the long-cycle
implication check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import connected_components, is_two_connected
from .errors import InvariantViolation
from .graph import Graph, GraphBuilder, induced_subgraph, iter_bits
from .solver import Cycle, Path, has_xy_path_at_least, longest_cycle


@dataclass(frozen=True)
class Fan:
    origin: int
    paths: tuple[Path, ...]

    @property
    def termini(self) -> tuple[int, ...]:
        return tuple(p.vertices[-1] for p in self.paths)

    @property
    def edge_count(self) -> int:
        return sum(p.length for p in self.paths)


def cycle_components(g: Graph, cyc: Cycle) -> list[frozenset[int]]:
    """Components of g minus the cycle's vertices, ordered by smallest member."""
    cyc.validate(g)
    rest = set(range(g.n)) - set(cyc.vertices)
    sub, mapping = induced_subgraph(g, rest)
    return [frozenset(mapping[i] for i in c) for c in connected_components(sub)]


def _check_component(g: Graph, cyc: Cycle, h: frozenset[int]) -> None:
    comps = cycle_components(g, cyc)
    if frozenset(h) not in comps:
        raise ValueError("h is not a component of the graph minus the cycle")


def validate_fan(
    g: Graph, cyc: Cycle, h: frozenset[int], fan: Fan
) -> tuple[bool, str | None]:
    """Check every fan clause; returns (ok, first violated clause)."""
    if len(fan.paths) < 2:
        return False, "t>=2"
    if fan.origin not in h:
        return False, "origin-in-component"
    cyc_set = set(cyc.vertices)
    for p in fan.paths:
        if p.vertices[0] != fan.origin:
            return False, "common-origin"
        try:
            p.validate(g)
        except ValueError:
            return False, "path-valid"
    termini = fan.termini
    if len(set(termini)) != len(termini):
        return False, "termini-distinct"
    if not set(termini) <= cyc_set:
        return False, "terminus-on-cycle"
    for p in fan.paths:
        if not set(p.vertices[1:-1]) <= h:
            return False, "internal-in-component"
    seen: set[int] = set()
    for p in fan.paths:
        rest = set(p.vertices) - {fan.origin}
        if rest & seen:
            return False, "internally-disjoint"
        seen |= rest
    return True, None


@dataclass(frozen=True)
class AttachmentGraph:
    """Auxiliary two-terminal graph over a component's vertices.

    The terminals x and y stand for the cycle attachments; index i of the
    inner part corresponds to original vertex ``h_vertices[i]``.
    """

    graph: Graph
    x: int
    y: int
    h_vertices: tuple[int, ...]
    t: int
    anchor: int | None
    u1: frozenset[int] | None
    u2: frozenset[int] | None


def attachment_graph(g: Graph, cyc: Cycle, h: frozenset[int]) -> AttachmentGraph:
    """Build the two-terminal auxiliary graph used by ``extract_fan``.

    With t = max cycle-degree over the component: for t = 1 the x side is
    the neighborhood of the least attachment vertex and the y side the
    remaining attached vertices (degrees inside match degrees in g); for
    t >= 2 the x side is the set attaining t and the y side every
    attached vertex.  The result is asserted 2-connected.
    """
    if not is_two_connected(g):
        raise ValueError("graph must be 2-connected")
    _check_component(g, cyc, h)
    cyc_mask = 0
    for c in cyc.vertices:
        cyc_mask |= 1 << c
    h_sorted = sorted(h)
    pos = {v: i for i, v in enumerate(h_sorted)}
    d_c = {v: (g.adjacency_mask(v) & cyc_mask).bit_count() for v in h_sorted}
    t = max(d_c.values())

    sub, _ = induced_subgraph(g, h_sorted)
    builder = GraphBuilder.from_graph(sub)
    x = builder.add_vertex()
    y = builder.add_vertex()
    builder.add_edge(x, y)

    anchor = None
    u1 = None
    u2 = None
    if t == 1:
        attach = [c for c in sorted(iter_bits(cyc_mask)) if any(
            g.has_edge(c, v) for v in h_sorted
        )]
        anchor = attach[0]
        x_side = {v for v in h_sorted if g.has_edge(anchor, v)}
        attached = {v for v in h_sorted if d_c[v] >= 1}
        y_side = attached - x_side
        if not y_side:
            raise InvariantViolation(
                "every attached vertex touches the single anchor; t should be >= 2"
            )
        for v in x_side:
            builder.add_edge(x, pos[v])
        for v in y_side:
            builder.add_edge(y, pos[v])
    else:
        u1 = frozenset(v for v in h_sorted if d_c[v] == t)
        u2 = frozenset(v for v in h_sorted if d_c[v] >= 1)
        for v in u1:
            builder.add_edge(x, pos[v])
        for v in u2:
            builder.add_edge(y, pos[v])

    out = builder.build()
    if not is_two_connected(out):
        raise InvariantViolation("attachment graph is not 2-connected")
    if t == 1:
        for v in h_sorted:
            if out.degree(pos[v]) != g.degree(v):
                raise InvariantViolation(
                    f"degree of {v} changed in the attachment graph"
                )
    return AttachmentGraph(
        graph=out,
        x=x,
        y=y,
        h_vertices=tuple(h_sorted),
        t=t,
        anchor=anchor,
        u1=u1,
        u2=u2,
    )


def extract_fan(
    g: Graph,
    cyc: Cycle,
    h: frozenset[int],
    k: int,
    require_hypothesis: bool = True,
) -> Fan:
    """Construct a fan with at least ``k`` edges.

    The degree hypothesis (at least half of the component, rounded up,
    has degree >= k in g) guarantees success; pass
    ``require_hypothesis=False`` to attempt the construction anyway.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not is_two_connected(g):
        raise ValueError("graph must be 2-connected")
    _check_component(g, cyc, h)
    count = sum(1 for v in h if g.degree(v) >= k)
    hypothesis = 2 * count >= len(h) + 1
    if require_hypothesis and not hypothesis:
        raise ValueError(
            f"hypothesis fails: {count} vertices of degree >= {k}, "
            f"need at least {(len(h) + 1 + 1) // 2}"
        )

    cyc_mask = 0
    for c in cyc.vertices:
        cyc_mask |= 1 << c
    d_c = {v: (g.adjacency_mask(v) & cyc_mask).bit_count() for v in sorted(h)}
    t = max(d_c.values())

    def fail(msg: str):
        if hypothesis:
            raise InvariantViolation(msg)
        raise ValueError(msg)

    if t >= 2 and t >= k:
        origin = min(v for v in d_c if d_c[v] == t)
        spokes = sorted(iter_bits(g.adjacency_mask(origin) & cyc_mask))
        fan = Fan(origin, tuple(Path((origin, z)) for z in spokes))
    elif t == 1:
        ag = attachment_graph(g, cyc, h)
        ok, wit = has_xy_path_at_least(ag.graph, ag.x, ag.y, max(k, 2))
        if not ok:
            fail(f"no terminal path of length >= {max(k, 2)} in the attachment graph")
        inner = [ag.h_vertices[i] for i in wit.vertices[1:-1]]
        v1, vp = inner[0], inner[-1]
        x1 = ag.anchor
        y1 = min(iter_bits(g.adjacency_mask(vp) & cyc_mask))
        fan = Fan(v1, (Path((v1, x1)), Path(tuple(inner) + (y1,))))
    else:
        ag = attachment_graph(g, cyc, h)
        target = k - t + 2
        ok, wit = has_xy_path_at_least(ag.graph, ag.x, ag.y, target)
        if not ok:
            fail(f"no terminal path of length >= {target} in the attachment graph")
        inner = [ag.h_vertices[i] for i in wit.vertices[1:-1]]
        v1, vp = inner[0], inner[-1]
        y1 = min(iter_bits(g.adjacency_mask(vp) & cyc_mask))
        x1_opts = g.adjacency_mask(v1) & cyc_mask & ~(1 << y1)
        x1 = min(iter_bits(x1_opts))
        extras = sorted(
            iter_bits(g.adjacency_mask(v1) & cyc_mask & ~(1 << x1) & ~(1 << y1))
        )
        paths = [Path((v1, x1)), Path(tuple(inner) + (y1,))]
        paths.extend(Path((v1, z)) for z in extras)
        fan = Fan(v1, tuple(paths))

    ok, clause = validate_fan(g, cyc, h, fan)
    if not ok:
        raise InvariantViolation(f"constructed fan violates clause {clause}")
    if fan.edge_count < k:
        fail(f"constructed fan has {fan.edge_count} edges, needed {k}")
    return fan


def max_fan_edges(g: Graph, cyc: Cycle, h: frozenset[int]) -> int:
    """Exact maximum edge count over all fans from component ``h``.

    0 when no fan (two internally disjoint paths) exists.  Exhaustive
    search, intended for small components.
    """
    _check_component(g, cyc, h)
    rows = g.rows()
    cyc_mask = 0
    for c in cyc.vertices:
        cyc_mask |= 1 << c
    h_mask = 0
    for v in h:
        h_mask |= 1 << v
    best = 0

    def paths_from(origin: int, avail: int):
        """All (terminus, internal mask, length) for origin->cycle paths."""
        out = []
        stack = [(origin, 0)]
        while stack:
            last, internals = stack.pop()
            for c in iter_bits(rows[last] & cyc_mask):
                out.append((c, internals, internals.bit_count() + 1))
            for w in iter_bits(rows[last] & avail & ~internals):
                stack.append((w, internals | (1 << w)))
        return out

    def _ordered(used: int, c: int) -> bool:
        # Termini added in increasing order to avoid permuted duplicates.
        return used.bit_length() - 1 < c

    def grow(origin: int, avail: int, used_termini: int, count: int, edges: int):
        nonlocal best
        if count >= 2 and edges > best:
            best = edges
        for c, internals, length in paths_from(origin, avail):
            if not _ordered(used_termini, c):
                continue
            grow(origin, avail & ~internals, used_termini | (1 << c), count + 1, edges + length)

    for origin in sorted(h):
        grow(origin, h_mask & ~(1 << origin), 0, 0, 0)
    return best


def fan_implies_long_cycle(g: Graph, k: int) -> bool:
    """Check one instance of the fan-to-long-cycle implication.

    With C a longest cycle: if some component of g - C admits a fan with
    at least ``k`` edges, the circumference must reach 2k.  Requires g
    2-connected and not Hamiltonian.
    """
    if not is_two_connected(g):
        raise ValueError("graph must be 2-connected")
    cyc = longest_cycle(g)
    if cyc.length == g.n:
        raise ValueError("lemma vacuous: graph is Hamiltonian")
    for h in cycle_components(g, cyc):
        if max_fan_edges(g, cyc, h) >= k and cyc.length < 2 * k:
            return False
    return True
