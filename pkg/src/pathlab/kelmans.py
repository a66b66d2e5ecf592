"""Edge-switching toward a vertex, with certified path lifting.

The switch moves every edge uw with w in N[u] \\ N[v] over to vw, which
preserves the edge count and shifts degree onto v.  Any (x,y)-path of
the switched graph can be lifted back to one at least as long in the
original, provided u is not an endpoint; ``lift_path`` implements the
full case analysis and validates its output before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .graph import (
    Graph,
    GraphBuilder,
    SequenceOrder,
    degree_sequence,
    iter_bits,
    tau_compare,
)
from .solver import Path


@dataclass(frozen=True)
class KelmansRecord:
    base: Graph
    result: Graph
    u: int
    v: int
    moved: frozenset[int]


def kelmans(g: Graph, u: int, v: int) -> KelmansRecord:
    """Switch ``g`` from ``u`` to ``v``; requires v adjacent to u.

    Moved vertices are N[u] \\ N[v]; the uv edge itself never moves.
    """
    if u == v:
        raise ValueError("u and v must be distinct")
    if not g.has_edge(u, v):
        raise ValueError(f"{v} is not a neighbor of {u}")
    closed_u = g.adjacency_mask(u) | (1 << u)
    closed_v = g.adjacency_mask(v) | (1 << v)
    moved_mask = closed_u & ~closed_v
    builder = GraphBuilder.from_graph(g)
    for w in iter_bits(moved_mask):
        builder.remove_edge(u, w)
        builder.add_edge(v, w)
    return KelmansRecord(
        base=g,
        result=builder.build(),
        u=u,
        v=v,
        moved=frozenset(iter_bits(moved_mask)),
    )


def tau_increases(rec: KelmansRecord) -> bool:
    """True when the switched graph has a strictly larger degree sequence.

    Requires that neither closed neighborhood contains the other; this is
    guaranteed to hold then, so a False return indicates a bug.
    """
    g = rec.base
    closed_u = g.adjacency_mask(rec.u) | (1 << rec.u)
    closed_v = g.adjacency_mask(rec.v) | (1 << rec.v)
    if not closed_u & ~closed_v:
        raise ValueError(
            f"closed neighborhood of {rec.u} is contained in that of {rec.v}"
        )
    if not closed_v & ~closed_u:
        raise ValueError(
            f"closed neighborhood of {rec.v} is contained in that of {rec.u}"
        )
    order = tau_compare(degree_sequence(rec.result), degree_sequence(rec.base))
    return order is SequenceOrder.LARGER


def _lift_oriented(rec: KelmansRecord, vs: list[int]) -> list[int]:
    """Lift assuming: if u lies on the path then v occurs before u."""
    base = rec.base
    u, v = rec.u, rec.v
    edge = base.has_edge

    if v not in vs:
        # Every edge here avoids v, and edges of the switched graph that
        # avoid v are original edges.
        return vs

    pos_v = vs.index(v)
    if u not in vs:
        if pos_v == 0:
            nxt = vs[1]
            if edge(v, nxt):
                return vs
            return [v, u] + vs[1:]
        if pos_v == len(vs) - 1:
            prv = vs[-2]
            if edge(prv, v):
                return vs
            return vs[:-1] + [u, v]
        prv, nxt = vs[pos_v - 1], vs[pos_v + 1]
        has_prv, has_nxt = edge(prv, v), edge(v, nxt)
        if has_prv and has_nxt:
            return vs
        if has_prv:
            return vs[: pos_v + 1] + [u] + vs[pos_v + 1:]
        if has_nxt:
            return vs[:pos_v] + [u] + vs[pos_v:]
        return vs[:pos_v] + [u] + vs[pos_v + 1:]

    pos_u = vs.index(u)
    assert pos_v < pos_u, "orientation normalization failed"
    if pos_v == 0:
        nxt = vs[1]
        if edge(v, nxt):
            return vs
        return [v] + vs[1:pos_u][::-1] + vs[pos_u:]
    prv, nxt = vs[pos_v - 1], vs[pos_v + 1]
    has_prv, has_nxt = edge(prv, v), edge(v, nxt)
    if has_prv and has_nxt:
        return vs
    if has_prv:
        return vs[: pos_v + 1] + vs[pos_v + 1: pos_u][::-1] + vs[pos_u:]
    if has_nxt:
        return vs[:pos_v] + vs[pos_v: pos_u + 1][::-1] + vs[pos_u + 1:]
    return vs[:pos_v] + [u] + vs[pos_v + 1: pos_u] + [v] + vs[pos_u + 1:]


def lift_path(rec: KelmansRecord, p: Path) -> Path:
    """Lift an (x,y)-path of the switched graph back to the base graph.

    The endpoints are preserved and the length never decreases.  ``u``
    must not be an endpoint of ``p`` (``v`` may be).  The lifted path is
    validated before it is returned; a validation failure raises
    :class:`InvariantViolation` and would indicate a bug.
    """
    p.validate(rec.result)
    vs = list(p.vertices)
    x, y = vs[0], vs[-1]
    if rec.u in (x, y):
        raise ValueError(f"endpoint {rec.u} is the switch source u")

    flip = (
        rec.v in vs and rec.u in vs and vs.index(rec.v) > vs.index(rec.u)
    )
    if flip:
        lifted = _lift_oriented(rec, vs[::-1])[::-1]
    else:
        lifted = _lift_oriented(rec, vs)

    out = Path(tuple(lifted))
    try:
        out.validate(rec.base)
    except ValueError as exc:
        raise InvariantViolation(f"lifted path is invalid in the base graph: {exc}")
    if (out.vertices[0], out.vertices[-1]) != (x, y):
        raise InvariantViolation("lift changed the path endpoints")
    if out.length < p.length:
        raise InvariantViolation("lift shortened the path")
    return out
