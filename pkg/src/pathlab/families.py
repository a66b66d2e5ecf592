"""Deterministic generators for the extremal graph families.

Vertex layout is fixed so witnesses reproduce across runs: copies are
laid out block by block with each copy's clique side first, then x, then
y (when the family has terminals).  All threshold parameters are exact
integers or rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, GraphBuilder


@dataclass
class LabeledFamily:
    name: str
    graph: Graph
    x: int | None
    y: int | None
    params: dict = field(default_factory=dict)


def sharpness_family(k: int, t: int) -> LabeledFamily:
    """Terminal-threshold extremal family: t half-clique-half-independent
    blocks with both terminals joined to every clique-side vertex.

    Requires k odd, k >= 5, t >= 1.  Exactly (n-2)/2 vertices outside
    {x, y} have degree >= k, and every longest (x,y)-path has k-1 edges.
    """
    if k < 5 or k % 2 == 0:
        raise ValueError("k must be an odd integer >= 5")
    if t < 1:
        raise ValueError("t must be >= 1")
    fam = alpha_family(Fraction(1, 2), k, t)
    return LabeledFamily(
        name="sharpness", graph=fam.graph, x=fam.x, y=fam.y,
        params={"k": k, "t": t},
    )


def alpha_family(alpha: Fraction, k: int, t: int) -> LabeledFamily:
    """Fractional variant: clique side of size alpha*(k-1) per block.

    Requires 0 < alpha <= 1/2 with alpha*(k-1) an integer >= 2, t >= 1.
    The degree->=k count is alpha*(n-2) exactly and a longest (x,y)-path
    has 2*alpha*(k-1) edges.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha <= Fraction(1, 2):
        raise ValueError("alpha must lie in (0, 1/2]")
    if t < 1:
        raise ValueError("t must be >= 1")
    a = alpha * (k - 1)
    if a.denominator != 1:
        raise ValueError(f"alpha*(k-1) = {a} is not an integer")
    a = int(a)
    if a < 2:
        raise ValueError(f"alpha*(k-1) = {a} must be >= 2")
    b = (k - 1) - a
    n = t * (k - 1) + 2
    builder = GraphBuilder(n)
    x = n - 2
    y = n - 1
    for c in range(t):
        base = c * (k - 1)
        clique = range(base, base + a)
        indep = range(base + a, base + k - 1)
        for i in clique:
            for j in clique:
                if i < j:
                    builder.add_edge(i, j)
            for j in indep:
                builder.add_edge(i, j)
            builder.add_edge(x, i)
            builder.add_edge(y, i)
    return LabeledFamily(
        name="alpha", graph=builder.build(), x=x, y=y,
        params={"alpha": alpha, "k": k, "t": t},
    )


def hj_g1(k: int, t: int) -> LabeledFamily:
    """Haggkvist-Jackson G1: an edge joined to K_{2k-4} plus t isolated
    vertices.

    Requires k >= 3, t >= 1.  Exactly 2k-2 vertices have degree >= k and
    the circumference is 2k-1.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    if t < 1:
        raise ValueError("t must be >= 1")
    clique = 2 * k - 4
    n = clique + t + 2
    builder = GraphBuilder(n)
    hub1 = n - 2
    hub2 = n - 1
    builder.add_edge(hub1, hub2)
    for i in range(clique):
        for j in range(i + 1, clique):
            builder.add_edge(i, j)
    for v in range(clique + t):
        builder.add_edge(hub1, v)
        builder.add_edge(hub2, v)
    return LabeledFamily(
        name="hj_g1", graph=builder.build(), x=None, y=None,
        params={"k": k, "t": t},
    )


def hj_g2(k: int, copies: int) -> LabeledFamily:
    """Haggkvist-Jackson G2: K_{k+1} with half-clique blocks hung off two
    fixed vertices.

    Requires k odd >= 5, copies >= 1.  The two fixed vertices are 0 and 1;
    each copy's clique side is joined to both.  Exactly (n+k+1)/2 vertices
    have degree >= k and the circumference is 2k-1.
    """
    if k < 5 or k % 2 == 0:
        raise ValueError("k must be an odd integer >= 5")
    if copies < 1:
        raise ValueError("copies must be >= 1")
    half = (k - 1) // 2
    n = (k + 1) + copies * (k - 1)
    builder = GraphBuilder(n)
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            builder.add_edge(i, j)
    for c in range(copies):
        base = (k + 1) + c * (k - 1)
        clique = range(base, base + half)
        indep = range(base + half, base + k - 1)
        for i in clique:
            for j in clique:
                if i < j:
                    builder.add_edge(i, j)
            for j in indep:
                builder.add_edge(i, j)
            builder.add_edge(0, i)
            builder.add_edge(1, i)
    return LabeledFamily(
        name="hj_g2", graph=builder.build(), x=None, y=None,
        params={"k": k, "copies": copies},
    )
