"""Hypothesis/conclusion checkers for the bundled claims, plus sweeps.

Each checker evaluates one instance and returns a
:class:`VerificationReport` whose verdict is ``pass``, ``vacuous``
(hypothesis fails, claim asserts nothing), ``COUNTEREXAMPLE``
(hypothesis holds, conclusion fails), or ``refused`` (an enumeration
cut-off was hit).  All threshold arithmetic is exact integers or
rationals; nothing is floated.

``sweep`` drives a checker across a graph6 stream and a parameter grid.
For every bundled claim the hypothesis is monotone in k, so the sweep
can optionally check only the binding instance per cell group
(``binding_only``), which is what makes six-figure random corpora cheap;
the per-instance checkers stay the straightforward reference semantics
and the test suite cross-checks the two against each other.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .connectivity import is_two_connected
from .errors import Graph6Error
from .fan import cycle_components, extract_fan, max_fan_edges, validate_fan
from .graph import Graph, iter_bits
from .graph6 import parse_graph6, serialize_graph6
from .solver import (
    Cycle,
    circumference,
    has_cycle_at_least,
    has_xy_path_at_least,
    longest_cycle,
    longest_path_length,
    longest_xy_path,
    xy_length_row,
)

VERDICT_PASS = "pass"
VERDICT_VACUOUS = "vacuous"
VERDICT_COUNTEREXAMPLE = "COUNTEREXAMPLE"
VERDICT_REFUSED = "refused"

_ROW_LIMIT = 10       # exact all-pairs rows below this size
_CIRC_LIMIT = 12      # exact circumference below this size
_INDEP_SIZE_CAP = 12
_INDEP_NODE_CAP = 10_000_000

_REFUSED = object()
_NO_SET = object()    # no independent set of the requested size exists


class EnumerationRefused(Exception):
    """Raised when an independent-set enumeration exceeds its cut-off."""


# ---------------------------------------------------------------------------
# Reports


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _params(**kw) -> tuple[tuple[str, str], ...]:
    return tuple(
        (k, _fmt_value(v)) for k, v in sorted(kw.items()) if v is not None
    )


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    graph6: str
    params: tuple[tuple[str, str], ...]
    hypothesis_holds: bool | None
    conclusion_holds: bool | None
    witness: tuple[int, ...] | None
    verdict: str

    def params_str(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params) or "-"

    def witness_str(self) -> str:
        if self.witness is None:
            return "-"
        return ",".join(str(v) for v in self.witness)

    def to_tsv(self) -> str:
        return "\t".join(
            (self.claim, self.graph6, self.params_str(), self.verdict, self.witness_str())
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "claim": self.claim,
                "graph6": self.graph6,
                "params": dict(self.params),
                "verdict": self.verdict,
                "witness": list(self.witness) if self.witness is not None else None,
            },
            sort_keys=True,
        )


def _verdict(hyp: bool | None, concl: bool | None) -> str:
    if hyp is None:
        return VERDICT_REFUSED
    if not hyp:
        return VERDICT_VACUOUS
    return VERDICT_PASS if concl else VERDICT_COUNTEREXAMPLE


def _report(claim, graph6, params, hyp, concl, witness=None) -> VerificationReport:
    return VerificationReport(
        claim=claim,
        graph6=graph6,
        params=params,
        hypothesis_holds=hyp,
        conclusion_holds=concl if hyp else None,
        witness=witness,
        verdict=_verdict(hyp, concl),
    )


# ---------------------------------------------------------------------------
# Independent-set enumeration and vertex connectivity


def min_max_degree_independent(
    g: Graph, size: int, exclude: tuple[int, ...] = (),
    node_cap: int = _INDEP_NODE_CAP,
):
    """min over independent sets S of the given size (avoiding ``exclude``)
    of max degree in S; ``_NO_SET`` when no such set exists.

    Candidates are scanned in ascending degree order, so the max of a
    partial set is the degree of its last member; enumeration beyond the
    node cap raises :class:`EnumerationRefused`.
    """
    if size > _INDEP_SIZE_CAP:
        raise EnumerationRefused(f"independent-set size {size} > {_INDEP_SIZE_CAP}")
    skip = set(exclude)
    cand = sorted(
        ((g.degree(v), v) for v in range(g.n) if v not in skip)
    )
    rows = g.rows()
    best = None
    nodes = 0

    def rec(idx: int, chosen: int, count: int) -> None:
        nonlocal best, nodes
        for i in range(idx, len(cand)):
            d, v = cand[i]
            if best is not None and d >= best:
                return
            nodes += 1
            if nodes > node_cap:
                raise EnumerationRefused(f"enumeration exceeded {node_cap} nodes")
            if rows[v] & chosen:
                continue
            if count + 1 == size:
                best = d
            else:
                rec(i + 1, chosen | (1 << v), count + 1)

    rec(0, 0, 0)
    return _NO_SET if best is None else best


def min_degree_sum_independent(
    g: Graph, size: int, node_cap: int = _INDEP_NODE_CAP
):
    """min over independent sets of the given size of the degree sum;
    ``_NO_SET`` when none exists."""
    if size > _INDEP_SIZE_CAP:
        raise EnumerationRefused(f"independent-set size {size} > {_INDEP_SIZE_CAP}")
    cand = sorted((g.degree(v), v) for v in range(g.n))
    rows = g.rows()
    best = None
    nodes = 0

    def rec(idx: int, chosen: int, count: int, total: int) -> None:
        nonlocal best, nodes
        for i in range(idx, len(cand)):
            d, v = cand[i]
            if best is not None and total + (size - count) * d >= best:
                return
            nodes += 1
            if nodes > node_cap:
                raise EnumerationRefused(f"enumeration exceeded {node_cap} nodes")
            if rows[v] & chosen:
                continue
            if count + 1 == size:
                best = total + d
            else:
                rec(i + 1, chosen | (1 << v), count + 1, total + d)

    rec(0, 0, 0, 0)
    return _NO_SET if best is None else best


def _unit_vertex_maxflow(g: Graph, src: int, dst: int, need: int) -> int:
    """Max number of internally disjoint src-dst paths, capped at ``need``.

    Vertex-split flow network with unit internal capacities and BFS
    augmentation; desk scale only.
    """
    n = g.n
    big = n + 1
    size = 2 * n
    cap = [[0] * size for _ in range(size)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = 1
    cap[2 * src][2 * src + 1] = big
    cap[2 * dst][2 * dst + 1] = big
    for u, v in g.edges():
        cap[2 * u + 1][2 * v] = big
        cap[2 * v + 1][2 * u] = big
    source = 2 * src + 1
    sink = 2 * dst
    flow = 0
    while flow < need:
        parent = [-1] * size
        parent[source] = source
        queue = [source]
        while queue and parent[sink] == -1:
            nxt = []
            for a in queue:
                row = cap[a]
                for b in range(size):
                    if row[b] > 0 and parent[b] == -1:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if parent[sink] == -1:
            break
        bottleneck = big
        b = sink
        while b != source:
            a = parent[b]
            if cap[a][b] < bottleneck:
                bottleneck = cap[a][b]
            b = a
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= bottleneck
            cap[b][a] += bottleneck
            b = a
        flow += bottleneck
    return min(flow, need)


def max_disjoint_paths_to_set(g: Graph, v: int, targets: frozenset[int]) -> int:
    """Maximum number of internally disjoint paths from ``v`` into
    ``targets`` with pairwise distinct termini (max-flow model)."""
    if v in targets or not targets:
        raise ValueError("targets must be non-empty and exclude v")
    n = g.n
    big = n + 1
    size = 2 * n + 1
    sink = 2 * n
    cap = [[0] * size for _ in range(size)]
    for u in range(n):
        cap[2 * u][2 * u + 1] = 1
    cap[2 * v][2 * v + 1] = big
    for t in targets:
        cap[2 * t + 1][sink] = 1
    for a, b in g.edges():
        cap[2 * a + 1][2 * b] = big
        cap[2 * b + 1][2 * a] = big
    source = 2 * v + 1
    flow = 0
    while True:
        parent = [-1] * size
        parent[source] = source
        queue = [source]
        while queue and parent[sink] == -1:
            nxt = []
            for a in queue:
                row = cap[a]
                for b in range(size):
                    if row[b] > 0 and parent[b] == -1:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if parent[sink] == -1:
            return flow
        b = sink
        bottleneck = big
        while b != source:
            a = parent[b]
            if cap[a][b] < bottleneck:
                bottleneck = cap[a][b]
            b = a
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= bottleneck
            cap[b][a] += bottleneck
            b = a
        flow += bottleneck


def check_dirac_fan(g, v, targets, k, ctx=None, witness=False) -> VerificationReport:
    """k-connected graphs admit k internally disjoint paths from any
    vertex into any k-element target set (distinct termini)."""
    targets = frozenset(targets)
    c = _ctx(g, ctx)
    if k < 1:
        raise ValueError("k must be >= 1")
    hyp = len(targets) >= k and v not in targets and c.connectivity_at_least(k)
    concl = None
    if hyp:
        concl = max_disjoint_paths_to_set(g, v, targets) >= k
    return _report(
        "dirac_fan", c.graph6, _params(k=k, v=v), hyp, concl, None
    )


def vertex_connectivity_at_least(g: Graph, s: int) -> bool:
    """Decide kappa(G) >= s by max-flow over non-adjacent pairs."""
    if s <= 0:
        return True
    n = g.n
    if n <= s:
        return False
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            if _unit_vertex_maxflow(g, u, v, s) < s:
                return False
    return True


# ---------------------------------------------------------------------------
# Pairwise index-degree condition and its labeling helpers


def ascending_degree_labeling(g: Graph) -> tuple[int, ...]:
    """Default labeling: vertices sorted by (degree, index)."""
    return tuple(sorted(range(g.n), key=lambda v: (g.degree(v), v)))


def bermond_condition_holds(g: Graph, order: tuple[int, ...], c: int) -> bool:
    """Every 1-based position pair i < j satisfies one of the five clauses."""
    n = g.n
    if sorted(order) != list(range(n)):
        raise ValueError("labeling is not a bijection on the vertices")
    deg = [g.degree(v) for v in order]
    for i in range(1, n + 1):
        di = deg[i - 1]
        vi = order[i - 1]
        row = g.adjacency_mask(vi)
        for j in range(i + 1, n + 1):
            if i + j < c:
                continue
            if row >> order[j - 1] & 1:
                continue
            if di > i:
                continue
            dj = deg[j - 1]
            if dj >= j:
                continue
            if di + dj >= c:
                continue
            return False
    return True


def bermond_all_labelings(g: Graph, c: int) -> dict:
    """Exhaustive-labelings mode (n <= 8): how many labelings satisfy the
    pairwise condition, and whether the conclusion holds."""
    if g.n > 8:
        raise ValueError("exhaustive labelings limited to n <= 8")
    satisfying = 0
    total = 0
    for perm in itertools.permutations(range(g.n)):
        total += 1
        if bermond_condition_holds(g, perm, c):
            satisfying += 1
    return {
        "total": total,
        "satisfying": satisfying,
        "conclusion": circumference(g) >= c,
    }


def count_non_feasible(g: Graph, c: int) -> int:
    """Vertices of degree < c/2 (exact: 2*deg < c)."""
    return sum(1 for v in range(g.n) if 2 * g.degree(v) < c)


# ---------------------------------------------------------------------------
# Per-graph context with caches


def _greedy_path_row(g: Graph, x: int) -> list[int]:
    """Lower bounds on (x, v)-path lengths from one fewest-exits-first walk."""
    rows = g.rows()
    best = [-1] * g.n
    best[x] = 0
    used = 1 << x
    cur = x
    length = 0
    while True:
        cand = rows[cur] & ~used
        if not cand:
            return best
        pick = -1
        score = 1 << 30
        for w in iter_bits(cand):
            sc = (rows[w] & ~used).bit_count()
            if sc < score:
                score = sc
                pick = w
        used |= 1 << pick
        length += 1
        best[pick] = length
        cur = pick


class GraphContext:
    """Caches per-graph quantities shared across checker calls."""

    def __init__(self, g: Graph, graph6: str | None = None):
        self.g = g
        self.n = g.n
        self._graph6 = graph6
        degs = [g.degree(v) for v in range(g.n)]
        self.degrees = degs
        hist = [0] * (g.n + 2)
        for d in degs:
            hist[d] += 1
        at_least = [0] * (g.n + 2)
        for k in range(g.n, -1, -1):
            at_least[k] = at_least[k + 1] + hist[k]
        self._at_least = at_least
        self._two: bool | None = None
        self._circ: int | None = None
        self._cyc_lb = 0
        self._cyc_false_at: int | None = None
        self._rows: dict[int, list[int]] = {}
        self._greedy: dict[int, list[int]] = {}
        self._path_lb: dict[tuple[int, int], int] = {}
        self._path_ub: dict[tuple[int, int], int] = {}
        self._lp_len: int | None = None
        self._indep: dict = {}
        self._indep_sum: dict = {}
        self._conn: dict[int, bool] = {}
        self._cycle_cached: Cycle | None | str = "unset"
        self._fan_max: dict[frozenset, int] = {}

    @property
    def graph6(self) -> str:
        if self._graph6 is None:
            self._graph6 = serialize_graph6(self.g)
        return self._graph6

    def count_at_least(self, k: int) -> int:
        if k <= 0:
            return self.n
        if k > self.n:
            return 0
        return self._at_least[k]

    def count_high(self, k: int, x: int | None = None, y: int | None = None) -> int:
        out = self.count_at_least(k)
        if x is not None and self.degrees[x] >= k:
            out -= 1
        if y is not None and self.degrees[y] >= k:
            out -= 1
        return out

    def two_connected(self) -> bool:
        if self._two is None:
            self._two = is_two_connected(self.g)
        return self._two

    def circumference(self) -> int:
        if self._circ is None:
            self._circ = circumference(self.g)
        return self._circ

    def cycle_at_least(self, length: int) -> bool:
        if length <= 0:
            return True
        if self._circ is not None or self.n <= _CIRC_LIMIT:
            return self.circumference() >= length
        if length <= self._cyc_lb:
            return True
        if self._cyc_false_at is not None and length >= self._cyc_false_at:
            return False
        ok, wit = has_cycle_at_least(self.g, length)
        if ok:
            self._cyc_lb = max(self._cyc_lb, wit.length)
            return True
        self._cyc_false_at = length
        return False

    def xy_row(self, x: int) -> list[int]:
        row = self._rows.get(x)
        if row is None:
            row = xy_length_row(self.g, x)
            self._rows[x] = row
        return row

    def greedy_row(self, x: int) -> list[int]:
        row = self._greedy.get(x)
        if row is None:
            row = _greedy_path_row(self.g, x)
            self._greedy[x] = row
        return row

    def path_at_least(self, x: int, y: int, length: int) -> bool:
        if length <= 0:
            return True
        if self.n <= _ROW_LIMIT:
            return self.xy_row(x)[y] >= length
        key = (x, y) if x < y else (y, x)
        lb = self._path_lb.get(key)
        if lb is None:
            lb = self.greedy_row(key[0])[key[1]]
            self._path_lb[key] = lb
        if length <= lb:
            return True
        ub = self._path_ub.get(key)
        if ub is not None and length > ub:
            return False
        try:
            ok, wit = has_xy_path_at_least(self.g, x, y, length)
        except ValueError:
            self._path_ub[key] = -1
            return False
        if ok:
            self._path_lb[key] = max(lb, wit.length)
            return True
        self._path_ub[key] = length - 1
        return False

    def longest_path_len(self) -> int:
        if self._lp_len is None:
            self._lp_len = longest_path_length(self.g)
        return self._lp_len

    def kstar_indep(self, size: int, exclude: tuple[int, ...] = ()):
        key = (size, exclude)
        if key not in self._indep:
            try:
                self._indep[key] = min_max_degree_independent(self.g, size, exclude)
            except EnumerationRefused:
                self._indep[key] = _REFUSED
        return self._indep[key]

    def mstar_indep_sum(self, size: int):
        if size not in self._indep_sum:
            try:
                self._indep_sum[size] = min_degree_sum_independent(self.g, size)
            except EnumerationRefused:
                self._indep_sum[size] = _REFUSED
        return self._indep_sum[size]

    def connectivity_at_least(self, s: int) -> bool:
        if s not in self._conn:
            self._conn[s] = vertex_connectivity_at_least(self.g, s)
        return self._conn[s]

    def longest_cycle_witness(self) -> Cycle | None:
        if self._cycle_cached == "unset":
            self._cycle_cached = longest_cycle(self.g)
            if self._cycle_cached is not None:
                self._circ = self._cycle_cached.length
        return self._cycle_cached

    def fan_max(self, h: frozenset[int]) -> int:
        if h not in self._fan_max:
            self._fan_max[h] = max_fan_edges(self.g, self.longest_cycle_witness(), h)
        return self._fan_max[h]


def _ctx(g: Graph, ctx: GraphContext | None) -> GraphContext:
    if ctx is not None:
        return ctx
    return GraphContext(g)


# ---------------------------------------------------------------------------
# Single-instance checkers (reference semantics)


def _path_evidence(g: Graph, x: int, y: int) -> tuple[int, ...]:
    return longest_xy_path(g, x, y).vertices


def _cycle_evidence(g: Graph) -> tuple[int, ...] | None:
    cyc = longest_cycle(g)
    return None if cyc is None else cyc.vertices


def check_main(g, x, y, k, ctx=None, witness=False) -> VerificationReport:
    """Half-count threshold: >= (n-1)/2 high-degree vertices outside {x,y}
    force an (x,y)-path of length >= k."""
    if x == y:
        raise ValueError("x and y must be distinct")
    c = _ctx(g, ctx)
    hyp = c.two_connected() and 2 * c.count_high(k, x, y) >= g.n - 1
    concl = None
    wit = None
    if hyp:
        concl = c.path_at_least(x, y, k)
        if not concl or witness:
            wit = _path_evidence(g, x, y)
    return _report("main", c.graph6, _params(k=k, x=x, y=y), hyp, concl, wit)


def check_eg_classic(g, x, y, k, ctx=None, witness=False) -> VerificationReport:
    """Full-count threshold: every vertex outside {x,y} has degree >= k."""
    if x == y:
        raise ValueError("x and y must be distinct")
    c = _ctx(g, ctx)
    hyp = c.two_connected() and c.count_high(k, x, y) == g.n - 2
    concl = None
    wit = None
    if hyp:
        concl = c.path_at_least(x, y, k)
        if not concl or witness:
            wit = _path_evidence(g, x, y)
    return _report("eg", c.graph6, _params(k=k, x=x, y=y), hyp, concl, wit)


def check_bondy_jackson(g, x, y, k, ctx=None, witness=False) -> VerificationReport:
    """All-but-one threshold: n_k(x,y) >= n-3 with n >= 4."""
    if x == y:
        raise ValueError("x and y must be distinct")
    c = _ctx(g, ctx)
    hyp = (
        g.n >= 4
        and c.two_connected()
        and c.count_high(k, x, y) >= g.n - 3
    )
    concl = None
    wit = None
    if hyp:
        concl = c.path_at_least(x, y, k)
        if not concl or witness:
            wit = _path_evidence(g, x, y)
    return _report("bondy_jackson", c.graph6, _params(k=k, x=x, y=y), hyp, concl, wit)


def check_conj_alpha(g, x, y, k, alpha, ctx=None, witness=False) -> VerificationReport:
    """Fractional threshold conjecture: more than alpha*(n-2) high-degree
    vertices outside {x,y} should force length >= ceil(2*alpha*k)."""
    if x == y:
        raise ValueError("x and y must be distinct")
    alpha = Fraction(alpha)
    if not 0 < alpha <= Fraction(1, 2):
        raise ValueError("alpha must lie in (0, 1/2]")
    c = _ctx(g, ctx)
    hyp = (
        c.two_connected()
        and c.count_high(k, x, y) * alpha.denominator > alpha.numerator * (g.n - 2)
    )
    concl = None
    wit = None
    target = -((-2 * alpha.numerator * k) // alpha.denominator)
    if hyp:
        concl = c.path_at_least(x, y, target)
        if not concl or witness:
            wit = _path_evidence(g, x, y)
    return _report(
        "alpha", c.graph6, _params(alpha=alpha, k=k, x=x, y=y), hyp, concl, wit
    )


def check_woodall(g, k, ctx=None, witness=False) -> VerificationReport:
    """Count threshold n/2 + k forces a cycle of length >= 2k."""
    c = _ctx(g, ctx)
    hyp = c.two_connected() and 2 * c.count_at_least(k) >= g.n + 2 * k
    concl = None
    wit = None
    if hyp:
        concl = c.cycle_at_least(2 * k)
        if not concl or witness:
            wit = _cycle_evidence(g)
    return _report("woodall", c.graph6, _params(k=k), hyp, concl, wit)


def check_blw(g, k, ctx=None, witness=False) -> VerificationReport:
    """Count threshold n/2 forces a path of length >= k (no connectivity)."""
    c = _ctx(g, ctx)
    hyp = 2 * c.count_at_least(k) >= g.n
    concl = None
    if hyp:
        concl = c.longest_path_len() >= k
    return _report("blw", c.graph6, _params(k=k), hyp, concl, None)


def check_dirac(g, k, ctx=None, witness=False) -> VerificationReport:
    c = _ctx(g, ctx)
    hyp = c.two_connected() and c.count_at_least(k) == g.n
    concl = None
    wit = None
    if hyp:
        concl = c.cycle_at_least(min(g.n, 2 * k))
        if not concl or witness:
            wit = _cycle_evidence(g)
    return _report("dirac", c.graph6, _params(k=k), hyp, concl, wit)


def check_one_exception(g, k, ctx=None, witness=False) -> VerificationReport:
    c = _ctx(g, ctx)
    hyp = c.two_connected() and c.count_at_least(k) >= g.n - 1
    concl = None
    wit = None
    if hyp:
        concl = c.cycle_at_least(min(g.n, 2 * k))
        if not concl or witness:
            wit = _cycle_evidence(g)
    return _report("one_exception", c.graph6, _params(k=k), hyp, concl, wit)


def check_sigma(g, k, s, ctx=None, witness=False) -> VerificationReport:
    """Independent-set max-degree condition forces a cycle >= 2k."""
    if s < 1 or k < 1:
        raise ValueError("k and s must be >= 1")
    c = _ctx(g, ctx)
    kstar = c.kstar_indep(s + 1)
    if kstar is _REFUSED:
        return _report("sigma", c.graph6, _params(k=k, s=s), None, None, None)
    hyp = (
        c.two_connected()
        and g.n >= 2 * k * (s + 1)
        and (kstar is _NO_SET or k <= kstar)
    )
    concl = None
    wit = None
    if hyp:
        concl = c.cycle_at_least(2 * k)
        if not concl or witness:
            wit = _cycle_evidence(g)
    return _report("sigma", c.graph6, _params(k=k, s=s), hyp, concl, wit)


def check_independent_path(g, x, y, k, s, ctx=None, witness=False) -> VerificationReport:
    """Independent-set max-degree condition forces an (x,y)-path >= k."""
    if s < 1 or k < 1:
        raise ValueError("k and s must be >= 1")
    if x == y:
        raise ValueError("x and y must be distinct")
    c = _ctx(g, ctx)
    key = tuple(sorted((x, y)))
    kstar = c.kstar_indep(s + 1, key)
    if kstar is _REFUSED:
        return _report(
            "indep_path", c.graph6, _params(k=k, s=s, x=x, y=y), None, None, None
        )
    hyp = (
        c.two_connected()
        and g.n >= 2 * k * s + 3
        and (kstar is _NO_SET or k <= kstar)
    )
    concl = None
    wit = None
    if hyp:
        concl = c.path_at_least(x, y, k)
        if not concl or witness:
            wit = _path_evidence(g, x, y)
    return _report(
        "indep_path", c.graph6, _params(k=k, s=s, x=x, y=y), hyp, concl, wit
    )


def check_fournier_fraisse(g, s, m, ctx=None, witness=False) -> VerificationReport:
    """s-connected with independent degree sums >= m forces
    c(G) >= min(2m/(s+1), n)."""
    if s < 2:
        raise ValueError("s must be >= 2")
    c = _ctx(g, ctx)
    mstar = c.mstar_indep_sum(s + 1)
    if mstar is _REFUSED:
        return _report("fournier_fraisse", c.graph6, _params(m=m, s=s), None, None, None)
    hyp = c.connectivity_at_least(s) and (mstar is _NO_SET or mstar >= m)
    concl = None
    wit = None
    if hyp:
        target = min(g.n, -((-2 * m) // (s + 1)))
        concl = c.cycle_at_least(target)
        if not concl or witness:
            wit = _cycle_evidence(g)
    return _report("fournier_fraisse", c.graph6, _params(m=m, s=s), hyp, concl, wit)


def check_conj_hj(g, k, ctx=None, witness=False) -> VerificationReport:
    """Count threshold max(2k-1, (n+k)/2 + 1) forces a cycle of length
    >= min(n, 2k) (open conjecture)."""
    c = _ctx(g, ctx)
    cnt = c.count_at_least(k)
    hyp = c.two_connected() and cnt >= 2 * k - 1 and 2 * cnt >= g.n + k + 2
    concl = None
    wit = None
    if hyp:
        concl = c.cycle_at_least(min(g.n, 2 * k))
        if not concl or witness:
            wit = _cycle_evidence(g)
    return _report("hj", c.graph6, _params(k=k), hyp, concl, wit)


def check_bermond(g, labeling, cc, ctx=None, witness=False) -> VerificationReport:
    """Pairwise index-degree condition forces circumference >= c; the
    report also records whether n >= 3c-1 (the proved regime)."""
    if not 1 <= cc <= g.n:
        raise ValueError(f"c must lie in [1, {g.n}]")
    c = _ctx(g, ctx)
    hyp = c.two_connected() and bermond_condition_holds(g, tuple(labeling), cc)
    concl = None
    wit = None
    if hyp:
        concl = c.cycle_at_least(cc)
        if not concl or witness:
            wit = _cycle_evidence(g)
    return _report(
        "bermond",
        c.graph6,
        _params(c=cc, regime=(g.n >= 3 * cc - 1)),
        hyp,
        concl,
        wit,
    )


def check_feasible_count_lemma(g, labeling, cc, ctx=None) -> bool:
    """Proof-side counting claim: under the pairwise condition there are
    at most c-1 vertices of degree < c/2."""
    c = _ctx(g, ctx)
    if not (c.two_connected() and bermond_condition_holds(g, tuple(labeling), cc)):
        raise ValueError("lemma inapplicable: hypothesis fails")
    return count_non_feasible(g, cc) <= cc - 1


def check_fan_theorem(g, cyc, h, k, ctx=None, witness=False) -> VerificationReport:
    """Half-count threshold inside a component forces a fan with >= k edges."""
    c = _ctx(g, ctx)
    h = frozenset(h)
    comps = cycle_components(g, cyc)
    if h not in comps:
        raise ValueError("h is not a component of the graph minus the cycle")
    count = sum(1 for v in h if g.degree(v) >= k)
    hyp = c.two_connected() and 2 * count >= len(h) + 1
    concl = None
    wit = None
    if hyp:
        try:
            fan = extract_fan(g, cyc, h, k)
            ok, _clause = validate_fan(g, cyc, h, fan)
            concl = ok and fan.edge_count >= k
            if concl and witness:
                wit = tuple(v for p in fan.paths for v in p.vertices)
        except AssertionError:
            concl = False
    return _report(
        "fan", c.graph6, _params(component=min(h), k=k), hyp, concl, wit
    )


def check_fan_cycle(g, k, ctx=None, witness=False) -> VerificationReport:
    """Fan-to-long-cycle implication on a longest cycle: a fan with >= k
    edges into C forces circumference >= 2k."""
    c = _ctx(g, ctx)
    hyp = False
    concl = None
    wit = None
    if c.two_connected():
        cyc = c.longest_cycle_witness()
        if cyc is not None and cyc.length < g.n:
            best = 0
            for h in cycle_components(g, cyc):
                best = max(best, c.fan_max(h))
            hyp = best >= k
            if hyp:
                concl = cyc.length >= 2 * k
                if not concl or witness:
                    wit = cyc.vertices
    return _report("fan_cycle", c.graph6, _params(k=k), hyp, concl, wit)


# ---------------------------------------------------------------------------
# Sweeps


@dataclass(frozen=True)
class SweepOptions:
    """Parameter grid controls for ``sweep``.

    ``binding_only`` checks, per monotone cell group, just the strongest
    hypothesis-satisfying instance and derives the implied verdicts
    arithmetically; full mode walks the literal grid.
    """

    k_min: int | None = None
    k_max: int | None = None
    alphas: tuple[Fraction, ...] = (Fraction(1, 3), Fraction(1, 2))
    s_values: tuple[int, ...] = (1, 2)
    m_values: tuple[int, ...] | None = None
    binding_only: bool = False


class _Acc:
    """Verdict accumulator; materializes reports only when needed."""

    def __init__(self, claim, graph6, counts, counterexamples, on_report):
        self.claim = claim
        self.graph6 = graph6
        self.counts = counts
        self.counterexamples = counterexamples
        self.on_report = on_report

    @property
    def streaming(self) -> bool:
        return self.on_report is not None

    def cell(self, params, hyp, concl, witness_fn=None):
        verdict = _verdict(hyp, concl)
        self.counts[verdict] += 1
        if verdict == VERDICT_COUNTEREXAMPLE:
            witness = witness_fn() if witness_fn is not None else None
            rep = _report(self.claim, self.graph6, params, hyp, concl, witness)
            self.counterexamples.append(rep)
            if self.on_report:
                self.on_report(rep)
        elif self.on_report:
            self.on_report(_report(self.claim, self.graph6, params, hyp, concl))

    def bulk(self, verdict, count):
        if count > 0:
            self.counts[verdict] += count


def _k_range(opts: SweepOptions, lo: int, hi: int) -> tuple[int, int]:
    if opts.k_min is not None:
        lo = max(lo, opts.k_min)
    if opts.k_max is not None:
        hi = min(hi, opts.k_max)
    return lo, hi


def _scan_kstar(lo: int, hi: int, pred) -> int | None:
    """Largest k in [lo, hi] with pred(k) true, assuming downward monotone."""
    for k in range(hi, lo - 1, -1):
        if pred(k):
            return k
    return None


def _emit_monotone(acc, lo, hi, kstar, conclude, params_of, witness_of=None):
    """Emit verdicts over k in [lo, hi] for a monotone claim.

    ``kstar`` is the largest hypothesis-satisfying k (None for none,
    ``_REFUSED`` to refuse the whole range); ``conclude(k)`` decides the
    conclusion.  Binding shortcut: a conclusion at kstar implies every
    smaller k, so in counting mode those cells are bulk-passed.
    """
    if lo > hi:
        return
    total = hi - lo + 1
    if kstar is _REFUSED:
        if acc.streaming:
            for k in range(lo, hi + 1):
                acc.cell(params_of(k), None, None)
        else:
            acc.bulk(VERDICT_REFUSED, total)
        return
    if kstar is None or kstar < lo:
        if acc.streaming:
            for k in range(lo, hi + 1):
                acc.cell(params_of(k), False, None)
        else:
            acc.bulk(VERDICT_VACUOUS, total)
        return
    top = min(kstar, hi)
    ok_top = conclude(top)
    wfn = (lambda: witness_of(top)) if witness_of else None
    if acc.streaming:
        for k in range(top + 1, hi + 1):
            acc.cell(params_of(k), False, None)
    else:
        acc.bulk(VERDICT_VACUOUS, hi - top)
    acc.cell(params_of(top), True, ok_top, wfn)
    if ok_top:
        if acc.streaming:
            for k in range(lo, top):
                acc.cell(params_of(k), True, True)
        else:
            acc.bulk(VERDICT_PASS, top - lo)
        return
    # Conclusion failed at the binding k: smaller targets must be checked
    # individually until one holds; below that everything passes.
    k = top - 1
    while k >= lo:
        ok = conclude(k)
        acc.cell(params_of(k), True, ok, (lambda kk=k: witness_of(kk)) if witness_of else None)
        if ok:
            break
        k -= 1
    if acc.streaming:
        for kk in range(lo, k):
            acc.cell(params_of(kk), True, True)
    else:
        acc.bulk(VERDICT_PASS, max(0, k - lo))


def _emit_full(acc, lo, hi, kstar, conclude, params_of, witness_of=None):
    """Literal per-k walk (kstar still encodes the monotone hypothesis)."""
    if kstar is _REFUSED:
        for k in range(lo, hi + 1):
            acc.cell(params_of(k), None, None)
        return
    for k in range(lo, hi + 1):
        hyp = kstar is not None and k <= kstar
        if hyp:
            wfn = (lambda kk=k: witness_of(kk)) if witness_of else None
            acc.cell(params_of(k), True, conclude(k), wfn)
        else:
            acc.cell(params_of(k), False, None)


def _emit(acc, opts, lo, hi, kstar, conclude, params_of, witness_of=None):
    if opts.binding_only:
        _emit_monotone(acc, lo, hi, kstar, conclude, params_of, witness_of)
    else:
        _emit_full(acc, lo, hi, kstar, conclude, params_of, witness_of)


def _ordered_pairs(n: int):
    for x in range(n):
        for y in range(n):
            if x != y:
                yield x, y


def _eval_pair_path_claim(ctx, opts, acc, kstar_fn, target_fn, extra=None):
    """Shared evaluator for (x, y, k)-gridded path-threshold claims."""
    n = ctx.n
    lo, hi = _k_range(opts, 2, n)
    if lo > hi:
        return
    per_pair = hi - lo + 1
    if not ctx.two_connected():
        total = n * (n - 1) * per_pair
        if acc.streaming:
            for x, y in _ordered_pairs(n):
                for k in range(lo, hi + 1):
                    acc.cell(_pp(extra, k, x, y), False, None)
        else:
            acc.bulk(VERDICT_VACUOUS, total)
        return
    for x, y in _ordered_pairs(n):
        kstar = kstar_fn(x, y, lo, hi)
        _emit(
            acc, opts, lo, hi, kstar,
            conclude=lambda k, x=x, y=y: ctx.path_at_least(x, y, target_fn(k)),
            params_of=lambda k, x=x, y=y: _pp(extra, k, x, y),
            witness_of=lambda k, x=x, y=y: _path_evidence(ctx.g, x, y),
        )


def _pp(extra, k, x, y):
    if extra:
        return _params(k=k, x=x, y=y, **extra)
    return _params(k=k, x=x, y=y)


def _eval_main(ctx, opts, acc):
    thresh = ctx.n - 1

    def kstar(x, y, lo, hi):
        return _scan_kstar(lo, hi, lambda k: 2 * ctx.count_high(k, x, y) >= thresh)

    _eval_pair_path_claim(ctx, opts, acc, kstar, lambda k: k)


def _eval_eg(ctx, opts, acc):
    def kstar(x, y, lo, hi):
        min_deg = min(
            (ctx.degrees[v] for v in range(ctx.n) if v not in (x, y)),
            default=0,
        )
        return min_deg if min_deg >= lo else None

    _eval_pair_path_claim(ctx, opts, acc, kstar, lambda k: k)


def _eval_bondy_jackson(ctx, opts, acc):
    if ctx.n < 4:
        lo, hi = _k_range(opts, 2, ctx.n)
        total = ctx.n * (ctx.n - 1) * max(0, hi - lo + 1)
        if acc.streaming:
            for x, y in _ordered_pairs(ctx.n):
                for k in range(lo, hi + 1):
                    acc.cell(_params(k=k, x=x, y=y), False, None)
        else:
            acc.bulk(VERDICT_VACUOUS, total)
        return

    def kstar(x, y, lo, hi):
        return _scan_kstar(
            lo, hi, lambda k: ctx.count_high(k, x, y) >= ctx.n - 3
        )

    _eval_pair_path_claim(ctx, opts, acc, kstar, lambda k: k)


def _eval_alpha(ctx, opts, acc):
    n2 = ctx.n - 2
    for alpha in opts.alphas:
        num, den = alpha.numerator, alpha.denominator

        def kstar(x, y, lo, hi, num=num, den=den):
            return _scan_kstar(
                lo, hi, lambda k: ctx.count_high(k, x, y) * den > num * n2
            )

        _eval_pair_path_claim(
            ctx, opts, acc, kstar,
            lambda k, num=num, den=den: -((-2 * num * k) // den),
            extra={"alpha": alpha},
        )


def _eval_cycle_claim(ctx, opts, acc, kstar_fn, target_fn, extra=None, lo0=1):
    n = ctx.n
    lo, hi = _k_range(opts, lo0, n)
    if lo > hi:
        return
    if not ctx.two_connected():
        if acc.streaming:
            for k in range(lo, hi + 1):
                acc.cell(_params(k=k, **(extra or {})), False, None)
        else:
            acc.bulk(VERDICT_VACUOUS, hi - lo + 1)
        return
    kstar = kstar_fn(lo, hi)
    _emit(
        acc, opts, lo, hi, kstar,
        conclude=lambda k: ctx.cycle_at_least(target_fn(k)),
        params_of=lambda k: _params(k=k, **(extra or {})),
        witness_of=lambda k: _cycle_evidence(ctx.g),
    )


def _eval_woodall(ctx, opts, acc):
    n = ctx.n
    _eval_cycle_claim(
        ctx, opts, acc,
        lambda lo, hi: _scan_kstar(
            lo, hi, lambda k: 2 * ctx.count_at_least(k) >= n + 2 * k
        ),
        lambda k: 2 * k,
    )


def _eval_dirac(ctx, opts, acc):
    min_deg = min(ctx.degrees) if ctx.n else 0
    _eval_cycle_claim(
        ctx, opts, acc,
        lambda lo, hi: min_deg if min_deg >= lo else None,
        lambda k: min(ctx.n, 2 * k),
    )


def _eval_one_exception(ctx, opts, acc):
    second = sorted(ctx.degrees)[1] if ctx.n >= 2 else 0
    _eval_cycle_claim(
        ctx, opts, acc,
        lambda lo, hi: second if second >= lo else None,
        lambda k: min(ctx.n, 2 * k),
    )


def _eval_hj(ctx, opts, acc):
    n = ctx.n

    def kstar(lo, hi):
        return _scan_kstar(
            lo, hi,
            lambda k: ctx.count_at_least(k) >= 2 * k - 1
            and 2 * ctx.count_at_least(k) >= n + k + 2,
        )

    _eval_cycle_claim(ctx, opts, acc, kstar, lambda k: min(n, 2 * k))


def _eval_sigma(ctx, opts, acc):
    n = ctx.n
    for s in opts.s_values:
        ks_ind = ctx.kstar_indep(s + 1)
        if ks_ind is _REFUSED:
            kstar_fn = lambda lo, hi: _REFUSED
        else:
            cap_ind = n if ks_ind is _NO_SET else ks_ind

            def kstar_fn(lo, hi, cap_ind=cap_ind, s=s):
                cap = min(cap_ind, n // (2 * (s + 1)))
                return cap if cap >= lo else None

        _eval_cycle_claim(
            ctx, opts, acc, kstar_fn, lambda k: 2 * k, extra={"s": s}
        )


def _eval_indep_path(ctx, opts, acc):
    n = ctx.n
    for s in opts.s_values:
        lo, hi = _k_range(opts, 2, n)
        if lo > hi:
            continue
        if not ctx.two_connected():
            total = n * (n - 1) * (hi - lo + 1)
            if acc.streaming:
                for x, y in _ordered_pairs(n):
                    for k in range(lo, hi + 1):
                        acc.cell(_params(k=k, s=s, x=x, y=y), False, None)
            else:
                acc.bulk(VERDICT_VACUOUS, total)
            continue
        for x, y in _ordered_pairs(n):
            ks_ind = ctx.kstar_indep(s + 1, tuple(sorted((x, y))))
            if ks_ind is _REFUSED:
                kstar = _REFUSED
            else:
                cap_ind = n if ks_ind is _NO_SET else ks_ind
                cap = min(cap_ind, (n - 3) // (2 * s))
                kstar = cap if cap >= lo else None
            _emit(
                acc, opts, lo, hi, kstar,
                conclude=lambda k, x=x, y=y: ctx.path_at_least(x, y, k),
                params_of=lambda k, x=x, y=y, s=s: _params(k=k, s=s, x=x, y=y),
                witness_of=lambda k, x=x, y=y: _path_evidence(ctx.g, x, y),
            )


def _eval_blw(ctx, opts, acc):
    n = ctx.n
    lo, hi = _k_range(opts, 1, n)
    if lo > hi:
        return
    kstar = _scan_kstar(lo, hi, lambda k: 2 * ctx.count_at_least(k) >= n)
    _emit(
        acc, opts, lo, hi, kstar,
        conclude=lambda k: ctx.longest_path_len() >= k,
        params_of=lambda k: _params(k=k),
    )


def _eval_fournier_fraisse(ctx, opts, acc):
    n = ctx.n
    for s in (2, 3):
        mstar = ctx.mstar_indep_sum(s + 1)
        if mstar is _REFUSED:
            acc.cell(_params(m=0, s=s), None, None)
            continue
        if opts.m_values is not None:
            ms = opts.m_values
        else:
            # Binding instance: the largest m whose hypothesis holds.
            top = n * (n - 1) if mstar is _NO_SET else mstar
            ms = (top,)
        conn = ctx.connectivity_at_least(s)
        for m in ms:
            hyp = conn and (mstar is _NO_SET or mstar >= m)
            concl = None
            if hyp:
                target = min(n, -((-2 * m) // (s + 1)))
                concl = ctx.cycle_at_least(target)
            acc.cell(
                _params(m=m, s=s), hyp, concl,
                (lambda: _cycle_evidence(ctx.g)) if hyp else None,
            )


def _eval_bermond(ctx, opts, acc):
    n = ctx.n
    order = ascending_degree_labeling(ctx.g)
    two = ctx.two_connected()
    for c in range(1, (n + 1) // 3 + 1):
        hyp = two and bermond_condition_holds(ctx.g, order, c)
        concl = ctx.cycle_at_least(c) if hyp else None
        acc.cell(
            _params(c=c, regime=(n >= 3 * c - 1)),
            hyp,
            concl,
            (lambda: _cycle_evidence(ctx.g)) if hyp else None,
        )


def _eval_bermond_count(ctx, opts, acc):
    n = ctx.n
    order = ascending_degree_labeling(ctx.g)
    two = ctx.two_connected()
    for c in range(1, n + 1):
        hyp = two and bermond_condition_holds(ctx.g, order, c)
        concl = (count_non_feasible(ctx.g, c) <= c - 1) if hyp else None
        acc.cell(_params(c=c), hyp, concl)


def _eval_fan(ctx, opts, acc):
    n = ctx.n
    lo, hi = _k_range(opts, 1, n)
    if lo > hi or not ctx.two_connected():
        return
    cyc = ctx.longest_cycle_witness()
    if cyc is None or cyc.length == n:
        return
    for h in cycle_components(ctx.g, cyc):
        degs = sorted((ctx.degrees[v] for v in h), reverse=True)
        need = (len(h) + 2) // 2

        def kstar(lo=lo, hi=hi, degs=degs, need=need):
            if len(degs) < need:
                return None
            cap = degs[need - 1]
            return cap if cap >= lo else None

        def conclude(k, h=h, cyc=cyc):
            try:
                fan = extract_fan(ctx.g, cyc, h, k)
            except AssertionError:
                return False
            ok, _clause = validate_fan(ctx.g, cyc, h, fan)
            return ok and fan.edge_count >= k

        _emit(
            acc, opts, lo, hi, kstar(), conclude,
            params_of=lambda k, h=h: _params(component=min(h), k=k),
        )


def _eval_fan_cycle(ctx, opts, acc):
    n = ctx.n
    lo, hi = _k_range(opts, 1, n)
    if lo > hi:
        return
    kstar = None
    cyc = None
    if ctx.two_connected():
        cyc = ctx.longest_cycle_witness()
        if cyc is not None and cyc.length < n:
            best = 0
            for h in cycle_components(ctx.g, cyc):
                best = max(best, ctx.fan_max(h))
            kstar = best if best >= lo else None
        else:
            cyc = None
    if cyc is None:
        if acc.streaming:
            for k in range(lo, hi + 1):
                acc.cell(_params(k=k), False, None)
        else:
            acc.bulk(VERDICT_VACUOUS, hi - lo + 1)
        return
    _emit(
        acc, opts, lo, hi, kstar,
        conclude=lambda k: cyc.length >= 2 * k,
        params_of=lambda k: _params(k=k),
        witness_of=lambda k: cyc.vertices,
    )


def _eval_dirac_fan(ctx, opts, acc):
    n = ctx.n
    lo, hi = _k_range(opts, 1, n - 1)
    if lo > hi or n < 2:
        return
    kappa_star = _scan_kstar(lo, hi, lambda k: ctx.connectivity_at_least(k))
    full = frozenset(range(n))
    for v in range(n):
        targets = full - {v}
        _emit(
            acc, opts, lo, hi, kappa_star,
            conclude=lambda k, v=v, targets=targets: (
                max_disjoint_paths_to_set(ctx.g, v, targets) >= k
            ),
            params_of=lambda k, v=v: _params(k=k, v=v),
        )


CLAIMS: dict[str, Callable] = {
    "dirac_fan": _eval_dirac_fan,
    "main": _eval_main,
    "eg": _eval_eg,
    "bondy_jackson": _eval_bondy_jackson,
    "alpha": _eval_alpha,
    "woodall": _eval_woodall,
    "blw": _eval_blw,
    "dirac": _eval_dirac,
    "one_exception": _eval_one_exception,
    "sigma": _eval_sigma,
    "indep_path": _eval_indep_path,
    "fournier_fraisse": _eval_fournier_fraisse,
    "bermond": _eval_bermond,
    "bermond_count": _eval_bermond_count,
    "hj": _eval_hj,
    "fan": _eval_fan,
    "fan_cycle": _eval_fan_cycle,
}


@dataclass
class SweepResult:
    claim: str
    graphs: int = 0
    counts: Counter = field(default_factory=Counter)
    counterexamples: list[VerificationReport] = field(default_factory=list)
    parse_errors: list[tuple[int, str]] = field(default_factory=list)

    @property
    def instances(self) -> int:
        return sum(self.counts.values())

    @property
    def exit_code(self) -> int:
        return 1 if self.counterexamples else 0

    def summary(self) -> str:
        return (
            f"claim={self.claim} graphs={self.graphs} instances={self.instances}"
            f" pass={self.counts.get(VERDICT_PASS, 0)}"
            f" vacuous={self.counts.get(VERDICT_VACUOUS, 0)}"
            f" counterexamples={self.counts.get(VERDICT_COUNTEREXAMPLE, 0)}"
            f" refused={self.counts.get(VERDICT_REFUSED, 0)}"
            f" parse_errors={len(self.parse_errors)}"
        )

    def merge(self, other: "SweepResult") -> None:
        self.graphs += other.graphs
        self.counts.update(other.counts)
        self.counterexamples.extend(other.counterexamples)
        self.parse_errors.extend(other.parse_errors)


def _sweep_graphs(
    items: Iterable[tuple[int, str | Graph]],
    claim: str,
    opts: SweepOptions,
    on_report=None,
) -> SweepResult:
    evaluate = CLAIMS[claim]
    result = SweepResult(claim=claim)
    for lineno, item in items:
        if isinstance(item, Graph):
            g = item
            line = serialize_graph6(g)
        else:
            try:
                g = parse_graph6(item)
            except (Graph6Error, ValueError) as exc:
                result.parse_errors.append((lineno, str(exc)))
                continue
            line = item.strip()
            if line.startswith(">>graph6<<"):
                line = line[len(">>graph6<<"):]
        result.graphs += 1
        ctx = GraphContext(g, graph6=line)
        acc = _Acc(claim, line, result.counts, result.counterexamples, on_report)
        evaluate(ctx, opts, acc)
    return result


def _sweep_chunk(args) -> SweepResult:
    items, claim, opts = args
    return _sweep_graphs(items, claim, opts)


def sweep(
    source: Iterable[str | Graph],
    claim: str,
    opts: SweepOptions | None = None,
    workers: int = 1,
    on_report=None,
) -> SweepResult:
    """Run one claim's checker across a graph stream.

    ``source`` yields graph6 lines (comments and blanks are skipped) or
    Graph values.  Parse failures are recorded with their line numbers
    and the sweep continues.  Reports stream to ``on_report`` when given;
    counterexample reports are always collected.  With ``workers > 1``
    graphs are distributed over a process pool and results are merged in
    input order, so output is deterministic either way.
    """
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; known: {sorted(CLAIMS)}")
    opts = opts or SweepOptions()
    items: list[tuple[int, str | Graph]] = []
    for lineno, item in _enumerate_source(source):
        items.append((lineno, item))
    if workers <= 1 or on_report is not None or len(items) < 2 * workers:
        return _sweep_graphs(items, claim, opts, on_report)
    import multiprocessing as mp

    chunk = max(1, (len(items) + workers * 8 - 1) // (workers * 8))
    batches = [
        (items[i: i + chunk], claim, opts) for i in range(0, len(items), chunk)
    ]
    result = SweepResult(claim=claim)
    with mp.Pool(workers) as pool:
        for part in pool.imap(_sweep_chunk, batches):
            result.merge(part)
    return result


def _enumerate_source(source):
    lineno = 0
    for item in source:
        lineno += 1
        if isinstance(item, Graph):
            yield lineno, item
        else:
            text = item.strip()
            if not text or text.startswith("#"):
                continue
            yield lineno, text


# ---------------------------------------------------------------------------
# Single-instance dispatch (used by the CLI)


def run_single_check(g: Graph, claim: str, params: dict, witness: bool = False):
    """Dispatch one checker call from a loose parameter dict."""
    need = lambda key: params[key] if key in params else _missing(claim, key)
    if claim == "main":
        return check_main(g, need("x"), need("y"), need("k"), witness=witness)
    if claim == "eg":
        return check_eg_classic(g, need("x"), need("y"), need("k"), witness=witness)
    if claim == "bondy_jackson":
        return check_bondy_jackson(g, need("x"), need("y"), need("k"), witness=witness)
    if claim == "alpha":
        return check_conj_alpha(
            g, need("x"), need("y"), need("k"), need("alpha"), witness=witness
        )
    if claim == "woodall":
        return check_woodall(g, need("k"), witness=witness)
    if claim == "blw":
        return check_blw(g, need("k"), witness=witness)
    if claim == "dirac":
        return check_dirac(g, need("k"), witness=witness)
    if claim == "one_exception":
        return check_one_exception(g, need("k"), witness=witness)
    if claim == "sigma":
        return check_sigma(g, need("k"), need("s"), witness=witness)
    if claim == "indep_path":
        return check_independent_path(
            g, need("x"), need("y"), need("k"), need("s"), witness=witness
        )
    if claim == "fournier_fraisse":
        return check_fournier_fraisse(g, need("s"), need("m"), witness=witness)
    if claim == "bermond":
        labeling = params.get("labeling") or ascending_degree_labeling(g)
        return check_bermond(g, labeling, need("c"), witness=witness)
    if claim == "hj":
        return check_conj_hj(g, need("k"), witness=witness)
    if claim == "dirac_fan":
        targets = params.get("targets")
        if targets is None:
            targets = frozenset(range(g.n)) - {need("v")}
        return check_dirac_fan(g, need("v"), targets, need("k"), witness=witness)
    if claim == "fan_cycle":
        return check_fan_cycle(g, need("k"), witness=witness)
    if claim == "fan":
        cyc = longest_cycle(g)
        if cyc is None or cyc.length == g.n:
            raise ValueError("no cycle-complement component to build a fan from")
        comps = cycle_components(g, cyc)
        return check_fan_theorem(g, cyc, comps[0], need("k"), witness=witness)
    raise ValueError(f"unknown claim {claim!r}")


def _missing(claim, key):
    raise ValueError(f"claim {claim!r} requires parameter {key!r}")
