"""Constructive side: explicit fractional factors or certified infeasibility.

A fractional (g,f)-factor is found as an integral feasible flow on the
bipartite double cover of G. Each vertex x gets a left copy x' and a right
copy x''; each edge {u,v} becomes the unit arcs u'->v'' and v'->u''. The
source feeds x' and x'' drains into the sink, both within [g(x), f(x)].
Halving the flow carried by the two images of an edge gives h(e), so every
returned value lies in {0, 1/2, 1}.

Infeasible instances are certified by the first negative pair of an
exhaustive scan, which never looks at the flow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .conditions import DEFAULT_MAX_PAIRS, Witness, deficiency_frac, scan_minimal_witness
from .flow import FlowNetwork
from .graph import (
    EdgeSubgraph,
    FactorError,
    FuncLike,
    Graph,
    VertexFunc,
    VertexSet,
    as_func,
    as_subgraph,
    remove_edges,
)

__all__ = [
    "FractionalFactor",
    "SolveOutcome",
    "InconsistencyError",
    "find_factor",
    "solve_fractional_factor",
    "complement_func",
    "solve_including",
]


class InconsistencyError(RuntimeError):
    """The flow and the exhaustive deficiency scan disagree (an internal bug)."""


@dataclass(frozen=True)
class FractionalFactor:
    host: Graph
    h: tuple[Fraction, ...]

    @property
    def support(self) -> tuple[int, ...]:
        """Edge positions with ``h(e) > 0``."""
        return tuple(i for i, w in enumerate(self.h) if w > 0)

    def weighted_degrees(self) -> tuple[Fraction, ...]:
        deg = [Fraction(0)] * self.host.n
        for (u, v), w in zip(self.host.edges, self.h):
            deg[u] += w
            deg[v] += w
        return tuple(deg)

    def violations(self, lower: FuncLike, upper: FuncLike) -> list[str]:
        """Human-readable list of broken constraints; empty when valid."""
        problems = []
        if len(self.h) != self.host.m:
            problems.append(f"{len(self.h)} weights for {self.host.m} edges")
            return problems
        for i, w in enumerate(self.h):
            if not 0 <= w <= 1:
                problems.append(f"h{self.host.edges[i]} = {w} outside [0,1]")
        for x, s in enumerate(self.weighted_degrees()):
            if not lower[x] <= s <= upper[x]:
                problems.append(f"vertex {x}: weighted degree {s} outside [{lower[x]}, {upper[x]}]")
        return problems

    def to_dict(self) -> dict:
        return {"edges": [{"u": u, "v": v, "h": [w.numerator, w.denominator]}
                          for (u, v), w in zip(self.host.edges, self.h)]}


@dataclass(frozen=True)
class SolveOutcome:
    """Exactly one of ``factor`` / ``witness`` is set.

    ``graph``, ``lower`` and ``upper`` describe the instance the witness
    refers to. For the subgraph-including solves this is the reduced
    instance on ``G - E(H)``, not the original graph.
    """

    graph: Graph
    lower: tuple[int, ...]
    upper: tuple[int, ...]
    factor: Optional[FractionalFactor] = None
    witness: Optional[Witness] = None
    route: str = "flow"

    @property
    def feasible(self) -> bool:
        return self.factor is not None


def find_factor(G: Graph, lower, upper) -> Optional[FractionalFactor]:
    """Half-integral h with ``lower <= sum h <= upper`` at each vertex, or None.

    Bounds may be arbitrary integers; a negative upper bound or a lower bound
    above the degree simply yields None.
    """
    n = G.n
    for x in range(n):
        if upper[x] < 0 or lower[x] > upper[x]:
            return None
    src, sink = 2 * n, 2 * n + 1
    net = FlowNetwork(2 * n + 2)
    big = sum(upper) + 1
    for x in range(n):
        lo = max(lower[x], 0)
        net.add_arc(src, x, lo, upper[x])
        net.add_arc(n + x, sink, lo, upper[x])
    images = []
    for u, v in G.edges:
        images.append((net.add_arc(u, n + v, 0, 1), net.add_arc(v, n + u, 0, 1)))
    net.add_arc(sink, src, 0, big)
    flow = net.feasible_flow()
    if flow is None:
        return None
    return FractionalFactor(G, tuple(Fraction(flow[a] + flow[b], 2) for a, b in images))


def _outcome(G: Graph, lower, upper, max_pairs, route="flow") -> SolveOutcome:
    lower, upper = tuple(lower), tuple(upper)
    factor = find_factor(G, lower, upper)
    if factor is not None:
        bad = factor.violations(lower, upper)
        if bad:
            raise InconsistencyError("flow produced an invalid factor: " + "; ".join(bad))
        return SolveOutcome(G, lower, upper, factor=factor, route=route)
    witness = scan_minimal_witness(G, lower, upper, max_pairs)
    if witness is None:
        raise InconsistencyError("flow reports infeasible but no pair has negative deficiency")
    return SolveOutcome(G, lower, upper, witness=witness, route=route)


def solve_fractional_factor(G: Graph, g: FuncLike, f: FuncLike,
                            max_pairs: Optional[int] = DEFAULT_MAX_PAIRS) -> SolveOutcome:
    """Explicit fractional (g,f)-factor, or the minimal negative-deficiency pair.

    Only the witness search is subject to ``max_pairs``; the flow solve is
    polynomial.
    """
    g = as_func(g, G, "g")
    f = as_func(f, G, "f")
    for x in range(G.n):
        if g[x] > f[x]:
            raise FactorError(f"g({x}) = {g[x]} exceeds f({x}) = {f[x]}")
    return _outcome(G, g.values, f.values, max_pairs)


def complement_func(G: Graph, r: FuncLike) -> VertexFunc:
    """``x -> d_G(x) - r(x)``."""
    r = as_func(r, G, "r")
    out = []
    for x in range(G.n):
        if r[x] > G.degrees[x]:
            raise FactorError(f"r({x}) = {r[x]} exceeds d_G({x}) = {G.degrees[x]}")
        out.append(G.degrees[x] - r[x])
    return VertexFunc(tuple(out), "r'")


def solve_including(G: Graph, r: FuncLike, H: EdgeSubgraph | None = None,
                    route: str = "direct",
                    max_pairs: Optional[int] = DEFAULT_MAX_PAIRS) -> SolveOutcome:
    """Fractional r-factor of G with ``h(e) = 1`` on every edge of H.

    ``route="direct"`` solves the exact (r - d_H)-factor problem on
    ``G - E(H)``. ``route="complement"`` solves the exact r'-factor problem
    on ``G - E(H)`` with ``r' = d_G - r`` and maps each weight w to 1 - w.
    Both lift by setting ``h = 1`` on E(H). A vertex with ``r < d_H`` gives
    an immediate one-vertex witness on the reduced instance.
    """
    r = as_func(r, G, "r")
    H = as_subgraph(G, H)
    reduced = remove_edges(G, H)
    dH = H.degrees
    if route == "direct":
        bound = tuple(r[x] - dH[x] for x in range(G.n))
    elif route == "complement":
        bound = complement_func(G, r).values
    else:
        raise FactorError(f"unknown route {route!r}")

    short = [x for x in range(G.n) if r[x] < dH[x]]
    if short:
        x = short[0]
        if route == "direct":
            S, T = VertexSet([x]), VertexSet()
        else:
            S, T = VertexSet(), VertexSet([x])
        w = Witness(S, T, _raw_deficiency(reduced, bound, bound, S, T))
        return SolveOutcome(reduced, bound, bound, witness=w, route=route)

    sub = _outcome(reduced, bound, bound, max_pairs, route)
    if sub.factor is None:
        return sub
    h = dict(zip(_positions(G, H), sub.factor.h))
    flip = route == "complement"
    lifted = []
    inH = set(H.indices)
    for i in range(G.m):
        if i in inH:
            lifted.append(Fraction(1))
        else:
            lifted.append(1 - h[i] if flip else h[i])
    return SolveOutcome(reduced, bound, bound, factor=FractionalFactor(G, tuple(lifted)),
                        route=route)


def _positions(G: Graph, H: EdgeSubgraph) -> list[int]:
    inH = set(H.indices)
    return [i for i in range(G.m) if i not in inH]


def _raw_deficiency(G: Graph, lower, upper, S, T) -> int:
    # deficiency_frac without the non-negativity checks on the bounds
    keep = ~sum(1 << x for x in S)
    adj = G.adjacency_masks
    return (sum(upper[x] for x in S) + sum((adj[y] & keep).bit_count() for y in T)
            - sum(lower[y] for y in T))


def witness_deficiency(outcome: SolveOutcome) -> int:
    """Recompute the witness deficiency on the outcome's instance."""
    w = outcome.witness
    if w is None:
        raise FactorError("outcome has no witness")
    if min(outcome.lower, default=0) >= 0 and all(
            a <= b for a, b in zip(outcome.lower, outcome.upper)):
        return deficiency_frac(outcome.graph, outcome.lower, outcome.upper, w.S, w.T)
    return _raw_deficiency(outcome.graph, outcome.lower, outcome.upper, w.S, w.T)
