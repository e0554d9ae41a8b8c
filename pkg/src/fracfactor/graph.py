"""Graphs, vertex functions, edge subgraphs and the set arithmetic on them.

Vertices are the integers ``0..n-1``. Sets of vertices are kept as
:class:`VertexSet` (a sorted tuple) at the API boundary and as integer
bitmasks inside the enumeration kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

__all__ = [
    "FactorError",
    "ParseError",
    "Graph",
    "VertexFunc",
    "EdgeSubgraph",
    "VertexSet",
    "parse_graph",
    "parse_vertex_func",
    "parse_subgraph",
    "func_sum",
    "edges_between",
    "deg_after_removal",
    "remove_edges",
    "mask_of",
    "members_of",
]


class FactorError(ValueError):
    """Base class for invalid input to any operation of the package."""


class ParseError(FactorError):
    """Malformed input file; ``line`` is 1-based (0 when not line specific)."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line else message)


class VertexSet(tuple):
    """Sorted, duplicate-free tuple of vertex ids.

    Ordered first by cardinality, then lexicographically. This order is the
    tie-break for every witness the package reports.
    """

    def __new__(cls, members: Iterable[int] = ()):
        items = sorted(set(int(x) for x in members))
        if items and items[0] < 0:
            raise FactorError(f"negative vertex id {items[0]}")
        return super().__new__(cls, items)

    def _key(self):
        return (len(self), tuple(self))

    def __lt__(self, other):
        return self._key() < VertexSet(other)._key()

    def __le__(self, other):
        return self._key() <= VertexSet(other)._key()

    def __gt__(self, other):
        return self._key() > VertexSet(other)._key()

    def __ge__(self, other):
        return self._key() >= VertexSet(other)._key()

    def __eq__(self, other):
        return tuple(self) == tuple(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return tuple.__hash__(self)

    def __repr__(self):
        return "{" + ", ".join(map(str, self)) + "}"

    @property
    def mask(self) -> int:
        return mask_of(self)

    def check(self, n: int) -> "VertexSet":
        if self and self[-1] >= n:
            raise FactorError(f"vertex {self[-1]} out of range for n={n}")
        return self


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for x in members:
        m |= 1 << x
    return m


def members_of(mask: int) -> VertexSet:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return VertexSet(out)


SetLike = Union[VertexSet, Iterable[int]]


def _as_set(S: SetLike, n: int) -> VertexSet:
    if not isinstance(S, VertexSet):
        S = VertexSet(S)
    return S.check(n)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``edges`` keeps the given order; each pair is stored as ``(min, max)``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise FactorError(f"negative vertex count {self.n}")
        norm = []
        seen = set()
        for e in self.edges:
            u, v = (int(e[0]), int(e[1]))
            if u == v:
                raise FactorError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise FactorError(f"edge ({u},{v}) has endpoint out of range for n={self.n}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise FactorError(f"duplicate edge {pair}")
            seen.add(pair)
            norm.append(pair)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, x: int) -> int:
        return self.degrees[x]

    def incident(self, x: int) -> list[int]:
        """Edge positions incident with ``x`` (the set E(x))."""
        return [i for i, (u, v) in enumerate(self.edges) if u == x or v == x]

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, tuple((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))

    def to_text(self) -> str:
        lines = [f"p {self.n} {self.m}"]
        lines += [f"e {u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VertexFunc:
    """Non-negative integer function on the vertices.

    ``role`` is a free-form tag (``"g"``, ``"f"``, ``"r"`` ...) used only in
    messages.
    """

    values: tuple[int, ...]
    role: str = ""

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        for x, v in enumerate(vals):
            if v < 0:
                raise FactorError(f"{self.role or 'function'}({x}) = {v} is negative")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, x):
        return self.values[x]

    def __iter__(self):
        return iter(self.values)

    @classmethod
    def constant(cls, n: int, value: int, role: str = "") -> "VertexFunc":
        return cls((value,) * n, role)

    def check(self, G: Graph) -> "VertexFunc":
        if len(self.values) != G.n:
            raise FactorError(
                f"{self.role or 'function'} has {len(self.values)} values, graph has {G.n} vertices")
        return self

    def to_text(self) -> str:
        return "".join(f"{x} {v}\n" for x, v in enumerate(self.values))


FuncLike = Union[VertexFunc, Sequence[int]]


def as_func(phi: FuncLike, G: Graph | None = None, role: str = "") -> VertexFunc:
    if not isinstance(phi, VertexFunc):
        phi = VertexFunc(tuple(phi), role)
    if G is not None:
        phi.check(G)
    return phi


@dataclass(frozen=True)
class EdgeSubgraph:
    """Subgraph H of a host graph, stored as positions into ``host.edges``."""

    host: Graph
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        idx = sorted(set(int(i) for i in self.indices))
        if len(idx) != len(self.indices):
            raise FactorError("duplicate edge index in subgraph")
        for i in idx:
            if not 0 <= i < self.host.m:
                raise FactorError(f"edge index {i} out of range for host with {self.host.m} edges")
        object.__setattr__(self, "indices", tuple(idx))

    @classmethod
    def from_edges(cls, host: Graph, pairs: Iterable[tuple[int, int]]) -> "EdgeSubgraph":
        idx = []
        for u, v in pairs:
            key = (u, v) if u < v else (v, u)
            if key not in host.edge_index:
                raise FactorError(f"edge ({u},{v}) is not an edge of the graph")
            idx.append(host.edge_index[key])
        return cls(host, tuple(idx))

    @classmethod
    def empty(cls, host: Graph) -> "EdgeSubgraph":
        return cls(host, ())

    @classmethod
    def full(cls, host: Graph) -> "EdgeSubgraph":
        return cls(host, tuple(range(host.m)))

    @property
    def n(self) -> int:
        return self.host.n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.host.edges[i] for i in self.indices)

    def __len__(self):
        return len(self.indices)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.host.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        adj = [0] * self.host.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def to_text(self) -> str:
        return "".join(f"e {u} {v}\n" for u, v in self.edges)


def as_subgraph(G: Graph, H: EdgeSubgraph | None) -> EdgeSubgraph:
    if H is None:
        return EdgeSubgraph.empty(G)
    if H.host != G:
        raise FactorError("subgraph belongs to a different host graph")
    return H


# ---------------------------------------------------------------------------
# Parsing


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {tok!r}") from None


def parse_graph(text: str) -> Graph:
    """Parse ``p <n> <m>`` followed by exactly ``m`` lines ``e <u> <v>``."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, toks in _content_lines(text):
        if toks[0] == "p":
            if n is not None:
                raise ParseError(lineno, "second problem line")
            if len(toks) != 3:
                raise ParseError(lineno, "problem line must be 'p <n> <m>'")
            n, m = _int(toks[1], lineno), _int(toks[2], lineno)
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative vertex or edge count")
        elif toks[0] == "e":
            if n is None:
                raise ParseError(lineno, "edge line before problem line")
            if len(toks) != 3:
                raise ParseError(lineno, "edge line must be 'e <u> <v>'")
            u, v = _int(toks[1], lineno), _int(toks[2], lineno)
            if u == v:
                raise ParseError(lineno, f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"endpoint out of range in edge ({u},{v})")
            if u > v:
                raise ParseError(lineno, f"edge ({u},{v}) must be written with u < v")
            if (u, v) in seen:
                raise ParseError(lineno, f"duplicate edge ({u},{v})")
            seen.add((u, v))
            edges.append((u, v))
        else:
            raise ParseError(lineno, f"unknown line type {toks[0]!r}")
    if n is None:
        raise ParseError(0, "missing problem line 'p <n> <m>'")
    if len(edges) != m:
        raise ParseError(0, f"problem line declares {m} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def parse_vertex_func(text: str, G: Graph, role: str = "") -> VertexFunc:
    """Parse one ``<vertex> <value>`` line per vertex of ``G``."""
    values: list[int | None] = [None] * G.n
    for lineno, toks in _content_lines(text):
        if len(toks) != 2:
            raise ParseError(lineno, "expected '<vertex> <value>'")
        x, val = _int(toks[0], lineno), _int(toks[1], lineno)
        if not 0 <= x < G.n:
            raise ParseError(lineno, f"vertex {x} out of range for n={G.n}")
        if values[x] is not None:
            raise ParseError(lineno, f"duplicate vertex {x}")
        if val < 0:
            raise ParseError(lineno, f"negative value {val} at vertex {x}")
        values[x] = val
    missing = [x for x, v in enumerate(values) if v is None]
    if missing:
        raise ParseError(0, f"vertex {missing[0]} uncovered")
    return VertexFunc(tuple(values), role)  # type: ignore[arg-type]


def parse_subgraph(text: str, G: Graph) -> EdgeSubgraph:
    """Parse zero or more ``e <u> <v>`` lines naming edges of ``G``."""
    idx: list[int] = []
    seen: set[int] = set()
    for lineno, toks in _content_lines(text):
        if toks[0] != "e" or len(toks) != 3:
            raise ParseError(lineno, "expected 'e <u> <v>'")
        u, v = _int(toks[1], lineno), _int(toks[2], lineno)
        key = (u, v) if u < v else (v, u)
        i = G.edge_index.get(key)
        if i is None:
            raise ParseError(lineno, f"no such edge ({u},{v}) in graph")
        if i in seen:
            raise ParseError(lineno, f"duplicate edge ({u},{v})")
        seen.add(i)
        idx.append(i)
    return EdgeSubgraph(G, tuple(idx))


# ---------------------------------------------------------------------------
# Set arithmetic


def func_sum(phi: FuncLike, S: SetLike) -> int:
    """Sum of ``phi`` over ``S``; zero on the empty set."""
    vals = phi.values if isinstance(phi, VertexFunc) else tuple(phi)
    S = _as_set(S, len(vals))
    return sum(vals[x] for x in S)


def _require_disjoint(S: VertexSet, T: VertexSet) -> None:
    common = set(S) & set(T)
    if common:
        raise FactorError(f"S and T share vertex {min(common)}")


def edges_between(E: Graph | EdgeSubgraph, S: SetLike, T: SetLike) -> int:
    """Number of edges of ``E`` with one end in ``S`` and the other in ``T``."""
    S, T = _as_set(S, E.n), _as_set(T, E.n)
    _require_disjoint(S, T)
    adj = E.adjacency_masks
    tmask = mask_of(T)
    return sum(bin(adj[x] & tmask).count("1") for x in S)


def deg_after_removal(G: Graph, S: SetLike, T: SetLike) -> int:
    """Sum over ``T`` of the degrees in ``G - S``."""
    S, T = _as_set(S, G.n), _as_set(T, G.n)
    _require_disjoint(S, T)
    keep = ~mask_of(S)
    adj = G.adjacency_masks
    return sum(bin(adj[x] & keep).count("1") for x in T)


def remove_edges(G: Graph, H: EdgeSubgraph) -> Graph:
    """``G - E(H)``: same vertices, edges of ``H`` dropped, order preserved."""
    H = as_subgraph(G, H)
    drop = set(H.indices)
    return Graph(G.n, tuple(e for i, e in enumerate(G.edges) if i not in drop))
