"""Shared fixtures and independent oracles.

The oracles here work on plain Python sets and edge lists and never touch
the bitmask kernels or the flow solver.
"""

from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import settings

from fracfactor.graph import EdgeSubgraph, Graph

HALF = Fraction(1, 2)

# exact enumeration times vary with load; correctness is what the tests check
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


def labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def all_subsets(items):
    items = list(items)
    for k in range(len(items) + 1):
        yield from combinations(items, k)


def disjoint_pairs(n):
    for S in all_subsets(range(n)):
        rest = [x for x in range(n) if x not in S]
        for T in all_subsets(rest):
            yield set(S), set(T)


def degree_without(G, x, S):
    return sum(1 for u, v in G.edges if (u == x and v not in S) or (v == x and u not in S))


def ref_deficiency_frac(G, g, f, S, T):
    return sum(f[x] for x in S) + sum(degree_without(G, y, S) for y in T) - sum(g[y] for y in T)


def ref_deficiency_all(G, g, f, Hedges, S, T):
    dH = [0] * G.n
    for u, v in Hedges:
        dH[u] += 1
        dH[v] += 1
    eH = sum(1 for u, v in Hedges if (u in S and v in T) or (v in S and u in T))
    return (sum(g[x] for x in S) + sum(degree_without(G, y, S) for y in T)
            - sum(f[y] for y in T) - sum(dH[x] for x in S) + eH)


def half_grid_feasible(G, lower, upper, forced=()):
    """Search h in {0, 1/2, 1}^m (h = 1 on ``forced`` positions)."""
    forced = set(forced)
    free = [i for i in range(G.m) if i not in forced]
    for choice in product((0, HALF, 1), repeat=len(free)):
        h = [Fraction(1)] * G.m
        for i, w in zip(free, choice):
            h[i] = Fraction(w)
        deg = [Fraction(0)] * G.n
        for (u, v), w in zip(G.edges, h):
            deg[u] += w
            deg[v] += w
        if all(lower[x] <= deg[x] <= upper[x] for x in range(G.n)):
            return h
    return None


def replay_factor(G, h, lower, upper):
    assert len(h) == G.m
    deg = [Fraction(0)] * G.n
    for (u, v), w in zip(G.edges, h):
        assert 0 <= w <= 1
        assert w.denominator in (1, 2)
        deg[u] += w
        deg[v] += w
    return all(lower[x] <= deg[x] <= upper[x] for x in range(G.n))


@pytest.fixture
def K2():
    return Graph.complete(2)


@pytest.fixture
def K3():
    return Graph.complete(3)


@pytest.fixture
def K4():
    return Graph.complete(4)


@pytest.fixture
def C4():
    return Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))


@pytest.fixture
def C5():
    return Graph.cycle(5)


@pytest.fixture
def star3():
    return Graph.star(3)


def sub(G, *pairs):
    return EdgeSubgraph.from_edges(G, pairs)


def half_grid_feasible_np(G, lower, upper, forced=()):
    """Vectorized {0, 1/2, 1}^m search; weights are counted in halves."""
    import numpy as np

    forced = set(forced)
    free = [i for i in range(G.m) if i not in forced]
    base = np.zeros(G.n, dtype=np.int64)
    for i in forced:
        u, v = G.edges[i]
        base[u] += 2
        base[v] += 2
    k = len(free)
    grid = np.array(np.meshgrid(*([np.arange(3)] * k), indexing="ij")).reshape(k, -1).T \
        if k else np.zeros((1, 0), dtype=np.int64)
    inc = np.zeros((k, G.n), dtype=np.int64)
    for j, i in enumerate(free):
        u, v = G.edges[i]
        inc[j, u] = inc[j, v] = 1
    deg = grid @ inc + base
    lo = 2 * np.asarray(lower, dtype=np.int64)
    hi = 2 * np.asarray(upper, dtype=np.int64)
    return bool(np.any(np.all((deg >= lo) & (deg <= hi), axis=1)))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
