from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from fracfactor.conditions import check_exists, deficiency_frac
from fracfactor.flow import FlowNetwork
from fracfactor.graph import EdgeSubgraph, FactorError, Graph, VertexSet, remove_edges
from fracfactor.solver import (
    complement_func,
    find_factor,
    solve_fractional_factor,
    solve_including,
    witness_deficiency,
)

from conftest import half_grid_feasible, replay_factor, sub

HALF = Fraction(1, 2)


@st.composite
def instances(draw, max_n=6, lo=0):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    G = Graph(n, tuple(edges))
    g, f = [], []
    for x in range(n):
        a = draw(st.integers(lo, G.degrees[x] + 1))
        g.append(a)
        f.append(draw(st.integers(a, G.degrees[x] + 1)))
    return G, g, f


@st.composite
def including_instances(draw, max_n=6):
    G, _, _ = draw(instances(max_n))
    idx = draw(st.sets(st.integers(0, G.m - 1))) if G.m else set()
    H = EdgeSubgraph(G, tuple(idx))
    r = [draw(st.integers(H.degrees[x], G.degrees[x])) for x in range(G.n)]
    return G, r, H


def lp_feasible(G, lower, upper):
    """Independent LP feasibility oracle (HiGHS)."""
    if G.m == 0:
        return all(lo <= 0 <= hi for lo, hi in zip(lower, upper))
    A = np.zeros((G.n, G.m))
    for i, (u, v) in enumerate(G.edges):
        A[u, i] = A[v, i] = 1
    res = linprog(np.zeros(G.m), A_ub=np.vstack([A, -A]),
                  b_ub=np.concatenate([upper, -np.asarray(lower)]),
                  bounds=[(0, 1)] * G.m, method="highs")
    return res.status == 0


class TestFlowNetwork:
    def test_lower_bounds_respected(self):
        net = FlowNetwork(3)
        a = net.add_arc(0, 1, 2, 5)
        b = net.add_arc(1, 2, 0, 3)
        c = net.add_arc(2, 0, 0, 10)
        flow = net.feasible_flow()
        assert flow[a] == flow[b] == flow[c]
        assert 2 <= flow[a] <= 3

    def test_infeasible(self):
        net = FlowNetwork(2)
        net.add_arc(0, 1, 3, 4)
        net.add_arc(1, 0, 0, 2)
        assert net.feasible_flow() is None


class TestSolveFractionalFactor:
    def test_k2(self, K2):
        out = solve_fractional_factor(K2, [1, 1], [1, 1])
        assert out.factor.h == (1,)

    def test_c5_half(self, C5):
        out = solve_fractional_factor(C5, [1] * 5, [1] * 5)
        assert out.factor.h == (HALF,) * 5
        assert out.factor.support == tuple(range(5))

    def test_star_witness(self, star3):
        out = solve_fractional_factor(star3, [1] * 4, [1] * 4)
        assert not out.feasible
        assert (out.witness.S, out.witness.T, out.witness.deficiency) == ((0,), (1, 2), -1)

    def test_rejects_inverted_bounds(self, K2):
        with pytest.raises(FactorError):
            solve_fractional_factor(K2, [2, 1], [1, 1])

    def test_feasibility_not_guarded(self):
        G = Graph.cycle(30)
        out = solve_fractional_factor(G, [1] * 30, [2] * 30, max_pairs=10)
        assert out.feasible

    @settings(max_examples=200)
    @given(instances())
    def test_agrees_with_theorem_and_replays(self, inst):
        G, g, f = inst
        out = solve_fractional_factor(G, g, f)
        assert out.feasible == check_exists(G, g, f, "full", allow_zero=True).holds
        if out.feasible:
            assert replay_factor(G, out.factor.h, g, f)
        else:
            assert deficiency_frac(G, g, f, out.witness.S, out.witness.T) < 0

    @settings(max_examples=150)
    @given(instances(max_n=7))
    def test_agrees_with_lp(self, inst):
        G, g, f = inst
        assert solve_fractional_factor(G, g, f).feasible == lp_feasible(G, g, f)

    @settings(max_examples=80)
    @given(instances(max_n=5))
    def test_half_grid(self, inst):
        G, g, f = inst
        if G.m > 8:
            return
        assert solve_fractional_factor(G, g, f).feasible == \
            (half_grid_feasible(G, g, f) is not None)


class TestComplement:
    def test_examples(self, C4, K3, star3):
        assert complement_func(C4, [1] * 4).values == (1, 1, 1, 1)
        assert complement_func(K3, [2] * 3).values == (0, 0, 0)
        assert complement_func(star3, [1] * 4).values == (2, 0, 0, 0)

    def test_error(self, K2):
        with pytest.raises(FactorError):
            complement_func(K2, [2, 0])

    @given(instances())
    def test_involution(self, inst):
        G, _, _ = inst
        r = [d // 2 for d in G.degrees]
        assert complement_func(G, complement_func(G, r)).values == tuple(r)


class TestSolveIncluding:
    def test_c4_unique(self, C4):
        H = sub(C4, (0, 1))
        for route in ("direct", "complement"):
            out = solve_including(C4, [1] * 4, H, route)
            h = dict(zip(C4.edges, out.factor.h))
            assert h == {(0, 1): 1, (2, 3): 1, (1, 2): 0, (0, 3): 0}

    def test_c4_unique_by_grid(self, C4):
        # the grid search finds exactly one solution
        H = sub(C4, (0, 1))
        from itertools import product
        sols = []
        for h in product((0, HALF, 1), repeat=3):
            full = (Fraction(1),) + tuple(Fraction(w) for w in h)
            if replay_factor(C4, full, [1] * 4, [1] * 4):
                sols.append(full)
        assert sols == [(1, 0, 1, 0)]

    def test_path_infeasible(self):
        P = Graph.path(3)
        out = solve_including(P, [1] * 3, sub(P, (0, 1)), "direct")
        assert not out.feasible
        assert (out.witness.S, out.witness.T, out.witness.deficiency) == ((1,), (2,), -1)
        assert out.graph == Graph(3, ((1, 2),))
        comp = solve_including(P, [1] * 3, sub(P, (0, 1)), "complement")
        assert not comp.feasible
        assert witness_deficiency(comp) < 0

    def test_k2_h_is_factor(self, K2):
        out = solve_including(K2, [1, 1], EdgeSubgraph.full(K2))
        assert out.factor.h == (1,)

    def test_degenerate_vertex(self, K3):
        H = sub(K3, (0, 1), (0, 2))
        for route in ("direct", "complement"):
            out = solve_including(K3, [1, 1, 1], H, route)
            assert not out.feasible
            assert witness_deficiency(out) < 0
            assert set(out.witness.S) | set(out.witness.T) == {0}

    def test_complement_precondition(self, K2):
        with pytest.raises(FactorError):
            solve_including(K2, [2, 2], None, "complement")

    @settings(max_examples=200)
    @given(including_instances())
    def test_routes_agree(self, inst):
        G, r, H = inst
        direct = solve_including(G, r, H, "direct")
        comp = solve_including(G, r, H, "complement")
        bound = [r[x] - H.degrees[x] for x in range(G.n)]
        plain = solve_fractional_factor(remove_edges(G, H), bound, bound)
        assert direct.feasible == comp.feasible == plain.feasible
        for out in (direct, comp):
            if out.feasible:
                assert all(out.factor.h[i] == 1 for i in H.indices)
                assert replay_factor(G, out.factor.h, r, r)
            else:
                assert witness_deficiency(out) < 0


def test_find_factor_handles_odd_bounds():
    G = Graph.path(2)
    assert find_factor(G, [0, 0], [-1, 1]) is None
    assert find_factor(G, [2, 0], [2, 1]) is None
    assert find_factor(G, [1, 1], [1, 1]).h == (1,)
