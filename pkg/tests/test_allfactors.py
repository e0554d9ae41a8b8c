from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracfactor.allfactors import all_factors_brute, enumerate_r, verify_equivalence
from fracfactor.conditions import GuardError
from fracfactor.graph import EdgeSubgraph, Graph
from fracfactor.solver import solve_including

from conftest import half_grid_feasible, sub


@st.composite
def boxes(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    G = Graph(n, tuple(edges))
    g, f = [], []
    for x in range(n):
        a = draw(st.integers(1, G.degrees[x] + 1))
        g.append(a)
        f.append(draw(st.integers(a, min(a + 2, G.degrees[x] + 2))))
    idx = draw(st.sets(st.integers(0, G.m - 1))) if G.m else set()
    return G, g, f, EdgeSubgraph(G, tuple(idx))


class TestEnumerateR:
    def test_square(self):
        assert [r.values for r in enumerate_r((1, 1), (2, 2))] == \
            [(1, 1), (1, 2), (2, 1), (2, 2)]

    def test_point(self):
        assert [r.values for r in enumerate_r((3, 1), (3, 1))] == [(3, 1)]

    def test_mixed(self):
        assert [r.values for r in enumerate_r((0, 1), (1, 1))] == [(0, 1), (1, 1)]

    def test_guard(self):
        with pytest.raises(GuardError):
            enumerate_r((0,) * 21, (1,) * 21)

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 2)), max_size=5))
    def test_count_and_bounds(self, spec):
        g = tuple(a for a, _ in spec)
        f = tuple(a + w for a, w in spec)
        rs = [r.values for r in enumerate_r(g, f)]
        assert len(rs) == prod(b - a + 1 for a, b in zip(g, f))
        assert rs == sorted(set(rs))
        assert all(all(a <= v <= b for a, v, b in zip(g, r, f)) for r in rs)


class TestBrute:
    def test_k2_single(self, K2):
        rep = all_factors_brute(K2, [1, 1], [1, 1])
        assert rep.holds and rep.r_examined == 1

    def test_k2_first_failing_r(self, K2):
        rep = all_factors_brute(K2, [1, 1], [2, 2])
        assert not rep.holds
        assert rep.failing_r == (1, 2)
        assert rep.witness.deficiency < 0

    def test_c4_box_against_grid(self, C4):
        H = sub(C4, (0, 1))
        rep = all_factors_brute(C4, [1] * 4, [2] * 4, H)
        expected = True
        for r in enumerate_r([1] * 4, [2] * 4):
            if half_grid_feasible(C4, r, r, forced=H.indices) is None:
                expected = False
                break
        assert rep.holds == expected
        assert rep.holds == verify_equivalence(C4, [1] * 4, [2] * 4, H).verdicts["thm4-fast"]

    def test_n_guard(self):
        with pytest.raises(GuardError):
            all_factors_brute(Graph(17, ()), [0] * 17, [0] * 17)

    @settings(max_examples=60)
    @given(boxes(max_n=4))
    def test_monotone_in_box(self, inst):
        G, g, f, H = inst
        if not all_factors_brute(G, g, f, H).holds:
            return
        g2 = [min(a + 1, b) for a, b in zip(g, f)]
        assert all_factors_brute(G, g2, f, H).holds
        f2 = [max(b - 1, a) for a, b in zip(g2, f)]
        assert all_factors_brute(G, g2, f2, H).holds

    @settings(max_examples=60)
    @given(boxes(max_n=5))
    def test_single_point_box(self, inst):
        G, g, _, H = inst
        assert all_factors_brute(G, g, g, H).holds == solve_including(G, g, H).feasible


class TestVerifyEquivalence:
    def test_k2_with_h(self, K2):
        rep = verify_equivalence(K2, [1, 1], [1, 1], EdgeSubgraph.full(K2))
        assert rep.agree and rep.verdicts["brute"]

    def test_star(self, star3):
        rep = verify_equivalence(star3, [1] * 4, [1] * 4)
        assert rep.agree and not rep.verdicts["brute"]
        assert "thm3-canonical" in rep.verdicts

    def test_k4(self, K4):
        rep = verify_equivalence(K4, [2] * 4, [3] * 4)
        assert rep.agree

    @settings(max_examples=150)
    @given(boxes())
    def test_random(self, inst):
        rep = verify_equivalence(*inst)
        assert rep.agree, rep.instance()
