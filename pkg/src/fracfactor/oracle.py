"""Seeded instance generation and cross-check search.

Randomness comes from SplitMix64 (Steele, Lea and Flood 2014): the state is
advanced by the constant 0x9E3779B97F4A7C15 and each output is the state
passed through the finalizer::

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

all modulo 2**64. Bounded integers use rejection sampling, so every stream
is reproducible bit for bit from the seed in any language.

Trial ``i`` of a search with seed ``s`` uses the stream seeded with
``mix(s ^ mix(i + 1))``; check ``c`` within the trial uses
``mix(trial_seed ^ mix(CHECK_INDEX[c] + 1 + 2**32))``. Selecting a subset of
checks therefore never changes the instances seen by the others.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .allfactors import verify_equivalence
from .conditions import (
    DEFAULT_MAX_PAIRS,
    GuardError,
    check_all_including,
    check_exists,
    check_sufficient,
)
from .graph import EdgeSubgraph, FactorError, Graph, VertexFunc, remove_edges
from .solver import solve_fractional_factor, solve_including

__all__ = [
    "SplitMix64",
    "mix64",
    "CHECKS",
    "RULES",
    "SearchConfig",
    "Discrepancy",
    "SearchSummary",
    "random_graph",
    "random_instance",
    "search_counterexample",
    "replay_check",
]

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next()
            if v < limit:
                return v % bound

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p: Fraction) -> bool:
        if p <= 0:
            return False
        if p >= 1:
            return True
        return self.below(p.denominator) < p.numerator


def _fraction(p) -> Fraction:
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise FactorError(f"probability {p} outside [0,1]")
    return p


def random_graph(n: int, p, seed: int) -> Graph:
    """G(n, p): each pair u < v, in lexicographic order, kept with probability p."""
    p = _fraction(p)
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.chance(p)]
    return Graph(n, tuple(edges))


# Bound rules: how (g, f, H) are drawn for a graph.
#   positive    H empty, 1 <= g <= f <= max(d_G, 1)
#   loose       H random, 1 <= g <= f <= d_G + 1, f - g <= 1
#   thm5        H random, d_H <= g <= f <= d_G (g >= 1 when d_G >= 1, else g = f = 0);
#               f is steered toward the pairwise degree condition half the time
#   cor6        as thm5 with H empty
#   uniform-r   H random, g = f = r with d_H <= r <= d_G
RULES = ("positive", "loose", "thm5", "cor6", "uniform-r")


def _random_h(G: Graph, rng: SplitMix64) -> EdgeSubgraph:
    return EdgeSubgraph(G, tuple(i for i in range(G.m) if rng.below(3) == 0))


def random_instance(G: Graph, rule: str, seed: int) -> tuple[VertexFunc, VertexFunc, EdgeSubgraph]:
    if rule not in RULES:
        raise FactorError(f"unknown bounds rule {rule!r}")
    rng = SplitMix64(seed)
    d = G.degrees
    n = G.n
    if rule in ("positive", "cor6"):
        H = EdgeSubgraph.empty(G)
    else:
        H = _random_h(G, rng)
    dH = H.degrees
    g = [0] * n
    f = [0] * n
    if rule == "positive":
        for x in range(n):
            g[x] = rng.between(1, max(d[x], 1))
            f[x] = rng.between(g[x], max(d[x], 1))
    elif rule == "loose":
        for x in range(n):
            g[x] = rng.between(1, d[x] + 1)
            f[x] = min(g[x] + rng.below(2), d[x] + 1)
    elif rule == "uniform-r":
        for x in range(n):
            g[x] = f[x] = rng.between(dH[x], d[x])
    else:
        # steered draws aim g at a common fraction of the free degree so the
        # pairwise degree condition holds often enough to test the implication
        steer = rng.below(2) == 0
        target = Fraction(rng.between(1, 4), 4)
        for x in range(n):
            if d[x] == 0:
                continue
            if steer:
                want = math.ceil(dH[x] + target * (d[x] - dH[x]))
                g[x] = min(max(want, dH[x], 1), d[x])
            else:
                g[x] = rng.between(max(dH[x], 1), d[x])
        # largest ratio f(y)/d(y) the pairwise condition allows
        ratio = Fraction(1)
        for x in range(n):
            if d[x] > dH[x]:
                ratio = min(ratio, Fraction(g[x] - dH[x], d[x] - dH[x]))
        for x in range(n):
            if d[x] == 0:
                continue
            top = d[x]
            if steer:
                top = max(g[x], min(d[x], math.floor(ratio * d[x])))
            f[x] = rng.between(g[x], top)
    for x in range(n):
        assert g[x] <= f[x], (rule, x)
        if rule in ("thm5", "cor6", "uniform-r"):
            assert dH[x] <= g[x] <= f[x] <= d[x], (rule, x)
    return VertexFunc(tuple(g), "g"), VertexFunc(tuple(f), "f"), H


# ---------------------------------------------------------------------------
# Checks

CHECKS = ("thm1-thm2", "thm4-brute", "thm5-implies-thm4", "routes-agree",
          "cor6-specialization", "solver-thm2")
CHECK_INDEX = {name: i for i, name in enumerate(CHECKS)}
DEFAULT_RULE = {
    "thm1-thm2": "positive",
    "solver-thm2": "positive",
    "thm4-brute": "loose",
    "thm5-implies-thm4": "thm5",
    "cor6-specialization": "cor6",
    "routes-agree": "uniform-r",
}


def replay_check(check: str, G: Graph, g, f, H: EdgeSubgraph,
                 max_pairs: Optional[int] = DEFAULT_MAX_PAIRS) -> tuple[bool, dict, bool]:
    """Run one cross-check; returns ``(consistent, verdicts, premise_held)``.

    ``premise_held`` is meaningful for the implication checks only: it says
    whether the pairwise degree condition held, i.e. whether the instance
    actually tested the implication.
    """
    if check == "thm1-thm2":
        a = check_exists(G, g, f, "canonical", max_pairs=max_pairs).holds
        b = check_exists(G, g, f, "full", max_pairs=max_pairs).holds
        return a == b, {"thm1-canonical": a, "thm2-pairs": b}, True
    if check == "solver-thm2":
        out = solve_fractional_factor(G, g, f, max_pairs=max_pairs)
        b = check_exists(G, g, f, "full", max_pairs=max_pairs).holds
        return out.feasible == b, {"solver": out.feasible, "thm2-pairs": b}, True
    if check == "thm4-brute":
        rep = verify_equivalence(G, g, f, H, max_pairs=max_pairs)
        return rep.agree, dict(rep.verdicts), True
    if check in ("thm5-implies-thm4", "cor6-specialization"):
        suff = check_sufficient(G, g, f, H).holds
        full = check_all_including(G, g, f, H, "full", allow_zero=True, max_pairs=max_pairs).holds
        verdicts = {"sufficient": suff, "thm4-fast": full}
        ok = full or not suff
        if check == "cor6-specialization":
            canon = check_all_including(G, g, f, H, "canonical-no-H", allow_zero=True,
                                        max_pairs=max_pairs).holds
            verdicts["thm3-canonical"] = canon
            ok = ok and canon == full
        return ok, verdicts, suff
    if check == "routes-agree":
        direct = solve_including(G, g, H, "direct", max_pairs).feasible
        comp = solve_including(G, g, H, "complement", max_pairs).feasible
        bound = [g[x] - H.degrees[x] for x in range(G.n)]
        plain = solve_fractional_factor(remove_edges(G, H), bound, bound, max_pairs).feasible
        return direct == comp == plain, {"direct": direct, "complement": comp,
                                         "reduced": plain}, True
    raise FactorError(f"unknown check {check!r}")


@dataclass(frozen=True)
class SearchConfig:
    n_min: int = 1
    n_max: int = 6
    edge_probability: Fraction = Fraction(1, 2)
    trials: int = 100
    seed: int = 0
    checks: tuple[str, ...] = CHECKS
    rules: dict = field(default_factory=dict)
    max_pairs: Optional[int] = DEFAULT_MAX_PAIRS

    def __post_init__(self):
        object.__setattr__(self, "edge_probability", _fraction(self.edge_probability))
        if not 0 <= self.n_min <= self.n_max:
            raise FactorError(f"bad vertex range [{self.n_min}, {self.n_max}]")
        if self.trials < 0:
            raise FactorError("negative trial count")
        for c in self.checks:
            if c not in CHECK_INDEX:
                raise FactorError(f"unknown check {c!r}")
        for c, r in self.rules.items():
            if c not in CHECK_INDEX or r not in RULES:
                raise FactorError(f"bad rule override {c!r} -> {r!r}")

    def rule_for(self, check: str) -> str:
        return self.rules.get(check, DEFAULT_RULE[check])


@dataclass(frozen=True)
class Discrepancy:
    seed: int
    trial: int
    check: str
    graph: Graph
    g: tuple[int, ...]
    f: tuple[int, ...]
    H: tuple[tuple[int, int], ...]
    verdicts: dict

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trial": self.trial,
            "check": self.check,
            "instance": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges],
                         "g": list(self.g), "f": list(self.f), "H": [list(e) for e in self.H]},
            "verdicts": dict(sorted(self.verdicts.items())),
        }


@dataclass(frozen=True)
class SearchSummary:
    trials: int
    checked: int
    skipped: int
    premise_held: dict
    discrepancy: Optional[Discrepancy] = None

    @property
    def found(self) -> bool:
        return self.discrepancy is not None


def trial_seed(seed: int, trial: int) -> int:
    return mix64(seed ^ mix64(trial + 1))


def check_seed(tseed: int, check: str) -> int:
    return mix64(tseed ^ mix64(CHECK_INDEX[check] + 1 + (1 << 32)))


def trial_instance(config: SearchConfig, trial: int, check: str):
    """Regenerate the graph and instance a given trial used for ``check``."""
    tseed = trial_seed(config.seed, trial)
    rng = SplitMix64(tseed)
    n = rng.between(config.n_min, config.n_max)
    G = random_graph(n, config.edge_probability, rng.next())
    g, f, H = random_instance(G, config.rule_for(check), check_seed(tseed, check))
    return G, g, f, H


def search_counterexample(config: SearchConfig) -> SearchSummary:
    """Run the selected cross-checks; stop at the first inconsistency.

    A trial counts as skipped when any of its checks hits an enumeration
    guard. The reported discrepancy is the one with the lowest trial index.
    """
    checked = skipped = 0
    premise = {c: 0 for c in config.checks}
    order = sorted(config.checks, key=CHECK_INDEX.__getitem__)
    for trial in range(config.trials):
        try:
            results = []
            for check in order:
                G, g, f, H = trial_instance(config, trial, check)
                ok, verdicts, held = replay_check(check, G, g, f, H, config.max_pairs)
                results.append((check, G, g, f, H, ok, verdicts, held))
        except GuardError:
            skipped += 1
            continue
        checked += 1
        for check, G, g, f, H, ok, verdicts, held in results:
            if held:
                premise[check] += 1
            if not ok:
                bad = Discrepancy(config.seed, trial, check, G, g.values, f.values, H.edges,
                                  verdicts)
                return SearchSummary(trial + 1, checked, skipped, premise, bad)
    return SearchSummary(config.trials, checked, skipped, premise)
