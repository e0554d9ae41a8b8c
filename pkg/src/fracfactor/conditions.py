"""Deficiency functions and the Tutte-type condition checkers.

Every checker returns a :class:`CheckReport`. A failing report carries a
:class:`Witness` pair ``(S, T)`` whose deficiency can be recomputed from the
instance with :func:`deficiency_frac` or :func:`deficiency_all`.

Iteration order is fixed: S runs over vertex sets in (cardinality,
lexicographic) order; in the all-pairs modes T runs over subsets of V - S in
the same order for each S. The first negative pair in this order is the
witness, so reports do not depend on the kernel backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .graph import (
    EdgeSubgraph,
    FactorError,
    FuncLike,
    Graph,
    SetLike,
    VertexSet,
    _as_set,
    _require_disjoint,
    as_func,
    as_subgraph,
    deg_after_removal,
    edges_between,
    func_sum,
    members_of,
)

__all__ = [
    "GuardError",
    "DEFAULT_MAX_PAIRS",
    "Witness",
    "CheckReport",
    "deficiency_frac",
    "deficiency_all",
    "canonical_T",
    "check_exists",
    "check_all_including",
    "check_sufficient",
    "scan_minimal_witness",
]

# 3**14 pairs, about 4.8 million.
DEFAULT_MAX_PAIRS = 3**14


class GuardError(FactorError):
    """Instance too large for an exhaustive enumeration."""


@dataclass(frozen=True)
class Witness:
    S: VertexSet
    T: VertexSet
    deficiency: int

    def to_dict(self) -> dict:
        return {"S": list(self.S), "T": list(self.T), "deficiency": self.deficiency}


@dataclass(frozen=True)
class CheckReport:
    holds: bool
    mode: str
    witness: Optional[Witness] = None
    pairs_examined: int = 0
    r_examined: int = 0
    failing_r: Optional[tuple[int, ...]] = None


def _bounds(G: Graph, g: FuncLike, f: FuncLike, allow_zero: bool = True):
    g = as_func(g, G, "g")
    f = as_func(f, G, "f")
    for x in range(G.n):
        if g[x] > f[x]:
            raise FactorError(f"g({x}) = {g[x]} exceeds f({x}) = {f[x]}")
        if not allow_zero and g[x] < 1:
            raise FactorError(f"g({x}) = {g[x]} is not a positive integer")
    return g, f


def deficiency_frac(G: Graph, g: FuncLike, f: FuncLike, S: SetLike, T: SetLike) -> int:
    """``f(S) + d_{G-S}(T) - g(T)``; negative means no fractional (g,f)-factor."""
    g, f = _bounds(G, g, f)
    S, T = _as_set(S, G.n), _as_set(T, G.n)
    _require_disjoint(S, T)
    return func_sum(f, S) + deg_after_removal(G, S, T) - func_sum(g, T)


def deficiency_all(G: Graph, g: FuncLike, f: FuncLike, H: EdgeSubgraph | None,
                   S: SetLike, T: SetLike) -> int:
    """``g(S) + d_{G-S}(T) - f(T) - d_H(S) + e_H(S,T)``.

    Negative means G does not have all fractional (g,f)-factors including H.
    With an empty H this is the plain all-factors quantity.
    """
    g, f = _bounds(G, g, f)
    H = as_subgraph(G, H)
    S, T = _as_set(S, G.n), _as_set(T, G.n)
    _require_disjoint(S, T)
    return (func_sum(g, S) + deg_after_removal(G, S, T) - func_sum(f, T)
            - func_sum(H.degrees, S) + edges_between(H, S, T))


def canonical_T(G: Graph, phi: FuncLike, S: SetLike) -> VertexSet:
    """``{x not in S : d_{G-S}(x) < phi(x)}``."""
    phi = as_func(phi, G)
    S = _as_set(S, G.n)
    inS = set(S)
    return VertexSet(x for x in range(G.n)
                     if x not in inS and deg_after_removal(G, S, [x]) < phi[x])


# ---------------------------------------------------------------------------
# Scans


def _guard(count: int, max_pairs: Optional[int]) -> None:
    if max_pairs is not None and count > max_pairs:
        raise GuardError(f"enumeration of {count} pairs exceeds the guard of {max_pairs}")


def _run(kernel, G: Graph, hadj, a, b, mode: str) -> CheckReport:
    s, t, val, examined = kernel(G.n, G.adjacency_masks, hadj, a, b)
    if s < 0:
        return CheckReport(True, mode, None, examined)
    return CheckReport(False, mode, Witness(members_of(s), members_of(t), val), examined)


def scan_minimal_witness(G: Graph, lower: FuncLike, upper: FuncLike,
                         max_pairs: Optional[int] = DEFAULT_MAX_PAIRS) -> Optional[Witness]:
    """First disjoint pair with ``deficiency_frac < 0`` in the global pair order.

    No positivity or ``lower <= upper`` requirement; used to certify
    infeasibility of arbitrary bound vectors.
    """
    _guard(3**G.n, max_pairs)
    a = list(upper)
    b = list(lower)
    rep = _run(kernels.scan_pairs, G, (0,) * G.n, a, b, "thm2-pairs")
    return rep.witness


def check_exists(G: Graph, g: FuncLike, f: FuncLike, mode: str = "canonical",
                 allow_zero: bool = False,
                 max_pairs: Optional[int] = DEFAULT_MAX_PAIRS) -> CheckReport:
    """Decide whether G has a fractional (g,f)-factor.

    ``mode="canonical"`` tests every S with its canonical T (2**n sets);
    ``mode="full"`` tests every disjoint pair (3**n pairs) and reports the
    first violating pair.
    """
    g, f = _bounds(G, g, f, allow_zero)
    zero = (0,) * G.n
    if mode == "canonical":
        _guard(2**G.n, max_pairs)
        return _run(kernels.scan_min_t, G, zero, f.values, g.values, "thm1-canonical")
    if mode == "full":
        _guard(3**G.n, max_pairs)
        return _run(kernels.scan_pairs, G, zero, f.values, g.values, "thm2-pairs")
    raise FactorError(f"unknown mode {mode!r} for check_exists")


def check_all_including(G: Graph, g: FuncLike, f: FuncLike, H: EdgeSubgraph | None = None,
                        mode: str = "full", exhaustive: bool = False,
                        allow_zero: bool = False,
                        max_pairs: Optional[int] = DEFAULT_MAX_PAIRS) -> CheckReport:
    """Decide whether G has all fractional (g,f)-factors including H.

    ``mode="full"`` quantifies over all disjoint pairs. By default each S is
    paired with the T minimizing the deficiency,
    ``{x not in S : d_{G-S}(x) + e_H(S,{x}) < f(x)}``; with
    ``exhaustive=True`` every pair is evaluated literally.
    ``mode="canonical-no-H"`` requires an empty H and pairs each S with
    ``canonical_T(G, f, S)``.
    """
    g, f = _bounds(G, g, f, allow_zero)
    H = as_subgraph(G, H)
    a = [g[x] - H.degrees[x] for x in range(G.n)]
    if mode == "canonical-no-H":
        if len(H):
            raise FactorError("canonical-no-H mode requires an empty H")
        _guard(2**G.n, max_pairs)
        return _run(kernels.scan_min_t, G, (0,) * G.n, a, f.values, "thm3-canonical")
    if mode == "full":
        if exhaustive:
            _guard(3**G.n, max_pairs)
            return _run(kernels.scan_pairs, G, H.adjacency_masks, a, f.values, "thm4-pairs")
        _guard(2**G.n, max_pairs)
        return _run(kernels.scan_min_t, G, H.adjacency_masks, a, f.values, "thm4-fast")
    raise FactorError(f"unknown mode {mode!r} for check_all_including")


def check_sufficient(G: Graph, g: FuncLike, f: FuncLike,
                     H: EdgeSubgraph | None = None) -> CheckReport:
    """Pairwise degree test ``(g(x)-d_H(x)) d_G(y) >= (d_G(x)-d_H(x)) f(y)``.

    Requires ``d_H <= g <= f <= d_G`` at every vertex and raises
    :class:`FactorError` naming the first vertex where it fails. On failure
    the witness holds the first violating ordered pair as ``S={x}``,
    ``T={y}`` (possibly ``x == y``) with deficiency ``lhs - rhs``.
    """
    g = as_func(g, G, "g")
    f = as_func(f, G, "f")
    H = as_subgraph(G, H)
    d, dH = G.degrees, H.degrees
    for x in range(G.n):
        if dH[x] > g[x]:
            raise FactorError(f"hypothesis violated at vertex {x}: d_H = {dH[x]} > g = {g[x]}")
        if g[x] > f[x]:
            raise FactorError(f"hypothesis violated at vertex {x}: g = {g[x]} > f = {f[x]}")
        if f[x] > d[x]:
            raise FactorError(f"hypothesis violated at vertex {x}: f = {f[x]} > d_G = {d[x]}")
    mode = "thm5-pairwise" if len(H) else "cor6-pairwise"
    examined = 0
    for x in range(G.n):
        gx, dx = g[x] - dH[x], d[x] - dH[x]
        for y in range(G.n):
            examined += 1
            slack = gx * d[y] - dx * f[y]
            if slack < 0:
                return CheckReport(False, mode, Witness(VertexSet([x]), VertexSet([y]), slack),
                                   examined)
    return CheckReport(True, mode, None, examined)
