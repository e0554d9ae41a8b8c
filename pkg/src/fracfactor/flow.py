"""Exact integer max-flow (Dinic) and feasible flow under lower bounds."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    """Directed network with integer capacities and optional lower bounds.

    Arcs are added with :meth:`add_arc`; :meth:`feasible_flow` then either
    returns the flow on every added arc (in insertion order) meeting all
    bounds and conservation at every node, or ``None``.
    """

    def __init__(self, nodes: int):
        self.nodes = nodes
        self._arcs: list[tuple[int, int, int, int]] = []

    def add_arc(self, u: int, v: int, lo: int, hi: int) -> int:
        if lo > hi:
            raise ValueError(f"arc {u}->{v} has lower bound {lo} above capacity {hi}")
        self._arcs.append((u, v, lo, hi))
        return len(self._arcs) - 1

    def feasible_flow(self) -> list[int] | None:
        n = self.nodes
        ss, tt = n, n + 1
        mf = _Dinic(n + 2)
        excess = [0] * n
        handles = []
        for u, v, lo, hi in self._arcs:
            handles.append(mf.add(u, v, hi - lo))
            excess[v] += lo
            excess[u] -= lo
        need = 0
        for x, e in enumerate(excess):
            if e > 0:
                mf.add(ss, x, e)
                need += e
            elif e < 0:
                mf.add(x, tt, -e)
        if mf.max_flow(ss, tt) != need:
            return None
        return [lo + mf.flow(h) for h, (_, _, lo, _) in zip(handles, self._arcs)]


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int) -> int:
        i = len(self.to)
        self.to += [v, u]
        self.cap += [c, 0]
        self.head[u].append(i)
        self.head[v].append(i + 1)
        return i

    def flow(self, i: int) -> int:
        return self.cap[i ^ 1]

    def _bfs(self, s: int, t: int) -> bool:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        self.level = level
        return level[t] >= 0

    def _dfs(self, u: int, t: int, pushed: int) -> int:
        if u == t:
            return pushed
        head, to, cap, level, it = self.head[u], self.to, self.cap, self.level, self.it
        while it[u] < len(head):
            i = head[it[u]]
            v = to[i]
            if cap[i] > 0 and level[v] == level[u] + 1:
                got = self._dfs(v, t, min(pushed, cap[i]))
                if got:
                    cap[i] -= got
                    cap[i ^ 1] += got
                    return got
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        inf = sum(self.cap) + 1
        while self._bfs(s, t):
            self.it = [0] * self.n
            while True:
                got = self._dfs(s, t, inf)
                if not got:
                    break
                total += got
        return total
