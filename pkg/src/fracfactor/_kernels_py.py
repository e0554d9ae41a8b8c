"""Pure-Python enumeration kernels (fallback for the compiled ``_kernels``).

Both kernels evaluate, for disjoint vertex masks S and T,

    value(S, T) = sum_{x in S} a[x]
                + sum_{x in T} (|adj[x] & ~S| + |hadj[x] & S| - b[x])

and return the first pair with a negative value, scanning S in
(cardinality, lexicographic) order and, for ``scan_pairs``, T in the same
order over V - S. The return value is ``(s_mask, t_mask, value, examined)``
with ``s_mask == -1`` when no negative pair exists.
"""

from itertools import combinations


def _per_vertex(n, adj, hadj, b, smask):
    rest = []
    cost = []
    notS = ~smask
    for x in range(n):
        if not (smask >> x) & 1:
            rest.append(x)
            cost.append((adj[x] & notS).bit_count() + (hadj[x] & smask).bit_count() - b[x])
    return rest, cost


def scan_pairs(n, adj, hadj, a, b):
    examined = 0
    for ks in range(n + 1):
        for S in combinations(range(n), ks):
            smask = 0
            base = 0
            for x in S:
                smask |= 1 << x
                base += a[x]
            rest, cost = _per_vertex(n, adj, hadj, b, smask)
            nr = len(rest)
            for kt in range(nr + 1):
                for T in combinations(range(nr), kt):
                    examined += 1
                    val = base
                    for i in T:
                        val += cost[i]
                    if val < 0:
                        tmask = 0
                        for i in T:
                            tmask |= 1 << rest[i]
                        return smask, tmask, val, examined
    return -1, 0, 0, examined


def scan_min_t(n, adj, hadj, a, b):
    examined = 0
    for ks in range(n + 1):
        for S in combinations(range(n), ks):
            smask = 0
            val = 0
            for x in S:
                smask |= 1 << x
                val += a[x]
            rest, cost = _per_vertex(n, adj, hadj, b, smask)
            examined += 1
            tmask = 0
            for x, c in zip(rest, cost):
                if c < 0:
                    tmask |= 1 << x
                    val += c
            if val < 0:
                return smask, tmask, val, examined
    return -1, 0, 0, examined
