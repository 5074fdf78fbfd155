"""Brute-force reference answers for small graphs.

Deliberately shares nothing with :mod:`dynmwis.solver`: plain frozensets,
no reductions, no bounds.
"""

from __future__ import annotations

from .graph import DynamicGraph

MAX_ORACLE_VERTICES = 30


def brute_force_mwis(g: DynamicGraph) -> tuple[list[int], float]:
    """Exact maximum weight independent set by exhaustive include/exclude branching.

    Branches on a vertex of largest degree in the remaining graph; once no
    edges remain every remaining vertex is taken. Among optimal sets the one
    whose sorted vertex tuple is lexicographically smallest is returned.
    """
    if g.n > MAX_ORACLE_VERTICES:
        raise ValueError(f"oracle refuses graphs with more than {MAX_ORACLE_VERTICES} vertices (got {g.n})")
    adj = g.adj
    w = g.weights

    def key(weight, chosen):
        # max() over this key: heavier first, then lexicographically smaller.
        return weight, [-v for v in chosen] + [1]

    def best(avail: frozenset, chosen: tuple):
        top, top_deg = None, 0
        for v in sorted(avail):
            d = len(adj[v] & avail)
            if d > top_deg:
                top, top_deg = v, d
        if top is None:
            base = sorted(chosen + tuple(v for v in avail if w[v] > 0))
            if base:
                hi = base[-1]
                base = sorted(base + [v for v in avail if w[v] == 0 and v < hi])
            return sum(w[v] for v in base), base
        without = best(avail - {top}, chosen)
        with_top = best(avail - adj[top] - {top}, chosen + (top,))
        return max(without, with_top, key=lambda r: key(*r))

    chosen, weight = best(frozenset(range(g.n)), ())[::-1]
    return chosen, weight


def alpha(g: DynamicGraph):
    """Weight of a maximum weight independent set."""
    return brute_force_mwis(g)[1]


def verify_independent(g: DynamicGraph, vertices) -> bool:
    s = set(vertices)
    return not any(g.adj[v] & s for v in s)


def verify_maximal(g: DynamicGraph, vertices, ignore=()) -> bool:
    """Independent and not extendable by any vertex outside ``ignore``."""
    s = set(vertices)
    if not verify_independent(g, s):
        return False
    skip = set(ignore)
    return all(v in s or v in skip or g.adj[v] & s for v in range(g.n))
