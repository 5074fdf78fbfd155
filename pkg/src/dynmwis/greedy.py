"""Cheap repair rules applied right after an edge update.

Both rules expect the edge to be already inserted into (or deleted from) the
graph through :meth:`Solution.insert_edge` / :meth:`Solution.delete_edge`, so
the solution-neighbor counts see the new adjacency.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import DynamicGraph
from .solution import Solution


@dataclass
class GreedyOutcome:
    removed: int | None = None
    added: list[int] = field(default_factory=list)

    @property
    def added_any(self) -> bool:
        return bool(self.added)


def phi(g: DynamicGraph, v: int):
    """``w(v) / w(N(v))``, or ``math.inf`` when the neighborhood weighs nothing."""
    wn = g.weight_of_neighborhood(v)
    if wn == 0:
        return math.inf
    return Fraction(g.weights[v]) / Fraction(wn)


def _compare_phi(g: DynamicGraph, a: int, b: int) -> int:
    # Cross-multiplied so equal ratios compare equal without float noise.
    wa, wb = g.weights[a], g.weights[b]
    na, nb = g.weight_of_neighborhood(a), g.weight_of_neighborhood(b)
    if na == 0 or nb == 0:
        return (na == 0) - (nb == 0)
    lhs, rhs = wa * nb, wb * na
    return (lhs > rhs) - (lhs < rhs)


def _pick(u: int, v: int, cmp: int, rng: random.Random) -> int:
    if cmp < 0:
        return u
    if cmp > 0:
        return v
    return u if rng.random() < 0.5 else v


def _resolve_conflict(sol: Solution, victim: int) -> GreedyOutcome:
    sol.remove_vertex(victim)
    out = GreedyOutcome(removed=victim)
    for x in sorted(sol.graph.adj[victim]):
        if sol.can_be_independent(x):
            sol.add_vertex(x)
            out.added.append(x)
    return out


def _add_endpoints(sol: Solution, u: int, v: int) -> GreedyOutcome:
    out = GreedyOutcome()
    for x in (u, v):
        if sol.can_be_independent(x):
            sol.add_vertex(x)
            out.added.append(x)
    return out


def deg_greedy_insert(sol: Solution, u: int, v: int, rng: random.Random | None = None) -> GreedyOutcome:
    """Resolve a conflict on ``{u, v}`` by dropping the endpoint with smaller
    ``w(x)/w(N(x))`` (random on ties), then re-adding freed neighbors of it in
    ascending id order."""
    if not (sol.in_set[u] and sol.in_set[v]):
        return GreedyOutcome()
    rng = rng or random.Random(0)
    victim = _pick(u, v, _compare_phi(sol.graph, u, v), rng)
    return _resolve_conflict(sol, victim)


def deg_greedy_delete(sol: Solution, u: int, v: int, rng: random.Random | None = None) -> GreedyOutcome:
    return _add_endpoints(sol, u, v)


def greedy_insert(sol: Solution, u: int, v: int, rng: random.Random | None = None) -> GreedyOutcome:
    """Like :func:`deg_greedy_insert` but drops the lighter endpoint."""
    if not (sol.in_set[u] and sol.in_set[v]):
        return GreedyOutcome()
    rng = rng or random.Random(0)
    w = sol.graph.weights
    cmp = (w[u] > w[v]) - (w[u] < w[v])
    return _resolve_conflict(sol, _pick(u, v, cmp, rng))


greedy_delete = deg_greedy_delete

VARIANTS = {
    "deggreedy": (deg_greedy_insert, deg_greedy_delete),
    "greedy": (greedy_insert, greedy_delete),
}
