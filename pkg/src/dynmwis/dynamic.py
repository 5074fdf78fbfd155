"""Fully dynamic maintenance of a maximal (weight) independent set.

:class:`DynamicOne` applies a greedy repair after every edge update and,
when the greedy step could not add a vertex, carves a bounded subproblem
around the update, solves it exactly and swaps in the result if it is
strictly heavier.
"""

from __future__ import annotations

import logging
import math
import random
import time
from dataclasses import asdict, dataclass, field, replace

from .explorer import build_subproblem
from .graph import DynamicGraph
from .greedy import VARIANTS
from .solution import Solution, SolutionError
from .solver import improves, solve_mwis

log = logging.getLogger(__name__)

INSERT = "insert"
DELETE = "delete"


@dataclass(frozen=True)
class Config:
    mode: str = "cardinality"
    depth: int = 10
    nu_max: int = 2500
    delta: float = 1.25
    pinch: bool = True
    prune: bool = True
    rare: bool = False
    rare_x: int = 3
    t_limit: float | None = 10.0
    seed: int = 0
    greedy: str = "deggreedy"
    # False runs the greedy rule alone (the Greedy / DegGreedy baselines).
    explore: bool = True

    def __post_init__(self):
        if self.mode not in ("cardinality", "weighted"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.depth < 0:
            raise ValueError(f"depth must be >= 0, got {self.depth}")
        if self.nu_max < 1:
            raise ValueError(f"nu_max must be >= 1, got {self.nu_max}")
        if self.delta <= 1:
            raise ValueError(f"delta must be > 1, got {self.delta}")
        if self.rare_x < 1:
            raise ValueError(f"rare_x must be >= 1, got {self.rare_x}")
        if self.greedy not in VARIANTS:
            raise ValueError(f"unknown greedy variant {self.greedy!r}")
        if self.t_limit is not None and self.t_limit <= 0:
            raise ValueError(f"t_limit must be positive, got {self.t_limit}")

    def with_(self, **changes) -> "Config":
        return replace(self, **changes)


PRESETS = {
    "greedy": Config(greedy="greedy", explore=False),
    "deggreedy": Config(greedy="deggreedy", explore=False),
    "one-strong": Config(depth=10, nu_max=2500, pinch=True, prune=True, rare=False),
    "one-fast": Config(depth=10, nu_max=200, pinch=True, prune=True, rare=True, rare_x=3),
}


def preset(name: str, **changes) -> Config:
    try:
        cfg = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    return cfg.with_(**changes) if changes else cfg


def exhaustive_config(n: int, **changes) -> Config:
    """Whole-component subproblems on every update with an untimed solver."""
    return Config(depth=max(n, 0), nu_max=max(n, 1), pinch=False, prune=False, rare=False,
                  t_limit=None).with_(**changes)


@dataclass
class UpdateStats:
    update_index: int
    kind: str
    greedy_added: bool
    solved: bool
    solver_optimal: bool
    weight: float
    cardinality: int
    elapsed: float

    def row(self) -> dict:
        d = asdict(self)
        d["elapsed_ns"] = int(round(d.pop("elapsed") * 1e9))
        return d


class DynamicOne:
    """Dynamic independent set state: graph, solution, config and counters.

    Parameters
    ----------
    graph : DynamicGraph
        Initial graph; mutated in place by the update handlers.
    config : Config
    solution : Solution, optional
        Starting maximal independent set. Defaults to ``I = V`` on an
        edgeless graph and to a min-degree greedy set otherwise.
    """

    def __init__(self, graph: DynamicGraph, config: Config | None = None, solution: Solution | None = None):
        self.config = config or Config()
        if self.config.mode == "cardinality":
            graph.weights = [1] * graph.n
        self.graph = graph
        if solution is None:
            solution = Solution.all_vertices(graph) if graph.m == 0 else Solution.greedy(graph)
        self.solution = solution
        self.rng = random.Random(self.config.seed)
        self._greedy_insert, self._greedy_delete = VARIANTS[self.config.greedy]
        self.updates = 0
        self.obsolete = 0
        self.candidates = 0
        self.solves = 0
        self.improvements = 0
        self.timeouts = 0

    # -- expensive path -------------------------------------------------------

    def _wants_solve(self, greedy_added: bool) -> bool:
        cfg = self.config
        if not cfg.explore or (cfg.prune and greedy_added):
            return False
        if not cfg.rare:
            return True
        self.candidates += 1
        return self.candidates % cfg.rare_x == 0

    def explore(self, seeds) -> tuple[bool, bool]:
        """Build, solve and apply one subproblem; returns ``(solved, optimal)``."""
        cfg = self.config
        g, sol = self.graph, self.solution
        sub = build_subproblem(g, sol, seeds, cfg.depth, cfg.nu_max, cfg.delta, cfg.pinch)
        if sub is None:
            return False, False
        res = solve_mwis(sub, cfg.t_limit)
        self.solves += 1
        if not res.proven_optimal:
            self.timeouts += 1
        if improves(res, sub):
            self.improvements += 1
            freed = sol.replace_region(sub.vertices, [sub.to_global[i] for i in res.set])
            self._sweep(sub.vertices, freed)
        return True, res.proven_optimal

    def _sweep(self, region, extra=()) -> None:
        g, sol = self.graph, self.solution
        cand = set(region)
        cand.update(extra)
        for v in region:
            cand.update(g.adj[v])
        for v in sorted(cand):
            if sol.can_be_independent(v):
                sol.add_vertex(v)

    # -- edge updates -----------------------------------------------------------

    def _stats(self, kind, greedy_added, solved, optimal, start) -> UpdateStats:
        return UpdateStats(
            update_index=self.updates,
            kind=kind,
            greedy_added=greedy_added,
            solved=solved,
            solver_optimal=optimal,
            weight=self.solution.weight,
            cardinality=self.solution.cardinality,
            elapsed=time.perf_counter() - start,
        )

    def handle_insertion(self, u: int, v: int) -> UpdateStats | None:
        """Insert ``{u, v}``; returns ``None`` for an obsolete update (loop or duplicate)."""
        start = time.perf_counter()
        if u == v or not self.solution.insert_edge(u, v):
            self.obsolete += 1
            return None
        self.updates += 1
        out = self._greedy_insert(self.solution, u, v, self.rng)
        solved = optimal = False
        if self._wants_solve(out.added_any):
            solved, optimal = self.explore([u, v])
        return self._stats(INSERT, out.added_any, solved, optimal, start)

    def handle_deletion(self, u: int, v: int) -> UpdateStats | None:
        """Delete ``{u, v}``; returns ``None`` if the edge does not exist."""
        start = time.perf_counter()
        if u == v or not self.solution.delete_edge(u, v):
            self.obsolete += 1
            return None
        self.updates += 1
        out = self._greedy_delete(self.solution, u, v, self.rng)
        solved = optimal = False
        if self._wants_solve(out.added_any):
            solved, optimal = self.explore([u, v])
        return self._stats(DELETE, out.added_any, solved, optimal, start)

    def apply(self, kind: str, u: int, v: int) -> UpdateStats | None:
        if kind in (INSERT, "i"):
            return self.handle_insertion(u, v)
        if kind in (DELETE, "d"):
            return self.handle_deletion(u, v)
        raise ValueError(f"unknown update kind {kind!r}")

    # -- node updates -------------------------------------------------------

    def handle_node_insertion(self, u: int, edges, weight=None) -> UpdateStats:
        """(Re)activate the isolated vertex ``u`` with the given incident edges.

        Edges go in one by one with greedy conflict repair, then a single
        subproblem seeded at ``u`` is solved.
        """
        start = time.perf_counter()
        g, sol = self.graph, self.solution
        if g.adj[u]:
            raise ValueError(f"vertex {u} is not isolated")
        sol.barred.discard(u)
        if weight is not None and self.config.mode == "weighted":
            sol.reweight(u, weight)
        if sol.can_be_independent(u):
            sol.add_vertex(u)
        added = False
        for x in edges:
            if x == u or not sol.insert_edge(u, x):
                continue
            out = self._greedy_insert(sol, u, x, self.rng)
            added |= out.added_any
        self.updates += 1
        solved = optimal = False
        if edges and self.config.explore:
            solved, optimal = self.explore([u])
        self._sweep([u])
        return self._stats(INSERT, added, solved, optimal, start)

    def handle_node_deletion(self, u: int) -> UpdateStats:
        """Isolate ``u`` and bar it from the solution, then solve one
        subproblem seeded at its former neighbors."""
        start = time.perf_counter()
        g, sol = self.graph, self.solution
        if u in sol.barred:
            raise ValueError(f"vertex {u} is already deleted")
        former = sorted(g.adj[u])
        if sol.in_set[u]:
            sol.remove_vertex(u)
        sol.barred.add(u)
        added = False
        for x in former:
            sol.delete_edge(u, x)
            out = self._greedy_delete(sol, u, x, self.rng)
            added |= out.added_any
        self.updates += 1
        solved = optimal = False
        if former and self.config.explore:
            solved, optimal = self.explore(former)
        self._sweep(former)
        return self._stats(DELETE, added, solved, optimal, start)

    def check(self) -> None:
        """Assert independence, maximality and exact bookkeeping."""
        self.graph.check_invariants()
        self.solution.audit()
        sol = self.solution
        free = [v for v in range(self.graph.n) if sol.can_be_independent(v)]
        assert not free, f"solution is not maximal; addable vertices {free[:10]}"


def run_sequence(graph: DynamicGraph, events, config: Config | None = None, audit_every: int = 0):
    """Replay ``events`` (``(kind, u, v)`` triples) and return ``(state, stats)``.

    Obsolete events are skipped and counted in ``state.obsolete``. With
    ``audit_every=k`` the full invariant audit runs after every k-th applied
    update.
    """
    state = DynamicOne(graph, config)
    stats = []
    for i, (kind, u, v) in enumerate(events):
        try:
            row = state.apply(kind, u, v)
        except (IndexError, ValueError, SolutionError) as exc:
            raise ValueError(f"event {i} ({kind} {u} {v}): {exc}") from exc
        if row is None:
            continue
        stats.append(row)
        if audit_every and len(stats) % audit_every == 0:
            state.check()
    if state.timeouts:
        log.info("%d of %d local solves hit the time limit", state.timeouts, state.solves)
    return state, stats


def total_time(stats) -> float:
    return math.fsum(s.elapsed for s in stats)
