"""Exact anytime maximum weight independent set solver for small graphs.

Branch-and-reduce over Python-int bitsets. Reductions applied at every
search node:

* neighborhood removal -- ``w(v) >= w(N(v))`` puts ``v`` in the solution
  (covers isolated vertices);
* pendant folding -- a degree-1 vertex lighter than its neighbor is removed
  and its weight is subtracted from the neighbor;
* degree-2 folding -- a degree-2 vertex at least as heavy as each of its two
  non-adjacent neighbors is merged with them into one vertex;
* weighted domination -- if ``N[u]`` is contained in ``N[v]`` and
  ``w(u) >= w(v)``, ``v`` can be dropped.

The remaining graph is split into connected components that are solved
independently; otherwise the search branches on the vertex maximizing
``w(N(v)) - w(v)`` (exclude first, then include) and prunes with a greedy
weighted clique cover.
"""

from __future__ import annotations

import math
import sys
import threading
import time
from dataclasses import dataclass

from .graph import DynamicGraph

CHECK_EVERY = 1024
LARGE_MASK = 128
REDUCTIONS = frozenset({"removal", "pendant", "fold2", "domination"})


@dataclass
class SolverResult:
    set: list[int]
    weight: float
    proven_optimal: bool
    nodes_explored: int
    elapsed: float


def _bits(m: int) -> list[int]:
    """Indices of the set bits of ``m`` in ascending order."""
    if m.bit_count() <= 12:
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out
    return [i for i, c in enumerate(bin(m)[:1:-1]) if c == "1"]


class _BranchAndReduce:
    def __init__(self, adj, weights, deadline, reductions=REDUCTIONS, clique_cover_limit=512):
        unknown = set(reductions) - REDUCTIONS
        if unknown:
            raise ValueError(f"unknown reductions {sorted(unknown)}; choose from {sorted(REDUCTIONS)}")
        self.nb = [sum(1 << x for x in row) for row in adj]
        self.w = list(weights)
        # With unit weights every reduction keeps all weights at 1 (pendants
        # are always removed outright and a degree-2 fold yields 1 + 1 - 1),
        # so neighborhood weights are plain popcounts.
        self.unit = all(x == 1 for x in self.w)
        self.deadline = deadline
        self.removal = "removal" in reductions
        self.pendant = "pendant" in reductions
        self.fold = "fold2" in reductions
        self.domination = "domination" in reductions
        self.clique_cover_limit = clique_cover_limit
        self.nodes = 0
        self.timed_out = False

    def _tick(self, mask: int) -> None:
        self.nodes += 1
        if self.deadline is None or self.timed_out:
            return
        # Big nodes are expensive enough to poll the clock on their own.
        if self.nodes % CHECK_EVERY == 0 or mask.bit_count() >= LARGE_MASK:
            if time.perf_counter() >= self.deadline:
                self.timed_out = True

    # -- reductions -------------------------------------------------------

    def _near(self, removed, mask):
        """Vertices of ``mask`` within two hops of ``removed``; the only ones
        whose reduction status can change when ``removed`` leaves the graph."""
        nb = self.nb
        one = 0
        for x in _bits(removed):
            one |= nb[x]
        one &= mask
        two = one
        for x in _bits(one):
            two |= nb[x]
        return two & mask

    def _reduce(self, mask, dirty):
        """Apply the reductions to a fixpoint, starting from ``dirty``.

        Returns ``(mask, taken, offset, folds, trail)``: the reduced vertex
        set, vertices forced into the solution, their weight plus folding
        offsets, the fold records for :meth:`_unfold`, and the undo trail of
        ``(is_adjacency, vertex, old value)`` entries for :meth:`_restore`.
        """
        nb, w = self.nb, self.w
        unit = self.unit
        taken = 0
        offset = 0
        folds = []
        trail = []
        queue = _bits(dirty & mask)
        queued = dirty & mask
        while queue:
            v = queue.pop()
            vb = 1 << v
            queued &= ~vb
            if not mask & vb:
                continue
            nv = nb[v] & mask
            if unit:
                wn = nv.bit_count()
            else:
                wn = 0
                for x in _bits(nv):
                    wn += w[x]
            if w[v] >= wn and (self.removal or not nv):
                taken |= vb
                offset += w[v]
                mask &= ~(nv | vb)
                removed = nv | vb
            elif self.pendant and nv and nv & (nv - 1) == 0 and w[v] < wn:
                # Pendant lighter than its neighbor u: either u is taken, or
                # v is and u is not; keep u with weight w(u) - w(v).
                u = nv.bit_length() - 1
                trail.append((False, u, w[u]))
                w[u] -= w[v]
                offset += w[v]
                folds.append((v, u))
                mask &= ~vb
                removed = vb
            elif self.fold and nv.bit_count() == 2 and self._fold2(v, nv, mask, trail, folds):
                # v now stands for {a, b}; see _fold2.
                offset += trail[-1][2]
                mask &= ~nv
                removed = nv | vb
            elif self.domination and self._dominated(v, nv, mask):
                mask &= ~vb
                removed = vb
            else:
                continue
            touched = self._near(removed, mask) & ~queued
            queued |= touched
            queue.extend(_bits(touched))
        return mask, taken, offset, folds, trail

    def _dominated(self, v, nv, mask):
        nb, w = self.nb, self.w
        closed = nv | (1 << v)
        for u in _bits(nv):
            if w[u] >= w[v] and nb[u] & mask & ~closed == 0:
                return True
        return False

    def _fold2(self, v, nv, mask, trail, folds):
        """Fold a degree-2 vertex ``v`` with non-adjacent neighbors ``a, b``.

        Requires ``max(w(a), w(b)) <= w(v) < w(a) + w(b)``. Some optimum then
        holds either ``v`` or both ``a`` and ``b``, so ``{v, a, b}`` becomes a
        single vertex (reusing id ``v``) of weight ``w(a) + w(b) - w(v)``
        adjacent to ``N(a) | N(b)``. The last trail entry holds the old
        ``w(v)``, which the caller adds to the offset.
        """
        nb, w = self.nb, self.w
        a = (nv & -nv).bit_length() - 1
        b = nv.bit_length() - 1
        if nb[a] >> b & 1 or w[v] < w[a] or w[v] < w[b] or w[v] >= w[a] + w[b]:
            return False
        vb = 1 << v
        merged = (nb[a] | nb[b]) & mask & ~(nv | vb)
        trail.append((True, v, nb[v]))
        nb[v] = merged
        for x in _bits(merged):
            trail.append((True, x, nb[x]))
            nb[x] |= vb
        folds.append((v, a, b))
        trail.append((False, v, w[v]))
        w[v] = w[a] + w[b] - w[v]
        return True

    def _restore(self, trail):
        nb, w = self.nb, self.w
        for is_adj, u, old in reversed(trail):
            if is_adj:
                nb[u] = old
            else:
                w[u] = old

    @staticmethod
    def _unfold(chosen, folds):
        for rec in reversed(folds):
            if len(rec) == 2:
                v, u = rec
                if not chosen >> u & 1:
                    chosen |= 1 << v
            else:
                v, a, b = rec
                if chosen >> v & 1:
                    chosen = (chosen & ~(1 << v)) | (1 << a) | (1 << b)
                else:
                    chosen |= 1 << v
        return chosen

    # -- bounds and helpers -------------------------------------------------

    def _components(self, mask):
        nb = self.nb
        comps = []
        while mask:
            comp = frontier = mask & -mask
            while frontier:
                reach = 0
                for x in _bits(frontier):
                    reach |= nb[x]
                frontier = reach & mask & ~comp
                comp |= frontier
            comps.append(comp)
            mask &= ~comp
        return comps

    def _upper_bound(self, mask):
        w = self.w
        if mask.bit_count() > self.clique_cover_limit:
            return sum(w[x] for x in _bits(mask))
        nb = self.nb
        clique_of = {}
        cliques = []
        total = 0
        for v in sorted(_bits(mask), key=lambda x: -w[x]):
            for u in _bits(nb[v] & mask):
                c = clique_of.get(u)
                if c is not None and cliques[c] & ~nb[v] == 0:
                    cliques[c] |= 1 << v
                    clique_of[v] = c
                    break
            else:
                clique_of[v] = len(cliques)
                cliques.append(1 << v)
                total += w[v]
        return total

    def _greedy(self, mask):
        nb, w = self.nb, self.w
        order = sorted(_bits(mask), key=lambda x: (-w[x] / ((nb[x] & mask).bit_count() + 1), x))
        free = mask
        chosen = 0
        weight = 0
        for v in order:
            if free >> v & 1:
                chosen |= 1 << v
                weight += w[v]
                free &= ~(nb[v] | (1 << v))
        return weight, chosen

    def _branch_vertex(self, mask):
        nb, w = self.nb, self.w
        best = None
        best_score = -math.inf
        for v in _bits(mask):
            score = -w[v]
            for x in _bits(nb[v] & mask):
                score += w[x]
            if score > best_score:
                best, best_score = v, score
        return best

    # -- search -------------------------------------------------------------

    def solve_component(self, mask):
        gw, gs = self._greedy(mask)
        # Components of a reduced graph are reduced already.
        found = self.search(mask, gw, 0)
        return found if found is not None else (gw, gs)

    def search(self, mask, lb, dirty=None):
        """Best ``(weight, set)`` in ``G[mask]`` strictly heavier than ``lb``,
        or ``None`` if there is none (or the time ran out first).

        Only vertices in ``dirty`` (default: all) are tested for reductions
        up front; the rest are known to be irreducible."""
        self._tick(mask)
        mask, taken, offset, folds, trail = self._reduce(mask, mask if dirty is None else dirty)
        try:
            if not mask:
                if offset > lb:
                    return offset, self._unfold(taken, folds)
                return None
            need = lb - offset
            comps = self._components(mask)
            if len(comps) > 1:
                if sum(self._upper_bound(c) for c in comps) <= need:
                    return None
                total = 0
                chosen = 0
                for c in sorted(comps, key=int.bit_count):
                    cw, cs = self.solve_component(c)
                    total += cw
                    chosen |= cs
                if total > need:
                    return total + offset, self._unfold(chosen | taken, folds)
                return None
            if self.timed_out or self._upper_bound(mask) <= need:
                return None
            v = self._branch_vertex(mask)
            wv = self.w[v]
            best = None
            vb = 1 << v
            rest = mask & ~vb
            found = self.search(rest, need, self._near(vb, rest))
            if found is not None:
                best = found
                need = found[0]
            if not self.timed_out:
                gone = (self.nb[v] & mask) | vb
                rest = mask & ~gone
                found = self.search(rest, need - wv, self._near(gone, rest))
                if found is not None:
                    best = (found[0] + wv, found[1] | 1 << v)
            if best is None:
                return None
            return best[0] + offset, self._unfold(best[1] | taken, folds)
        finally:
            self._restore(trail)


def _run_deep(fn, depth_hint):
    """Run ``fn`` with enough recursion headroom for ``depth_hint`` frames."""
    if depth_hint < 400:
        return fn()
    result = []
    errors = []

    def target():
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, 4 * depth_hint + 1000))
        try:
            result.append(fn())
        except BaseException as exc:  # re-raised in the caller's thread
            errors.append(exc)
        finally:
            sys.setrecursionlimit(old)

    old_size = threading.stack_size()
    threading.stack_size(256 * 1024 * 1024)
    try:
        t = threading.Thread(target=target)
        t.start()
        t.join()
    finally:
        threading.stack_size(old_size)
    if errors:
        raise errors[0]
    return result[0]


def solve_graph(
    graph: DynamicGraph,
    t_limit: float | None = 10.0,
    incumbent=(),
    reductions=REDUCTIONS,
    clique_cover_limit: int = 512,
) -> SolverResult:
    """Maximum weight independent set of ``graph``, never worse than ``incumbent``.

    ``t_limit`` is in seconds; ``None`` or ``math.inf`` means no limit. On
    time-out the best set found so far is returned with
    ``proven_optimal=False``. ``reductions`` picks the rules from
    :data:`REDUCTIONS` (isolated vertices are always taken).
    """
    if t_limit is not None and t_limit <= 0:
        raise ValueError(f"time limit must be positive, got {t_limit}")
    start = time.perf_counter()
    deadline = None if t_limit is None or math.isinf(t_limit) else start + t_limit
    weights = graph.weights
    incumbent = sorted(set(incumbent))
    inc_weight = sum(weights[v] for v in incumbent)
    bnr = _BranchAndReduce(graph.adj, weights, deadline, reductions, clique_cover_limit)
    full = (1 << graph.n) - 1

    found = _run_deep(lambda: bnr.search(full, inc_weight), graph.n)
    if found is None:
        chosen = incumbent
    else:
        chosen = list(_bits(found[1]))
    chosen_set = set(chosen)
    for v in chosen:
        if graph.adj[v] & chosen_set:
            raise AssertionError(f"solver produced a dependent set at vertex {v}")
    return SolverResult(
        set=chosen,
        weight=sum(weights[v] for v in chosen),
        proven_optimal=not bnr.timed_out,
        nodes_explored=bnr.nodes,
        elapsed=time.perf_counter() - start,
    )


def solve_mwis(sub, t_limit: float | None = 10.0, **options) -> SolverResult:
    """Solve a :class:`~dynmwis.explorer.Subproblem` warm-started from its incumbent."""
    if sub.local_graph.n == 0:
        raise ValueError("subproblem has no vertices")
    return solve_graph(sub.local_graph, t_limit, sub.incumbent, **options)


def improves(result: SolverResult, sub) -> bool:
    return result.weight > sub.incumbent_weight
