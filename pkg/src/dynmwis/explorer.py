"""Construction of bounded local subproblems around an update.

A subproblem is a vertex set ``H`` with no solution vertex in ``N(H) - H``;
any independent set of ``G[H]`` can then replace ``I & H``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .graph import DynamicGraph
from .solution import Solution


@dataclass
class Subproblem:
    vertices: list[int]
    local_graph: DynamicGraph
    to_global: list[int]
    to_local: dict[int, int]
    incumbent: list[int]
    incumbent_weight: float

    def __len__(self) -> int:
        return len(self.vertices)


def pinch(g: DynamicGraph, sol: Solution, H, delta: float = 1.25) -> set[int]:
    """Drop non-solution vertices whose degree in ``G[H]`` exceeds
    ``delta`` times the largest such degree among solution vertices.

    When ``H`` holds no solution vertex there is no reference degree and
    ``H`` is returned unchanged.
    """
    if delta <= 1:
        raise ValueError(f"pinch factor must exceed 1, got {delta}")
    H = set(H)
    adj = g.adj
    in_set = sol.in_set
    deg = {v: sum(1 for x in adj[v] if x in H) for v in H}
    ref = [deg[v] for v in H if in_set[v]]
    if not ref:
        return H
    limit = delta * max(ref)
    return {v for v in H if in_set[v] or deg[v] <= limit}


def _bfs(g: DynamicGraph, sol: Solution, seeds: Sequence[int], depth: int, nu_max: int) -> list[int]:
    adj = g.adj
    in_set = sol.in_set
    H: list[int] = []
    in_h: set[int] = set()
    ext: set[int] = set()  # solution vertices adjacent to H, outside H
    seen: set[int] = set()

    def admit(v: int) -> bool:
        new_ext = {x for x in adj[v] if in_set[x] and x not in in_h and x not in ext}
        # Conservative bound on the final size: H, the pending solution
        # extension and v itself; tight completion only fills leftover room.
        projected = len(H) + 1 + len(ext) - (v in ext) + len(new_ext)
        if projected > nu_max:
            return False
        H.append(v)
        in_h.add(v)
        ext.discard(v)
        ext.update(new_ext)
        return True

    level = []
    for s in seeds:
        if s in seen:
            continue
        seen.add(s)
        if admit(s):
            level.append(s)
    for _ in range(depth):
        if not level:
            break
        found = set()
        for v in level:
            for x in adj[v]:
                if x not in seen:
                    found.add(x)
        seen.update(found)
        level = [x for x in sorted(found) if admit(x)]
    return H


def build_subproblem(
    g: DynamicGraph,
    sol: Solution,
    seeds: Sequence[int],
    depth: int,
    nu_max: int,
    delta: float = 1.25,
    pinch_enabled: bool = True,
    complete_tight: bool = True,
) -> Subproblem | None:
    """Grow ``H`` by a size-capped BFS from ``seeds`` and close it off.

    Steps: BFS up to ``depth`` admitting a vertex only while the projected
    final size stays within ``nu_max``; optional pinching; extension by the
    adjacent solution vertices; then (budget permitting) every outside vertex
    whose solution neighbors all lie in ``H``. Returns ``None`` when nothing
    could change, i.e. ``H`` is empty or consists of solution vertices only.
    """
    if not seeds:
        raise ValueError("at least one seed is required")
    for s in seeds:
        if not 0 <= s < g.n:
            raise IndexError(f"seed {s} out of range")
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    if nu_max < 1:
        raise ValueError(f"nu_max must be positive, got {nu_max}")

    H = _bfs(g, sol, seeds, depth, nu_max)
    if not H:
        return None
    if pinch_enabled:
        kept = pinch(g, sol, H, delta)
        H = [v for v in H if v in kept]
        if not H:
            return None

    adj = g.adj
    in_set = sol.in_set
    in_h = set(H)
    for v in list(H):
        for x in adj[v]:
            if in_set[x] and x not in in_h:
                in_h.add(x)
                H.append(x)

    if complete_tight:
        boundary = sorted({x for v in H for x in adj[v] if x not in in_h})
        for x in boundary:
            if len(H) >= nu_max:
                break
            if all(y in in_h for y in adj[x] if in_set[y]):
                H.append(x)
        in_h.update(H)

    if all(in_set[v] for v in H):
        return None
    H.sort()
    local, to_local = g.induced_subgraph(H)
    incumbent = [to_local[v] for v in H if in_set[v]]
    return Subproblem(
        vertices=H,
        local_graph=local,
        to_global=H,
        to_local=to_local,
        incumbent=incumbent,
        incumbent_weight=sum(g.weights[v] for v in H if in_set[v]),
    )


def check_replaceable(g: DynamicGraph, sol: Solution, vertices) -> bool:
    """True iff no solution vertex sits in ``N(H) - H``."""
    H = set(vertices)
    return not any(sol.in_set[x] and x not in H for v in H for x in g.adj[v])
