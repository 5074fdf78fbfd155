"""Independent set bookkeeping with per-vertex counts of solution neighbors."""

from __future__ import annotations

from collections.abc import Iterable

from .graph import DynamicGraph


class SolutionError(RuntimeError):
    """An operation would break independence of the maintained set."""


class Solution:
    """Independent set ``I`` bound to one :class:`DynamicGraph`.

    ``tight[v]`` is ``|N(v) & I|`` and is kept exact by every mutator, which
    makes :meth:`can_be_independent` O(1) and add/remove O(deg).

    Vertices in ``barred`` are never admitted to the set; they model deleted
    nodes (isolated placeholders in the fixed vertex range).
    """

    def __init__(self, graph: DynamicGraph, members: Iterable[int] = ()):
        self.graph = graph
        n = graph.n
        self.in_set = [False] * n
        self.tight = [0] * n
        self.weight = 0
        self.cardinality = 0
        self.barred: set[int] = set()
        for v in members:
            self.add_vertex(v)

    @classmethod
    def all_vertices(cls, graph: DynamicGraph) -> "Solution":
        """``I = V``; valid (and the unique maximal set) only for edgeless graphs."""
        if graph.m:
            raise SolutionError("I = V is only independent on an edgeless graph")
        sol = cls(graph)
        sol.in_set = [True] * graph.n
        sol.weight = sum(graph.weights)
        sol.cardinality = graph.n
        return sol

    @classmethod
    def greedy(cls, graph: DynamicGraph) -> "Solution":
        """Maximal set built by scanning vertices in ascending (degree, id) order."""
        sol = cls(graph)
        for v in sorted(range(graph.n), key=lambda x: (len(graph.adj[x]), x)):
            if sol.can_be_independent(v):
                sol.add_vertex(v)
        return sol

    def __contains__(self, v: int) -> bool:
        return self.in_set[v]

    def members(self) -> list[int]:
        return [v for v, f in enumerate(self.in_set) if f]

    def can_be_independent(self, u: int) -> bool:
        return not self.in_set[u] and self.tight[u] == 0 and u not in self.barred

    def add_vertex(self, u: int) -> None:
        if self.in_set[u]:
            raise SolutionError(f"vertex {u} is already in the solution")
        if self.tight[u]:
            raise SolutionError(f"vertex {u} has {self.tight[u]} solution neighbors")
        if u in self.barred:
            raise SolutionError(f"vertex {u} is barred from the solution")
        self.in_set[u] = True
        tight = self.tight
        for x in self.graph.adj[u]:
            tight[x] += 1
        self.weight += self.graph.weights[u]
        self.cardinality += 1

    def remove_vertex(self, u: int) -> None:
        # A member with solution neighbors is a pending conflict after an
        # edge insertion; removing it is exactly how the conflict gets fixed.
        if not self.in_set[u]:
            raise SolutionError(f"vertex {u} is not in the solution")
        self.in_set[u] = False
        tight = self.tight
        for x in self.graph.adj[u]:
            tight[x] -= 1
        self.weight -= self.graph.weights[u]
        self.cardinality -= 1

    def insert_edge(self, u: int, v: int) -> bool:
        """Insert ``{u, v}`` into the graph and update the counts.

        If both endpoints are members the set is left in conflict; resolving
        it is the caller's job (see :mod:`dynmwis.greedy`).
        """
        if not self.graph.insert_edge(u, v):
            return False
        if self.in_set[u]:
            self.tight[v] += 1
        if self.in_set[v]:
            self.tight[u] += 1
        return True

    def delete_edge(self, u: int, v: int) -> bool:
        if not self.graph.delete_edge(u, v):
            return False
        if self.in_set[u]:
            self.tight[v] -= 1
        if self.in_set[v]:
            self.tight[u] -= 1
        return True

    def reweight(self, u: int, weight) -> None:
        """Change ``w(u)`` in the graph and keep the cached solution weight in sync."""
        old = self.graph.weights[u]
        self.graph.set_weight(u, weight)
        if self.in_set[u]:
            self.weight += weight - old

    def replace_region(self, region: Iterable[int], new_set: Iterable[int]) -> list[int]:
        """Swap ``I & region`` for ``new_set``.

        Removals happen before additions so intermediate states stay
        independent. Returns the vertices that lost their last solution
        neighbor during the swap (candidates for a maximality sweep).

        Raises
        ------
        SolutionError
            If ``new_set`` leaves ``region`` or conflicts with the solution
            outside it; the solution is left untouched in that case.
        """
        region = set(region)
        new_set = set(new_set)
        if not new_set <= region:
            raise SolutionError(f"vertices {sorted(new_set - region)} lie outside the region")
        adj = self.graph.adj
        in_set = self.in_set
        for x in new_set:
            for y in adj[x]:
                if y in new_set:
                    raise SolutionError(f"new set is not independent: edge ({x}, {y})")
                if in_set[y] and y not in region:
                    raise SolutionError(f"vertex {x} conflicts with solution vertex {y} outside the region")
            if x in self.barred:
                raise SolutionError(f"vertex {x} is barred from the solution")

        out = [x for x in region if in_set[x] and x not in new_set]
        for x in out:
            self.remove_vertex(x)
        for x in new_set:
            if not in_set[x]:
                self.add_vertex(x)
        freed = set()
        tight = self.tight
        for x in out:
            for y in adj[x]:
                if tight[y] == 0 and not in_set[y]:
                    freed.add(y)
            if tight[x] == 0 and not in_set[x]:
                freed.add(x)
        return sorted(freed)

    def audit(self) -> None:
        """Full recount of every cached quantity; raises ``AssertionError`` on mismatch."""
        g = self.graph
        in_set = self.in_set
        weight = 0
        card = 0
        for v in range(g.n):
            count = sum(1 for x in g.adj[v] if in_set[x])
            assert self.tight[v] == count, f"tight[{v}]={self.tight[v]} but recount is {count}"
            if in_set[v]:
                assert count == 0, f"solution vertex {v} has {count} solution neighbors"
                assert v not in self.barred, f"barred vertex {v} is in the solution"
                weight += g.weights[v]
                card += 1
        assert card == self.cardinality, f"cardinality {self.cardinality} != {card}"
        assert weight == self.weight or abs(weight - self.weight) <= 1e-9 * max(1, abs(weight)), (
            f"weight {self.weight} != {weight}"
        )

    def is_maximal(self) -> bool:
        return not any(self.can_be_independent(v) for v in range(self.graph.n))

    def copy(self) -> "Solution":
        s = Solution.__new__(Solution)
        s.graph = self.graph
        s.in_set = list(self.in_set)
        s.tight = list(self.tight)
        s.weight = self.weight
        s.cardinality = self.cardinality
        s.barred = set(self.barred)
        return s

    def __repr__(self) -> str:
        return f"Solution(cardinality={self.cardinality}, weight={self.weight})"
