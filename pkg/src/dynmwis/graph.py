"""Mutable undirected simple graph with non-negative vertex weights."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from numbers import Real


class DynamicGraph:
    """Undirected simple graph over the fixed vertex set ``0..n-1``.

    Adjacency is a list of hashed sets, so edge tests are O(1) expected and
    neighborhood iteration is O(deg). Self-loops and parallel edges are
    silently refused by :meth:`insert_edge`.

    Parameters
    ----------
    n : int
        Number of vertices.
    weights : sequence of real, optional
        Non-negative vertex weights. Defaults to unit weights.
    """

    __slots__ = ("n", "weights", "adj", "m")

    def __init__(self, n: int, weights: Sequence[Real] | None = None):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if weights is None:
            weights = [1] * n
        weights = list(weights)
        if len(weights) != n:
            raise ValueError(f"expected {n} weights, got {len(weights)}")
        for v, w in enumerate(weights):
            if w < 0:
                raise ValueError(f"weight of vertex {v} is negative ({w})")
        self.n = n
        self.weights = weights
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.m = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], weights=None) -> "DynamicGraph":
        g = cls(n, weights)
        for u, v in edges:
            g.insert_edge(u, v)
        return g

    def _check(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise IndexError(f"vertex {u} out of range for graph with {self.n} vertices")

    def insert_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        if u == v or v in self.adj[u]:
            return False
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.m += 1
        return True

    def delete_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        if v not in self.adj[u]:
            return False
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.m -= 1
        return True

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.adj[u]

    def degree(self, u: int) -> int:
        self._check(u)
        return len(self.adj[u])

    def neighbors(self, u: int) -> list[int]:
        self._check(u)
        return sorted(self.adj[u])

    def weight_of_neighborhood(self, u: int):
        self._check(u)
        w = self.weights
        return sum(w[x] for x in self.adj[u])

    def set_weight(self, u: int, weight) -> None:
        self._check(u)
        if weight < 0:
            raise ValueError(f"weight of vertex {u} is negative ({weight})")
        self.weights[u] = weight

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(min, max)`` pairs in ascending order."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["DynamicGraph", dict[int, int]]:
        """Return ``G[vertices]`` with ids remapped to ``0..k-1`` in the given order."""
        to_local = {v: i for i, v in enumerate(vertices)}
        sub = DynamicGraph(len(vertices), [self.weights[v] for v in vertices])
        for i, v in enumerate(vertices):
            row = sub.adj[i]
            for x in self.adj[v]:
                j = to_local.get(x)
                if j is not None:
                    row.add(j)
        sub.m = sum(len(r) for r in sub.adj) // 2
        return sub, to_local

    def copy(self) -> "DynamicGraph":
        g = DynamicGraph(self.n, self.weights)
        g.adj = [set(r) for r in self.adj]
        g.m = self.m
        return g

    def check_invariants(self) -> None:
        """Raise ``AssertionError`` if adjacency is asymmetric, has loops or a stale edge count."""
        total = 0
        for u, row in enumerate(self.adj):
            assert u not in row, f"self-loop at {u}"
            for v in row:
                assert u in self.adj[v], f"asymmetric edge {u}->{v}"
            total += len(row)
        assert total == 2 * self.m, f"edge count {self.m} != {total}/2"

    def __repr__(self) -> str:
        return f"DynamicGraph(n={self.n}, m={self.m})"
