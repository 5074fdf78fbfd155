"""Synthetic stand-ins for the desk-scale benchmark instances.

``mesh`` is a Delaunay triangulation of uniform points (add20-like: about
three edges per vertex); ``road`` is a Euclidean minimum spanning tree plus
short Delaunay chords (uk-like: about 1.4 edges per vertex). Vertex ids are
assigned by a spatial sweep so the insertion order has the locality of a
real METIS file.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse.csgraph import minimum_spanning_tree
from scipy.sparse import coo_matrix
from scipy.spatial import Delaunay


def _delaunay_edges(pts):
    tri = Delaunay(pts)
    edges = set()
    for a, b, c in tri.simplices:
        for u, v in ((a, b), (b, c), (a, c)):
            edges.add((min(u, v), max(u, v)))
    return sorted(edges)


def _relabel(pts, edges):
    order = np.lexsort((pts[:, 1], np.floor(pts[:, 0] * 20)))
    new_id = np.empty(len(pts), dtype=int)
    new_id[order] = np.arange(len(pts))
    out = sorted({(min(new_id[u], new_id[v]), max(new_id[u], new_id[v])) for u, v in edges})
    return [(int(u), int(v)) for u, v in out]


def mesh(n=2395, seed=0):
    pts = np.random.default_rng(seed).random((n, 2))
    return n, _relabel(pts, _delaunay_edges(pts))


def road(n=4824, m=6837, seed=0):
    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    dl = _delaunay_edges(pts)
    u, v = np.array(dl).T
    d = np.hypot(*(pts[u] - pts[v]).T)
    mst = minimum_spanning_tree(coo_matrix((d, (u, v)), shape=(n, n))).tocoo()
    tree = {(min(a, b), max(a, b)) for a, b in zip(mst.row, mst.col)}
    rest = [e for _, e in sorted(zip(d, dl)) if e not in tree]
    extra = rest[: max(0, m - len(tree))]
    return n, _relabel(pts, list(tree) + extra)


def metis_order(n, edges):
    """Edges in order of first appearance in a METIS adjacency listing."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen, out = set(), []
    for u in range(n):
        for v in sorted(adj[u]):
            e = (min(u, v), max(u, v))
            if e not in seen:
                seen.add(e)
                out.append(e)
    return out
