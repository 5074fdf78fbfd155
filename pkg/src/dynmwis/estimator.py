"""scikit-learn compatible front end.

An edit sequence is the training data: :meth:`DynamicIndependentSet.fit`
replays it from an edgeless graph, :meth:`~DynamicIndependentSet.partial_fit`
continues the stream, and :meth:`~DynamicIndependentSet.predict` answers
membership queries against the maintained set.

>>> import numpy as np
>>> est = DynamicIndependentSet(algo="one-strong").fit(np.array([[0, 1], [1, 2]]))
>>> est.independent_set_.tolist()
[0, 2]
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .dynamic import DELETE, INSERT, PRESETS, DynamicOne, total_time
from .graph import DynamicGraph
from .io import assign_random_weights

ALGORITHMS = ("greedy", "deggreedy", "one-fast", "one-strong", "one-custom")


def check_events(X) -> list[tuple[str, int, int]]:
    """Validate an event array.

    ``X`` is either ``(k, 2)`` -- edge insertions -- or ``(k, 3)`` with a
    leading opcode column (``1`` insert, ``0`` or ``-1`` delete).
    """
    X = check_array(X, dtype=np.int64, ensure_min_samples=0, ensure_min_features=2)
    if X.shape[1] == 2:
        return [(INSERT, int(u), int(v)) for u, v in X]
    if X.shape[1] != 3:
        raise ValueError(f"expected 2 or 3 columns, got {X.shape[1]}")
    ops = X[:, 0]
    bad = ~np.isin(ops, (1, 0, -1))
    if bad.any():
        raise ValueError(f"unknown opcode {int(ops[bad][0])}; use 1 (insert) or 0/-1 (delete)")
    return [(INSERT if op == 1 else DELETE, int(u), int(v)) for op, u, v in X]


def check_weights(weights, n: int | None):
    w = check_array(weights, ensure_2d=False, dtype=None, ensure_min_samples=0)
    if w.ndim != 1:
        raise ValueError("weights must be one-dimensional")
    if n is not None and len(w) != n:
        raise ValueError(f"got {len(w)} weights for {n} vertices")
    if (w < 0).any():
        raise ValueError("weights must be non-negative")
    return w.tolist()


def make_config(algo: str = "one-strong", **overrides):
    """Config for a named algorithm; ``one-custom`` starts from ``one-strong``.

    Overrides set to ``None`` are ignored. Tuning overrides on a named
    preset other than ``one-custom`` raise ``ValueError``.
    """
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {ALGORITHMS}")
    overrides = {k: v for k, v in overrides.items() if v is not None}
    tuning = {"depth", "nu_max", "delta", "pinch", "prune", "rare", "rare_x"} & overrides.keys()
    if tuning and algo != "one-custom":
        raise ValueError(f"{sorted(tuning)} can only be set with algo='one-custom'")
    if "rare_x" in overrides:
        overrides.setdefault("rare", True)
    base = PRESETS["one-strong" if algo == "one-custom" else algo]
    return base.with_(**overrides)


class DynamicIndependentSet(BaseEstimator):
    """Maintain a maximal (weight) independent set over an edge stream.

    Parameters
    ----------
    algo : {"greedy", "deggreedy", "one-fast", "one-strong", "one-custom"}
    depth, nu_max, delta, pinch, prune, rare, rare_x :
        Tuning knobs, only accepted with ``algo="one-custom"``.
    t_limit : float or None
        Seconds per local solve; ``None`` disables the limit.
    weighted : bool
        Use vertex weights (given to ``fit`` or drawn uniformly from
        ``[1, 100]`` with ``weight_seed``). Otherwise all weights are 1.
    weight_seed : int
    random_state : int
        Seed for greedy tie-breaking.
    """

    def __init__(self, algo="one-strong", *, depth=None, nu_max=None, delta=None, pinch=None,
                 prune=None, rare=None, rare_x=None, t_limit=10.0, weighted=False, weight_seed=0,
                 random_state=0):
        self.algo = algo
        self.depth = depth
        self.nu_max = nu_max
        self.delta = delta
        self.pinch = pinch
        self.prune = prune
        self.rare = rare
        self.rare_x = rare_x
        self.t_limit = t_limit
        self.weighted = weighted
        self.weight_seed = weight_seed
        self.random_state = random_state

    def _config(self):
        return make_config(
            self.algo, depth=self.depth, nu_max=self.nu_max, delta=self.delta, pinch=self.pinch,
            prune=self.prune, rare=self.rare, rare_x=self.rare_x,
            mode="weighted" if self.weighted else "cardinality",
            seed=self.random_state,
        ).with_(t_limit=self.t_limit)

    def fit(self, X, y=None, *, n_vertices=None, weights=None):
        """Replay the events in ``X`` starting from an edgeless graph."""
        events = check_events(X)
        if weights is not None:
            weights = check_weights(weights, n_vertices)
            n_vertices = len(weights)
        if n_vertices is None:
            n_vertices = 1 + max((max(u, v) for _, u, v in events), default=-1)
        if self.weighted and weights is None:
            weights = assign_random_weights(n_vertices, self.weight_seed)
        graph = DynamicGraph(n_vertices, weights)
        self.state_ = DynamicOne(graph, self._config())
        self.stats_ = []
        self._replay(events)
        return self

    def partial_fit(self, X, y=None, **fit_params):
        """Apply further events to the fitted state (fits from scratch if unfitted)."""
        if not hasattr(self, "state_"):
            return self.fit(X, y, **fit_params)
        self._replay(check_events(X))
        return self

    def _replay(self, events):
        n = self.state_.graph.n
        for i, (kind, u, v) in enumerate(events):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"event {i} references vertex outside 0..{n - 1}")
            row = self.state_.apply(kind, u, v)
            if row is not None:
                self.stats_.append(row)
        sol = self.state_.solution
        self.n_vertices_ = n
        self.independent_set_ = np.flatnonzero(sol.in_set)
        self.weight_ = sol.weight
        self.cardinality_ = sol.cardinality
        self.n_obsolete_ = self.state_.obsolete
        self.update_time_ = total_time(self.stats_)

    def predict(self, X=None):
        """Membership flags for vertex ids ``X`` (all vertices when omitted)."""
        check_is_fitted(self, "state_")
        flags = np.asarray(self.state_.solution.in_set, dtype=bool)
        if X is None:
            return flags
        ids = check_array(X, ensure_2d=False, dtype=np.int64, ensure_min_samples=0).ravel()
        if ids.size and (ids.min() < 0 or ids.max() >= flags.size):
            raise ValueError(f"vertex ids must lie in 0..{flags.size - 1}")
        return flags[ids]

    def score(self, X=None, y=None):
        """Weight of the maintained independent set."""
        check_is_fitted(self, "state_")
        return self.state_.solution.weight
