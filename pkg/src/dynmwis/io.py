"""Instance formats, weight assignment and run reports.

Two input formats are understood:

METIS (1-indexed adjacency lists)::

    % comment
    <n> <m> [fmt [ncon]]
    [w_1 ...] <nbr> [<edge weight>] ...

``fmt`` is a digit string whose last digit flags edge weights and
second-to-last digit flags vertex weights (``1``, ``10``, ``11``).

Edit sequences (0-indexed, one event per line)::

    # comment
    n <count>
    i <u> <v>
    d <u> <v>
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .graph import DynamicGraph

log = logging.getLogger(__name__)

CSV_COLUMNS = ("update_index", "kind", "greedy_added", "solved", "solver_optimal", "weight",
               "cardinality", "elapsed_ns")
_KINDS = {"i": "insert", "d": "delete"}
_CODES = {"insert": "i", "delete": "d"}


class FormatError(ValueError):
    def __init__(self, path, lineno, msg):
        super().__init__(f"{path}:{lineno}: {msg}")
        self.lineno = lineno


@dataclass
class StaticGraph:
    """Graph as read from disk: edges in order of first appearance."""

    n: int
    edges: list[tuple[int, int]]
    weights: list | None = None
    dropped_loops: int = 0
    dropped_duplicates: int = 0

    def to_graph(self, weights=None) -> DynamicGraph:
        return DynamicGraph.from_edges(self.n, self.edges, weights if weights is not None else self.weights)


@dataclass
class EditSequence:
    n: int
    events: list[tuple[str, int, int]] = field(default_factory=list)
    obsolete_count: int = 0

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(self.events)


def _number(tok: str, path, lineno):
    try:
        return int(tok)
    except ValueError:
        try:
            return float(tok)
        except ValueError:
            raise FormatError(path, lineno, f"not a number: {tok!r}") from None


def parse_metis(path) -> StaticGraph:
    path = Path(path)
    with path.open() as fh:
        lines = [(i, ln.split()) for i, ln in enumerate(fh, 1) if not ln.lstrip().startswith("%")]
    # Blank lines are meaningful (isolated vertices) except before the header.
    while lines and not lines[0][1]:
        lines.pop(0)
    if not lines:
        raise FormatError(path, 1, "missing header")
    hdr_line, hdr = lines[0]
    if len(hdr) < 2 or len(hdr) > 4:
        raise FormatError(path, hdr_line, f"header must be 'n m [fmt [ncon]]', got {' '.join(hdr)!r}")
    try:
        n, m = int(hdr[0]), int(hdr[1])
        fmt = hdr[2] if len(hdr) > 2 else "0"
        ncon = int(hdr[3]) if len(hdr) > 3 else 1
    except ValueError:
        raise FormatError(path, hdr_line, f"malformed header {' '.join(hdr)!r}") from None
    if n < 0 or m < 0 or not fmt.isdigit():
        raise FormatError(path, hdr_line, f"malformed header {' '.join(hdr)!r}")
    fmt = fmt.zfill(3)
    has_vw = fmt[-2] == "1"
    has_ew = fmt[-1] == "1"
    has_size = fmt[-3] == "1"

    body = lines[1:]
    # Trailing blank lines past the last vertex are tolerated.
    while len(body) > n and not body[-1][1]:
        body.pop()
    if len(body) != n:
        lineno = body[n][0] if len(body) > n else (body[-1][0] if body else hdr_line)
        raise FormatError(path, lineno, f"expected {n} vertex lines, found {len(body)}")

    weights = [] if has_vw else None
    edges = []
    seen = set()
    loops = listed = 0
    for v, (lineno, toks) in enumerate(body):
        pos = 0
        if has_size:
            pos += 1
        if has_vw:
            if len(toks) < pos + ncon:
                raise FormatError(path, lineno, "missing vertex weight")
            w = _number(toks[pos], path, lineno)
            if w < 0:
                raise FormatError(path, lineno, f"negative vertex weight {w}")
            weights.append(w)
            pos += ncon
        step = 2 if has_ew else 1
        rest = toks[pos:]
        if has_ew and len(rest) % 2:
            raise FormatError(path, lineno, "odd number of entries in weighted neighbor list")
        for tok in rest[::step]:
            try:
                x = int(tok) - 1
            except ValueError:
                raise FormatError(path, lineno, f"bad neighbor id {tok!r}") from None
            if not 0 <= x < n:
                raise FormatError(path, lineno, f"neighbor {x + 1} out of range 1..{n}")
            if x == v:
                loops += 1
                continue
            listed += 1
            e = (v, x) if v < x else (x, v)
            if e in seen:
                # Every edge is listed from both ends; only repeats beyond that are duplicates.
                continue
            seen.add(e)
            edges.append(e)
    dups = max(0, listed - 2 * len(edges))
    if loops or dups:
        log.warning("%s: dropped %d self-loops and %d parallel edge entries", path, loops, dups)
    if len(edges) != m:
        log.info("%s: header announces %d edges, read %d", path, m, len(edges))
    return StaticGraph(n=n, edges=edges, weights=weights, dropped_loops=loops, dropped_duplicates=dups)


def write_metis(path, g: DynamicGraph, with_weights: bool = False) -> None:
    path = Path(path)
    with path.open("w") as fh:
        fh.write(f"{g.n} {g.m}{' 10' if with_weights else ''}\n")
        for v in range(g.n):
            parts = [str(g.weights[v])] if with_weights else []
            parts += [str(x + 1) for x in sorted(g.adj[v])]
            fh.write(" ".join(parts) + "\n")


def static_to_sequence(g: StaticGraph) -> EditSequence:
    """Insertion-only replay of a static graph, starting from no edges."""
    return EditSequence(n=g.n, events=[("insert", u, v) for u, v in g.edges])


def parse_sequence(path) -> EditSequence:
    path = Path(path)
    seq = None
    with path.open() as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            toks = line.split()
            if seq is None:
                if len(toks) != 2 or toks[0] != "n":
                    raise FormatError(path, lineno, f"expected header 'n <count>', got {line!r}")
                try:
                    seq = EditSequence(n=int(toks[1]))
                except ValueError:
                    raise FormatError(path, lineno, f"bad vertex count {toks[1]!r}") from None
                if seq.n < 0:
                    raise FormatError(path, lineno, "negative vertex count")
                continue
            if len(toks) != 3 or toks[0] not in _KINDS:
                raise FormatError(path, lineno, f"expected 'i u v' or 'd u v', got {line!r}")
            try:
                u, v = int(toks[1]), int(toks[2])
            except ValueError:
                raise FormatError(path, lineno, f"bad vertex id in {line!r}") from None
            if not (0 <= u < seq.n and 0 <= v < seq.n):
                raise FormatError(path, lineno, f"vertex id out of range 0..{seq.n - 1}")
            if u == v:
                seq.obsolete_count += 1
                continue
            seq.events.append((_KINDS[toks[0]], u, v))
    if seq is None:
        raise FormatError(path, 1, "missing header")
    return seq


def write_sequence(path, seq: EditSequence) -> None:
    with Path(path).open("w") as fh:
        fh.write(f"n {seq.n}\n")
        for kind, u, v in seq.events:
            fh.write(f"{_CODES[kind]} {u} {v}\n")


def assign_random_weights(n: int, seed: int, lo: int = 1, hi: int = 100) -> list[int]:
    """Integer weights uniform in ``[lo, hi]``.

    Drawn from numpy's PCG64 bit generator seeded with ``seed``, which is
    stable across platforms and numpy versions.
    """
    if lo > hi:
        raise ValueError(f"empty weight range [{lo}, {hi}]")
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.integers(lo, hi, size=n, endpoint=True).tolist()


@dataclass
class RunReport:
    instance: str
    algo: str
    seed: int
    config: dict
    final_weight: float
    final_cardinality: int
    total_update_time: float
    rows: list
    obsolete: int = 0
    solves: int = 0
    timeouts: int = 0

    @property
    def mean_update_time(self) -> float:
        return self.total_update_time / len(self.rows) if self.rows else 0.0

    def summary(self) -> str:
        return (
            f"instance={self.instance} algo={self.algo} seed={self.seed} "
            f"weight={self.final_weight} cardinality={self.final_cardinality} "
            f"updates={len(self.rows)} obsolete={self.obsolete} solves={self.solves} "
            f"timeouts={self.timeouts} total_time={self.total_update_time:.6f}s "
            f"mean_time={self.mean_update_time * 1e6:.3f}us"
        )

    def write_csv(self, path) -> None:
        with Path(path).open("w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
            writer.writeheader()
            for row in self.rows:
                writer.writerow(row.row())
