import random

import pytest

from dynmwis import DynamicGraph


def random_graph(rng: random.Random, n: int, p: float, weighted: bool = True) -> DynamicGraph:
    weights = [rng.randint(1, 100) for _ in range(n)] if weighted else [1] * n
    g = DynamicGraph(n, weights)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.insert_edge(u, v)
    return g


def random_events(rng: random.Random, n: int, length: int, p_delete: float = 0.3):
    """Mixed insert/delete stream; deletions target present edges, with a few
    obsolete events (duplicates, loops, missing edges) mixed in."""
    present = set()
    events = []
    if n < 2:
        return events
    for _ in range(length):
        r = rng.random()
        if r < 0.03:
            u = rng.randrange(n)
            events.append(("insert", u, u))
        elif r < 0.06:
            u, v = rng.sample(range(n), 2)
            events.append(("delete" if (min(u, v), max(u, v)) not in present else "insert", u, v))
        elif present and r < 0.06 + p_delete:
            e = rng.choice(sorted(present))
            present.discard(e)
            events.append(("delete", *e) if rng.random() < 0.5 else ("delete", e[1], e[0]))
        else:
            u, v = rng.sample(range(n), 2)
            present.add((min(u, v), max(u, v)))
            events.append(("insert", u, v))
    return events


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def fig2():
    """Small weighted graph with I = {D, E} where swapping to {A, C} gains weight.

    Ids: A=0 (3), u=1 (1), C=2 (3), D=3 (2), E=4 (2), F=5, G=6, J=7 (1).
    """
    g = DynamicGraph(8, [3, 1, 3, 2, 2, 1, 1, 1])
    for e in [(0, 1), (1, 2), (0, 3), (1, 4), (2, 4), (3, 5), (4, 6), (0, 7), (7, 3)]:
        g.insert_edge(*e)
    return g


_ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}
_CRITERIA = range(1, 8)


@pytest.fixture
def criterion():
    """``criterion(k, ok, detail)`` records one check of acceptance criterion k."""

    def record(number: int, ok: bool, detail: str) -> bool:
        _ACCEPTANCE.setdefault(number, []).append((bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in _CRITERIA:
        checks = _ACCEPTANCE.get(k)
        if not checks:
            terminalreporter.write_line(f"criterion {k}: FAIL - not run to completion")
            continue
        status = "PASS" if all(ok for ok, _ in checks) else "FAIL"
        terminalreporter.write_line(f"criterion {k}: {status} - " + "; ".join(d for _, d in checks))
