import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynmwis import (
    DynamicGraph,
    EditSequence,
    RunReport,
    assign_random_weights,
    parse_metis,
    parse_sequence,
    run_sequence,
    static_to_sequence,
    write_sequence,
)
from dynmwis.io import CSV_COLUMNS, FormatError, write_metis


def _write(tmp_path, text, name="g.graph"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_metis_path(tmp_path):
    g = parse_metis(_write(tmp_path, "3 2\n2 3\n1\n1\n"))
    assert g.n == 3 and g.edges == [(0, 1), (0, 2)] and g.weights is None
    assert g.to_graph().m == 2


def test_metis_vertex_weights_and_comments(tmp_path):
    g = parse_metis(_write(tmp_path, "% a comment\n3 2 10\n5 2\n7 1 3\n% mid\n9 2\n"))
    assert g.weights == [5, 7, 9]
    assert g.edges == [(0, 1), (1, 2)]


def test_metis_edge_weights_are_skipped(tmp_path):
    g = parse_metis(_write(tmp_path, "3 2 11\n1 2 4\n2 1 4 3 8\n3 2 8\n"))
    assert g.weights == [1, 2, 3] and g.edges == [(0, 1), (1, 2)]


def test_metis_isolated_vertices(tmp_path):
    g = parse_metis(_write(tmp_path, "4 1\n2\n1\n\n\n"))
    assert g.n == 4 and g.edges == [(0, 1)]


def test_metis_drops_loops_and_duplicates(tmp_path):
    g = parse_metis(_write(tmp_path, "3 2\n1 2 2 3\n1 1\n1\n"))
    assert g.edges == [(0, 1), (0, 2)]
    assert g.dropped_loops == 1 and g.dropped_duplicates == 2


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 2\n2 4\n1\n1\n", 2),
        ("x 2\n", 1),
        ("3 2 10\n\n1 1\n1 1\n", 2),
        ("3 2\n2 3\n1\n", 3),
        ("2 1\n2\nfoo\n", 3),
        ("", 1),
    ],
)
def test_metis_errors_carry_line_numbers(tmp_path, text, line):
    with pytest.raises(FormatError) as err:
        parse_metis(_write(tmp_path, text))
    assert err.value.lineno == line


def test_metis_round_trip(tmp_path):
    g = DynamicGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)], [4, 3, 2, 1])
    p = tmp_path / "out.graph"
    write_metis(p, g, with_weights=True)
    back = parse_metis(p)
    assert back.weights == g.weights and sorted(back.edges) == g.edges()


def test_static_to_sequence(tmp_path):
    tri = parse_metis(_write(tmp_path, "3 3\n2 3\n1 3\n1 2\n"))
    seq = static_to_sequence(tri)
    assert seq.events == [("insert", 0, 1), ("insert", 0, 2), ("insert", 1, 2)]
    state, _ = run_sequence(DynamicGraph(seq.n), seq.events)
    assert state.graph.m == 3
    assert static_to_sequence(parse_metis(_write(tmp_path, "2 0\n\n\n"))).events == []


def test_parse_sequence(tmp_path):
    seq = parse_sequence(_write(tmp_path, "# header\nn 3\ni 0 1\nd 0 1  # gone\n", "s.seq"))
    assert seq.n == 3 and seq.events == [("insert", 0, 1), ("delete", 0, 1)]
    seq = parse_sequence(_write(tmp_path, "n 3\ni 0 0\ni 1 2\n", "s.seq"))
    assert seq.obsolete_count == 1 and len(seq) == 1


@pytest.mark.parametrize(
    "text, line",
    [("n 3\nx 0 1\n", 2), ("n 3\ni 0 3\n", 2), ("i 0 1\n", 1), ("n 3\ni 0\n", 2), ("n 3\ni a b\n", 2), ("", 1)],
)
def test_sequence_errors(tmp_path, text, line):
    with pytest.raises(FormatError) as err:
        parse_sequence(_write(tmp_path, text, "s.seq"))
    assert err.value.lineno == line


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 30).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.sampled_from(["insert", "delete"]), st.integers(0, n - 1), st.integers(0, n - 1))
             .filter(lambda e: e[1] != e[2]), max_size=50))))
def test_sequence_round_trip(tmp_path_factory, data):
    n, events = data
    p = tmp_path_factory.mktemp("seq") / "x.seq"
    seq = EditSequence(n=n, events=events)
    write_sequence(p, seq)
    back = parse_sequence(p)
    assert (back.n, back.events) == (n, events)


def test_weights():
    assert assign_random_weights(50, 3) == assign_random_weights(50, 3)
    assert assign_random_weights(50, 3) != assign_random_weights(50, 4)
    assert assign_random_weights(10, 1, lo=1, hi=1) == [1] * 10
    big = assign_random_weights(10**5, 2024)
    assert min(big) == 1 and max(big) == 100
    assert all(isinstance(w, int) for w in big[:10])
    assert 48 <= np.mean(big) <= 53
    with pytest.raises(ValueError):
        assign_random_weights(3, 0, lo=5, hi=4)


def test_run_report_csv(tmp_path):
    g = DynamicGraph(4)
    state, stats = run_sequence(g, [("insert", 0, 1), ("insert", 0, 1), ("insert", 1, 2)])
    report = RunReport(instance="t", algo="one-strong", seed=0, config={}, final_weight=state.solution.weight,
                       final_cardinality=state.solution.cardinality, total_update_time=0.5, rows=stats)
    assert report.mean_update_time == 0.25
    assert "weight=3" in report.summary() and "updates=2" in report.summary()
    p = tmp_path / "r.csv"
    report.write_csv(p)
    lines = p.read_text().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 3
