import pytest

from wspan import GenSpec, WeightedGraph, generate
from wspan.emulator import EmulatorResult
from wspan.io import (
    GraphFormatError,
    read_emulator,
    read_graph,
    read_jsonl,
    read_subset,
    write_emulator,
    write_graph,
    write_jsonl,
    write_subset,
)


def test_round_trip_identity(tmp_path):
    g = generate(GenSpec(family="gnp", n=40, p=0.2, wmodel="uniform", seed=6))
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g


def test_round_trip_decimal_weights(tmp_path):
    g = WeightedGraph(3, [(0, 1, 0.1), (1, 2, 2.5)])
    path = tmp_path / "g.txt"
    write_graph(g, path)
    back = read_graph(path)
    assert back.weight(0, 1) == 0.1
    assert back.weight(1, 2) == 2.5


def test_duplicate_edge_line_reports_location(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1 1.0\n1 0 2.0\n")
    with pytest.raises(GraphFormatError, match=r"bad\.txt:3: duplicate edge"):
        read_graph(path)


def test_negative_weight_rejected(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 1\n0 1 -2.0\n")
    with pytest.raises(GraphFormatError, match="non-positive weight"):
        read_graph(path)


def test_header_and_count_mismatches(tmp_path):
    p1 = tmp_path / "h1.txt"
    p1.write_text("2\n")
    with pytest.raises(GraphFormatError, match="header"):
        read_graph(p1)
    p2 = tmp_path / "h2.txt"
    p2.write_text("2 2\n0 1 1.0\n")
    with pytest.raises(GraphFormatError, match="promises 2 edges"):
        read_graph(p2)


def test_malformed_tokens_and_range(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("2 1\n0 x 1.0\n")
    with pytest.raises(GraphFormatError, match=r"bad\.txt:2"):
        read_graph(p)
    p.write_text("2 1\n0 5 1.0\n")
    with pytest.raises(GraphFormatError, match="out of range"):
        read_graph(p)
    p.write_text("2 1\n1 1 1.0\n")
    with pytest.raises(GraphFormatError, match="self-loop"):
        read_graph(p)


def test_emulator_round_trip(tmp_path):
    em = EmulatorResult(
        n=4,
        edges={(0, 1): (1.5, "g"), (1, 3): (2.0, "v")},
        S=(1, 3),
        params={},
    )
    path = tmp_path / "em.txt"
    write_emulator(em, path)
    back = read_emulator(path)
    assert back.n == 4
    assert back.edges == em.edges


def test_emulator_tag_validation(tmp_path):
    p = tmp_path / "em.txt"
    p.write_text("2 1\n0 1 1.0 q\n")
    with pytest.raises(GraphFormatError, match="tag"):
        read_emulator(p)


def test_subset_round_trip_and_errors(tmp_path):
    p = tmp_path / "s.txt"
    write_subset([4, 1, 9], p)
    assert read_subset(p) == [4, 1, 9]
    p.write_text("1\n1\n")
    with pytest.raises(GraphFormatError, match="duplicate"):
        read_subset(p)
    p.write_text("a\n")
    with pytest.raises(GraphFormatError, match="malformed"):
        read_subset(p)


def test_jsonl_round_trip(tmp_path):
    rows = [{"a": 1, "b": [1, 2]}, {"a": 2, "b": None}]
    p = tmp_path / "r.jsonl"
    write_jsonl(rows, p)
    assert read_jsonl(p) == rows
