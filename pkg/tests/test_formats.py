from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from vertexminor import formats
from vertexminor.bench import BenchRecord, instances, parse_sizes, run_bench
from vertexminor.circle import MultiGraph, multigraph_from_word
from vertexminor.errors import FormatError
from vertexminor.graph import LabeledGraph
from vertexminor.localops import LC, MX, MY, MZ, plan_from_json, plan_to_json


@given(graphs(0, 7))
def test_graph_text_round_trip(g):
    assert formats.graph_from_text(formats.graph_to_text(g)) == g


@given(graphs(0, 7))
def test_graph_json_round_trip(g):
    assert formats.graph_from_json(formats.graph_to_json(g)) == g
    assert formats.parse_graph(formats.graph_to_json(g)) == g
    assert formats.parse_graph(formats.graph_to_text(g)) == g


def test_wrapped_graph_json():
    g = LabeledGraph([0, 1], [(0, 1)])
    wrapped = json.dumps({"graph": formats.graph_to_dict(g), "trace": []})
    assert formats.parse_graph(wrapped) == g


def test_string_and_tuple_labels():
    g = LabeledGraph(["a", "b", ("c", 1)], [("a", ("c", 1)), ("a", "b")])
    assert formats.graph_from_json(formats.graph_to_json(g)) == g
    with pytest.raises(FormatError):
        formats.graph_to_text(g)


def test_text_graph_layout():
    g = LabeledGraph(["x", 2], [("x", 2)])
    text = formats.graph_to_text(g)
    assert text.splitlines()[0] == "2 1"
    assert formats.graph_from_text("# comment\n" + text) == g


@pytest.mark.parametrize(
    "text",
    ["", "2\n0\n1\n", "2 1\n0\n1\n", "2 1\n0\n1\n0 1 2\n", "2 0\n0\n0\n", "1 1\n0\n0 5\n", "{bad json", '{"vertices": [0]}'],
)
def test_bad_graph_inputs(text):
    with pytest.raises(FormatError):
        formats.parse_graph(text)


def test_file_round_trip(tmp_path):
    g = LabeledGraph(range(4), [(0, 1), (1, 2), (2, 3)])
    for fmt in ("text", "json"):
        path = tmp_path / f"g.{fmt}"
        formats.write_graph(g, path, fmt)
        assert formats.read_graph(path) == g


def test_multigraph_round_trips():
    f, _ = multigraph_from_word("a b c a b c")
    assert formats.multigraph_from_text(formats.multigraph_to_text(f)) == f
    assert formats.parse_multigraph(json.dumps(formats.multigraph_to_dict(f))) == f
    loops = MultiGraph([0], [(0, 0, "p"), (0, 0, "q")])
    assert formats.parse_multigraph(formats.multigraph_to_text(loops)) == loops


def test_bad_multigraph_inputs():
    with pytest.raises(FormatError):
        formats.multigraph_from_text("2 1\n0\n1\n0 1\n")
    with pytest.raises(FormatError):
        formats.multigraph_from_text("2 2\n0\n1\n7 0 1\n7 0 1\n")
    with pytest.raises(FormatError):
        formats.parse_multigraph("{nope")


def test_word_text():
    w = formats.word_from_text("a b a b")
    assert formats.word_to_text(w) == "a b a b"
    assert formats.word_from_text("abab") == w
    with pytest.raises(FormatError):
        formats.word_from_text("a b c")


def test_dot_export():
    dot = formats.graph_to_dot(LabeledGraph([0, 1], [(0, 1)]))
    assert dot.startswith("graph G {") and '"0" -- "1";' in dot
    f, _ = multigraph_from_word("abab")
    assert formats.multigraph_to_dot(f).count(" -- ") == 4


@given(st.lists(st.sampled_from([LC(0), LC("a"), MZ(1), MY(2), MX(3, 4), MX(5, None)]), max_size=6))
def test_plan_json_round_trip(moves):
    assert plan_from_json(plan_to_json(moves)) == moves


def test_plan_json_rejects_non_lists():
    with pytest.raises(ValueError):
        plan_from_json('{"kind": "LC"}')


# ------------------------------------------------------------------ bench


@pytest.mark.parametrize(
    "text, sizes",
    [
        ("25,50,100,200", [25, 50, 100, 200]),
        ("10..50", [10, 20, 30, 40, 50]),
        ("10..20:5", [10, 15, 20]),
        ("7", [7]),
        ("5, 10..20", [5, 10, 20]),
    ],
)
def test_parse_sizes(text, sizes):
    assert parse_sizes(text) == sizes


@pytest.mark.parametrize("text", ["", "0", "a", "10..x"])
def test_parse_sizes_rejects(text):
    with pytest.raises(ValueError):
        parse_sizes(text)


def test_bench_instances_are_seeded():
    a = list(instances(12, 3, 4, seed=5))
    b = list(instances(12, 3, 4, seed=5))
    c = list(instances(12, 3, 4, seed=6))
    assert a == b
    assert a != c
    assert all(len(t) == 4 for _, t in a)


def test_bench_records():
    recs = list(run_bench("dh-star", [8, 10], trials=3, targets=3, seed=1))
    assert [r.n for r in recs] == [8, 10]
    for r in recs:
        assert r.trials == 3 and 0 <= r.median <= r.max
        assert set(r.to_dict()) == {"algorithm", "n", "trials", "median", "mean", "max"}
    brute = list(run_bench("brute", [5], trials=2, targets=3))
    assert brute[0].algorithm == "brute"


def test_bench_record_validation():
    with pytest.raises(ValueError):
        BenchRecord("dh-star", 5, 0, 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        BenchRecord("dh-star", 5, 1, -1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        list(run_bench("magic", [5], 1, 2))
