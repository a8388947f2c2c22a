from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from vertexminor.errors import InvalidMove, InvalidPartner, UnknownVertex
from vertexminor.graph import LabeledGraph, complete_graph, delete_vertices, empty_graph, local_complement, path_graph, star_graph
from vertexminor.localops import (
    LC,
    MX,
    MY,
    MZ,
    Move,
    TransformationPlan,
    apply_plan,
    default_partner,
    measure,
    plan_from_json,
    plan_to_json,
)


def x_by_partition(g: LabeledGraph, v, partner) -> LabeledGraph:
    """X outcome computed from the three-set partition rule, independently of pivot."""
    nv = set(g.neighbors(v)) - {partner}
    nu = set(g.neighbors(partner)) - {v}
    both, only_v, only_u = nv & nu, nv - nu, nu - nv
    edges = {frozenset(e) for e in g.edges() if v not in e and partner not in e}
    for a, b in [(both, only_v), (both, only_u), (only_v, only_u)]:
        for x in a:
            for y in b:
                edges ^= {frozenset((x, y))}
    edges |= {frozenset((partner, w)) for w in nv}
    keep = [w for w in g.vertices if w != v]
    return LabeledGraph(keep, [tuple(e) for e in edges])


def test_z_at_star_center():
    assert measure(star_graph([1, 2, 3], 1), "Z", 1) == empty_graph([2, 3])


def test_y_at_path_middle():
    assert measure(path_graph("abc"), "Y", "b") == complete_graph("ac")


def test_x_at_leaf_disconnects_axil():
    g = LabeledGraph("vwxy", [("v", "w"), ("w", "x"), ("w", "y"), ("x", "y")])
    h = measure(g, "X", "v", "w")
    assert h.neighbors("w") == []
    assert h.has_edge("x", "y")


@given(graphs(min_n=2), st.data())
def test_x_matches_partition_rule(g, data):
    v = data.draw(st.sampled_from(g.vertices))
    nbrs = g.neighbors(v)
    if not nbrs:
        return
    partner = data.draw(st.sampled_from(nbrs))
    assert measure(g, "X", v, partner) == x_by_partition(g, v, partner)


@given(graphs(), st.data())
def test_isolated_vertex_all_bases_delete(g, data):
    g = LabeledGraph(list(g.vertices) + ["iso"], g.edges())
    expected = measure(g, "Z", "iso")
    assert measure(g, "X", "iso") == measure(g, "Y", "iso") == expected


def test_measure_errors():
    g = path_graph("abc")
    with pytest.raises(UnknownVertex):
        measure(g, "Z", "q")
    with pytest.raises(InvalidPartner):
        measure(g, "X", "a", "c")
    assert default_partner(g, "b") == "a"


def test_apply_plan_examples():
    k = complete_graph("abcde")
    assert apply_plan(k, []) == k
    s = star_graph("abcde", "c")
    assert apply_plan(s, [LC("c")]) == k
    assert apply_plan(k, [MZ("d"), MZ("e")]) == complete_graph("abc")


def test_apply_plan_reports_index():
    with pytest.raises(InvalidMove) as info:
        apply_plan(path_graph("abc"), [LC("a"), MZ("b"), LC("b")])
    assert info.value.index == 2


def test_plan_invariants():
    with pytest.raises(ValueError):
        TransformationPlan((MZ("a"), MY("a")), frozenset("ab"), frozenset("b"))
    with pytest.raises(ValueError):
        TransformationPlan((MZ("a"),), frozenset("ab"), frozenset("a"))
    with pytest.raises(ValueError):
        TransformationPlan((), frozenset("a"), frozenset("ab"))
    with pytest.raises(ValueError):
        Move("LC", "a", "b")


def test_plan_json_roundtrip():
    moves = [LC(1), MX(2, 3), MY("q"), MZ((0, "a"))]
    text = plan_to_json(moves)
    assert json.loads(text)[1] == {"op": "MX", "v": 2, "partner": 3}
    assert plan_from_json(text) == moves


def _lc_decomposition(g, moves):
    """Replace measurements by their local complementations and defer deletions."""
    deleted = []
    for m in moves:
        if m.kind == "LC":
            g = local_complement(g, m.vertex)
        elif m.kind == "MY":
            g = local_complement(g, m.vertex)
        elif m.kind == "MX" and m.partner is not None:
            for w in (m.partner, m.vertex, m.partner):
                g = local_complement(g, w)
        if m.kind != "LC":
            deleted.append(m.vertex)
    return delete_vertices(g, deleted)


@st.composite
def graph_and_moves(draw):
    g = draw(graphs(min_n=2, max_n=7))
    live = list(g.vertices)
    h = g
    moves = []
    for _ in range(draw(st.integers(0, 6))):
        if len(live) < 2:
            break
        v = draw(st.sampled_from(live))
        kind = draw(st.sampled_from(["LC", "MX", "MY", "MZ"]))
        if kind == "MX":
            move = MX(v, default_partner(h, v))
        else:
            move = Move(kind, v)
        h = apply_plan(h, [move])
        moves.append(move)
        if kind != "LC":
            live.remove(v)
    return g, moves


@given(graph_and_moves())
def test_deletions_can_be_deferred(case):
    g, moves = case
    assert apply_plan(g, moves) == _lc_decomposition(g, moves)
