from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, random_graph
from oracles import closure_key, vertex_minors_by_closure
from vertexminor.dh import random_dh
from vertexminor.errors import BudgetExceeded, InvalidTarget, SizeCapExceeded
from vertexminor.graph import (
    LabeledGraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    is_connected,
    local_complement,
    star_graph,
)
from vertexminor.localops import MZ, apply_plan
from vertexminor.oracle import (
    is_vertex_minor,
    lc_equivalence_witness,
    lc_equivalent,
    lc_orbit,
    star_minor_bruteforce,
    vertex_minor_bruteforce,
)


def test_star_and_complete_are_lc_equivalent():
    assert lc_equivalent(star_graph("abcd", "a"), complete_graph("abcd"))


def test_self_equivalence_has_empty_witness():
    g = cycle_graph(range(5))
    assert lc_equivalence_witness(g, g) == []


def test_connectivity_separates_orbits():
    assert not lc_equivalent(empty_graph("ab"), complete_graph("ab"))


def test_cap_refuses_large_orbits():
    with pytest.raises(SizeCapExceeded):
        lc_orbit(complete_graph(range(9)))
    assert len(lc_orbit(complete_graph(range(9)), cap=9)) == 10


@given(graphs(max_n=6), st.data())
def test_witness_replays(g, data):
    seq = data.draw(st.lists(st.sampled_from(g.vertices), max_size=5))
    h = g
    for v in seq:
        h = local_complement(h, v)
    witness = lc_equivalence_witness(g, h)
    assert witness is not None
    for v in witness:
        g = local_complement(g, v)
    assert g == h


@given(graphs(max_n=6))
def test_orbit_closed_and_contains_seed(g):
    orbit = lc_orbit(g)
    assert g in orbit
    for member in orbit.graphs():
        for v in g.vertices:
            assert local_complement(member, v) in orbit


def test_triangle_to_edge_by_deletion():
    plan = vertex_minor_bruteforce(complete_graph("abc"), complete_graph("ab"))
    assert list(plan.moves) == [MZ("c")]


@pytest.mark.parametrize("triple", list(itertools.combinations(range(5), 3)))
def test_c5_has_every_connected_triple(triple):
    g = cycle_graph(range(5))
    for edges in [[(0, 1), (1, 2)], [(0, 1), (0, 2)], [(1, 2), (0, 2)], [(0, 1), (1, 2), (0, 2)]]:
        target = LabeledGraph(triple, [(triple[a], triple[b]) for a, b in edges])
        plan = vertex_minor_bruteforce(g, target)
        assert plan is not None
        assert apply_plan(g, plan) == target


@pytest.mark.parametrize("seed", range(12))
def test_dh_graphs_never_reach_c5(seed):
    g = random_dh(6, seed)
    for five in itertools.combinations(g.vertices, 5):
        assert vertex_minor_bruteforce(g, cycle_graph(five)) is None


@settings(max_examples=80)
@given(graphs(min_n=2, max_n=6), st.data())
def test_agrees_with_closure_search(g, data):
    k = data.draw(st.integers(1, len(g)))
    keep = data.draw(st.permutations(g.vertices))[:k]
    pairs = list(itertools.combinations(sorted(keep), 2))
    mask = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    target = LabeledGraph(keep, [p for p, b in zip(pairs, mask) if b])
    reachable = vertex_minors_by_closure(g)
    core = induced_subgraph(target, [v for v in target.vertices if target.degree(v)])
    expected = closure_key(core) in reachable
    plan = vertex_minor_bruteforce(g, target)
    assert (plan is not None) == expected
    if plan is not None:
        assert apply_plan(g, plan) == core


@settings(max_examples=40)
@given(graphs(min_n=3, max_n=7), st.data())
def test_elimination_order_does_not_matter(g, data):
    k = data.draw(st.integers(max(1, len(g) - 4), len(g)))
    keep = sorted(data.draw(st.permutations(g.vertices))[:k])
    answers = {
        star_minor_bruteforce(g, keep, rng=random.Random(seed)) is not None for seed in range(4)
    }
    assert len(answers) == 1


@settings(max_examples=40)
@given(graphs(min_n=3, max_n=6), st.data())
def test_lc_equivalent_hosts_agree(g, data):
    v = data.draw(st.sampled_from(g.vertices))
    h = local_complement(g, v)
    keep = sorted(data.draw(st.permutations(g.vertices))[:3])
    for edges in [[(0, 1), (1, 2)], [(0, 1), (0, 2), (1, 2)]]:
        target = LabeledGraph(keep, [(keep[a], keep[b]) for a, b in edges])
        assert is_vertex_minor(g, target) == is_vertex_minor(h, target)


def test_isolated_target_vertices_are_stripped():
    g = complete_graph(range(4))
    target = LabeledGraph(range(3), [(0, 1)])
    plan = vertex_minor_bruteforce(g, target)
    assert plan.target_vertices == frozenset({0, 1})
    assert apply_plan(g, plan) == complete_graph([0, 1])


def test_budget_and_target_errors():
    rng = random.Random(3)
    g = random_graph(8, 0.5, rng)
    with pytest.raises(BudgetExceeded):
        vertex_minor_bruteforce(g, cycle_graph([0, 1, 2, 3]), budget=5)
    with pytest.raises(InvalidTarget):
        vertex_minor_bruteforce(g, complete_graph([0, 99]))


def test_disconnected_host_cannot_join_components():
    g = LabeledGraph(range(4), [(0, 1), (2, 3)])
    assert not is_connected(g)
    assert vertex_minor_bruteforce(g, complete_graph([0, 2])) is None
