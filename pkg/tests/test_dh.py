from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import dh_by_distances
from vertexminor.dh import (
    foliage,
    grow,
    is_distance_hereditary,
    pruning_sequence,
    random_dh,
    random_dh_with_trace,
    reduce_instance,
)
from vertexminor.errors import NotConnected
from vertexminor.graph import (
    LabeledGraph,
    complete_graph,
    connected_components,
    cut_vertices,
    cycle_graph,
    delete_vertex,
    induced_subgraph,
    is_connected,
    path_graph,
)
from vertexminor.localops import apply_plan
from vertexminor.oracle import star_minor_bruteforce, vertex_minor_bruteforce

dh_sizes = st.integers(1, 9)
seeds = st.integers(0, 2**32 - 1)


@pytest.mark.parametrize("k", [5, 6, 7, 10])
def test_long_path_foliage(k):
    report = foliage(path_graph(range(k)))
    assert report.foliage == {0, 1, k - 2, k - 1}
    assert len(report) == 4


@pytest.mark.parametrize("n", [2, 3, 5])
def test_complete_graph_all_true_twins(n):
    report = foliage(complete_graph(range(n)))
    assert report.foliage == set(range(n))
    assert len(report.true_pairs) == n * (n - 1) // 2 and not report.false_pairs


@given(st.integers(2, 4), seeds)
def test_small_dh_foliage_is_everything(n, seed):
    g = random_dh(n, seed)
    assert len(foliage(g)) == n


def test_recognition_examples():
    assert not is_distance_hereditary(cycle_graph(range(5)))
    assert is_distance_hereditary(LabeledGraph(range(6), [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]))
    c4 = cycle_graph(range(4))
    seq = pruning_sequence(c4)
    assert seq is not None and len(seq) == 3
    # replay: each removed vertex is a leaf or a twin at its turn
    h = c4
    for v in seq:
        report = foliage(h)
        assert v in report.leaves or v in report.twins
        h = delete_vertex(h, v)
    with pytest.raises(NotConnected):
        is_distance_hereditary(LabeledGraph(range(2)))


@settings(max_examples=150)
@given(graphs(min_n=1, max_n=7))
def test_recognition_matches_distance_definition(g):
    if not is_connected(g):
        return
    assert is_distance_hereditary(g) == dh_by_distances(g)


@given(dh_sizes, seeds)
def test_generator_output_is_dh(n, seed):
    g = random_dh(n, seed)
    assert len(g) == n and is_connected(g)
    assert is_distance_hereditary(g)


def test_generator_small_cases():
    assert len(random_dh(1, 0)) == 1
    for mix in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
        assert random_dh(2, 5, *mix) == complete_graph([0, 1])
    with pytest.raises(ValueError):
        random_dh(3, 0, 0.5, 0.5, 0.5)
    with pytest.raises(ValueError):
        random_dh(0, 0)


@given(st.integers(2, 12), seeds)
def test_foliage_size_bound(n, seed):
    assert len(foliage(random_dh(n, seed))) >= min(4, n)


@given(st.integers(2, 12), seeds)
def test_foliage_never_shrinks_along_growth(n, seed):
    g, trace = random_dh_with_trace(n, seed)
    h = LabeledGraph([0])
    sizes = [len(foliage(h))]
    for step in trace:
        op = step.operation
        if op == "false_twin" and not h.neighbors(step.anchor):
            op = "leaf"
        h = grow(h, op, step.anchor, step.added)
        sizes.append(len(foliage(h)))
    assert h == g
    assert all(a <= b for a, b in zip(sizes[1:], sizes[2:]))


@given(graphs(max_n=8))
def test_twin_partners_are_pairwise_twins(g):
    twins = foliage(g).twins
    for v, partners in twins.items():
        for a, b in itertools.combinations(partners, 2):
            assert b in twins[a]
        assert all(v in twins[p] for p in partners)


@given(st.integers(2, 9), seeds, st.data())
def test_connected_induced_subgraphs_stay_dh(n, seed, data):
    g = random_dh(n, seed)
    keep = data.draw(st.sets(st.sampled_from(g.vertices), min_size=1))
    sub = induced_subgraph(g, keep)
    for comp in connected_components(sub):
        assert is_distance_hereditary(induced_subgraph(sub, comp))


def test_reduce_pendant_leaf():
    g = LabeledGraph("abx", [("a", "b"), ("b", "x")])
    reduced, moves = reduce_instance(g, "ab")
    assert reduced == complete_graph("ab")
    assert apply_plan(g, moves) == reduced


@pytest.mark.parametrize("seed", range(40))
def test_reduction_preserves_answers(seed):
    rng = random.Random(seed)
    g = random_dh(rng.randint(4, 8), rng)
    keep = sorted(rng.sample(list(g.vertices), rng.randint(2, 4)))
    reduced, moves = reduce_instance(g, keep)
    assert apply_plan(g, moves) == reduced
    assert set(keep) <= set(reduced.vertices)
    assert (star_minor_bruteforce(g, keep) is None) == (star_minor_bruteforce(reduced, keep) is None)
    pairs = list(itertools.combinations(keep, 2))
    target = LabeledGraph(keep, [p for p in pairs if rng.random() < 0.5])
    assert (vertex_minor_bruteforce(g, target) is None) == (vertex_minor_bruteforce(reduced, target) is None)


@given(st.integers(3, 10), seeds)
def test_cut_vertex_components_hold_foliage(n, seed):
    g = random_dh(n, seed)
    t = foliage(g).foliage
    for cut in cut_vertices(g):
        for comp in connected_components(delete_vertex(g, cut)):
            assert t & set(comp)
