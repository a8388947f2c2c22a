"""Connected targets on at most three vertices.

Any connected graph on two or three vertices of a connected graph is one of
its vertex-minors. The routines here produce explicit plans: local
complementations along shortest paths for pairs and triples, and a
connectivity-preserving elimination for arbitrary small targets.
"""

from __future__ import annotations

from .errors import InvalidTarget, NotConnected
from .graph import (
    Label,
    LabeledGraph,
    induced_subgraph,
    is_connected,
    local_complement,
    shortest_path,
    sort_labels,
)
from .localops import LC, TransformationPlan, elimination_moves


def _path(g: LabeledGraph, a: Label, b: Label) -> list:
    path = shortest_path(g, a, b)
    if path is None:
        raise NotConnected(f"{a!r} and {b!r} lie in different components")
    return path


def make_pair(g: LabeledGraph, a: Label, b: Label) -> TransformationPlan:
    """LCs at the interior of a shortest a-b path; afterwards a and b are adjacent."""
    path = _path(g, a, b)
    moves = tuple(LC(p) for p in path[1:-1])
    return TransformationPlan(moves, frozenset(g.vertices), frozenset(g.vertices))


def make_triple(g: LabeledGraph, a: Label, b: Label, c: Label) -> TransformationPlan:
    """LCs after which {a, b, c} induces a connected graph.

    First a and b are joined along a shortest path. Then a shortest path from
    c to the nearer of a and b is walked, complementing at each interior
    vertex only while c is still non-adjacent to the other one. Starting from
    the nearer end keeps interior vertices away from both a and b, so only
    the vertex next to the start can toggle the a-b edge.
    """
    if len({a, b, c}) != 3:
        raise InvalidTarget("three distinct vertices are needed")
    for v in (a, b, c):
        g.index(v)
    moves = []
    h = g
    for p in _path(h, a, b)[1:-1]:
        h = local_complement(h, p)
        moves.append(LC(p))
    to_b, to_a = _path(h, b, c), _path(h, a, c)
    if len(to_a) < len(to_b):
        a, to_b = b, to_a
    for p in to_b[1:-1]:
        if h.has_edge(a, c):
            break
        h = local_complement(h, p)
        moves.append(LC(p))
    return TransformationPlan(tuple(moves), frozenset(g.vertices), frozenset(g.vertices))


def _match_shape(h: LabeledGraph, target: LabeledGraph) -> list[Label]:
    """At most two LCs turning connected ``h`` into ``target`` on the same three vertices."""
    if h.rows == target.rows:
        return []
    for v in h.vertices:
        if local_complement(h, v).rows == target.rows:
            return [v]
    for v in h.vertices:
        once = local_complement(h, v)
        for w in h.vertices:
            if local_complement(once, w).rows == target.rows:
                return [v, w]
    raise InvalidTarget("remainder and target are not LC-equivalent")


def small_vertex_minor(g: LabeledGraph, target: LabeledGraph) -> TransformationPlan:
    """Plan producing a connected target on at most three vertices.

    Vertices outside the target are removed in ascending order, each by a Z
    measurement when that keeps the graph connected and by a Y measurement
    (LC then delete) otherwise. A final LC or two fixes the shape.
    """
    keep = target.vertices
    if not 1 <= len(keep) <= 3:
        raise InvalidTarget("target must have one to three vertices")
    if not is_connected(target):
        raise InvalidTarget("target must be connected")
    missing = [v for v in keep if v not in g]
    if missing:
        raise InvalidTarget(f"target vertices {missing!r} not in graph")
    if not is_connected(g):
        raise NotConnected("input graph must be connected")
    keep_set = set(keep)
    moves = []
    h = g
    for v in sort_labels(u for u in g.vertices if u not in keep_set):
        for basis in ("Z", "Y"):
            nxt, move = elimination_moves(h, v, basis)
            if is_connected(nxt):
                break
        else:
            raise NotConnected(f"no measurement of {v!r} keeps the graph connected")
        h = nxt
        moves.append(move)
    # vertex order in h follows g, target order may differ
    h = induced_subgraph(h, keep)
    aligned = induced_subgraph(target, h.vertices)
    moves += [LC(v) for v in _match_shape(h, aligned)]
    return TransformationPlan(tuple(moves), frozenset(g.vertices), frozenset(keep))
