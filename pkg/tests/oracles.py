"""Independent slow checks used as ground truth by the test suite."""

from __future__ import annotations

import itertools
from itertools import combinations

from vertexminor.circle import EulerianTour, MultiGraph
from vertexminor.graph import LabeledGraph


def _bfs(adj: dict, s) -> dict:
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def dh_by_distances(g: LabeledGraph) -> bool:
    """Connected induced subgraphs keep their distances, checked over every vertex subset."""
    verts = list(g.vertices)
    adj = {v: set(g.neighbors(v)) for v in verts}
    full = {v: _bfs(adj, v) for v in verts}
    for size in range(2, len(verts) + 1):
        for subset in combinations(verts, size):
            keep = set(subset)
            sub = {v: adj[v] & keep for v in subset}
            dist = {v: _bfs(sub, v) for v in subset}
            if len(dist[subset[0]]) < size:
                continue
            if any(dist[a][b] != full[a][b] for a, b in combinations(subset, 2)):
                return False
    return True


def soets_by_search(f: MultiGraph, marked, limit: int | None = None, node_budget: int = 5_000_000, prefix=()):
    """Yield Eulerian tours that visit ``marked`` as s then s again.

    Tours are grown edge by edge from the least marked vertex, or from the
    first letter of ``prefix``, which the order must start with. A branch dies
    as soon as its marked visits break the pattern or the unused edges stop
    being reachable from the current vertex.
    """
    marked = frozenset(marked)
    k = len(marked)
    prefix = list(prefix)
    start = prefix[0] if prefix else min(marked, key=lambda v: (type(v).__name__, v) if not isinstance(v, int) else ("", v))
    total = f.edge_count
    used: set = set()
    vs, es = [start], []
    seq = [start]
    state = {"nodes": 0, "count": 0}
    bit = {e: 1 << i for i, e in enumerate(f.edge_ids)}
    dead: set = set()

    def reachable(v) -> bool:
        if len(used) == total:
            return True
        seen = {v}
        stack = [v]
        touched = 0
        edges_seen = set()
        while stack:
            a = stack.pop()
            for e in f.incident(a):
                if e in used or e in edges_seen:
                    continue
                edges_seen.add(e)
                touched += 1
                b = f.other_end(e, a)
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        return len(edges_seen) == total - len(used)

    def walk(v):
        key = (v, sum(bit[e] for e in used), tuple(seq))
        if key in dead:
            return
        before = state["count"] + state.get("yielded", 0)
        for tour in _walk(v):
            state["yielded"] = state.get("yielded", 0) + 1
            yield tour
        if state["count"] + state.get("yielded", 0) == before:
            dead.add(key)

    def _walk(v):
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise RuntimeError("search budget exhausted")
        if len(used) == total:
            if v == start and len(seq) == 2 * k:
                yield EulerianTour(f, list(vs[:-1]), list(es))
            return
        tried = set()
        for e in f.incident(v):
            if e in used or e in tried:
                continue
            tried.add(e)
            b = f.other_end(e, v)
            pushed = False
            closing = len(used) + 1 == total
            if b in marked and not closing:
                m = len(seq)
                if m < len(prefix) and prefix[m] != b:
                    continue
                if m < k:
                    if b in seq:
                        continue
                elif m >= 2 * k or seq[m - k] != b:
                    continue
                seq.append(b)
                pushed = True
            used.add(e)
            vs.append(b)
            es.append(e)
            if reachable(b):
                yield from walk(b)
            used.discard(e)
            vs.pop()
            es.pop()
            if pushed:
                seq.pop()

    for tour in walk(start):
        yield tour
        state["count"] += 1
        if limit is not None and state["count"] >= limit:
            return


def _lc_edges(vertices: frozenset, edges: frozenset, v) -> frozenset:
    nbrs = [u for u in vertices if frozenset((u, v)) in edges]
    flip = {frozenset((a, b)) for a, b in combinations(nbrs, 2)}
    return edges ^ flip


def vertex_minors_by_closure(g: LabeledGraph) -> set:
    """Every (vertex set, edge set) reachable by local complementations and deletions in any order."""
    start = (frozenset(g.vertices), frozenset(frozenset(e) for e in g.edges()))
    seen = {start}
    stack = [start]
    while stack:
        vertices, edges = stack.pop()
        for v in vertices:
            nxt = [(vertices, _lc_edges(vertices, edges, v))]
            rest = vertices - {v}
            nxt.append((rest, frozenset(e for e in edges if v not in e)))
            for state in nxt:
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return seen


def closure_key(target: LabeledGraph) -> tuple:
    return frozenset(target.vertices), frozenset(frozenset(e) for e in target.edges())


def _interleaved(word, a, b) -> bool:
    pa = [i for i, x in enumerate(word) if x == a]
    pb = [i for i, x in enumerate(word) if x == b]
    return (pa[0] < pb[0] < pa[1] < pb[1]) or (pb[0] < pa[0] < pb[1] < pa[1])


def double_occurrence_words(letters):
    """Every double occurrence word on ``letters`` starting with the first letter."""
    letters = list(letters)
    n = len(letters)
    if n == 0:
        yield ()
        return
    counts = {a: 0 for a in letters}
    word = [letters[0]]
    counts[letters[0]] = 1

    def extend():
        if len(word) == 2 * n:
            yield tuple(word)
            return
        for a in letters:
            if counts[a] < 2:
                counts[a] += 1
                word.append(a)
                yield from extend()
                word.pop()
                counts[a] -= 1

    yield from extend()


def realize_circle_graph(g: LabeledGraph):
    """A double occurrence word whose interlacement graph is ``g``, by exhaustive search."""
    want = {frozenset(e) for e in g.edges()}
    for word in double_occurrence_words(g.vertices):
        if {frozenset((a, b)) for a, b in combinations(g.vertices, 2) if _interleaved(word, a, b)} == want:
            return word
    return None


def hamiltonian_by_permutations(r: LabeledGraph) -> bool:
    """Hamiltonicity by trying every ordering of the vertices after the first."""
    first, *rest = r.vertices
    for perm in itertools.permutations(rest):
        cycle = (first, *perm)
        if all(r.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))):
            return True
    return False


def lu_pattern_exists(g: LabeledGraph, upper, lower) -> bool:
    """Some u1, u2 in upper and l1, l2 in lower with u1~l1, u2~l2 and neither cross edge."""
    for u1, u2 in itertools.permutations(upper, 2):
        for l1, l2 in itertools.permutations(lower, 2):
            if g.has_edge(u1, l1) and g.has_edge(u2, l2) and not g.has_edge(u1, l2) and not g.has_edge(u2, l1):
                return True
    return False
