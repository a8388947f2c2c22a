"""Semi-ordered Eulerian tours and the cubic-Hamiltonicity reduction.

A semi-ordered Eulerian tour (SOET) with respect to a marked vertex set
visits the marked vertices in some order and then again in the same order.
On the triangular expansion of a cubic graph R such tours exist exactly when
R is Hamiltonian; this module builds the expansion, turns Hamiltonian cycles
into SOETs, repairs SOETs until consecutive marked vertices are adjacent in
R, and reads Hamiltonian cycles back off them.

Expansion vertices keep the labels of R for the original vertices. The outer
vertex of the gadget of v facing neighbour w is labelled ``"v^w"`` and the
inner vertex on the side of w is labelled ``"~v^w"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .circle import (
    EulerianTour,
    MultiGraph,
    alternance_graph,
    eulerian_tour,
    kappa_transform,
)
from .errors import (
    MalformedWitness,
    NotATriangularExpansion,
    NotCubic,
    NotHamiltonianCycle,
)
from .graph import Label, LabeledGraph, sort_labels
from .localops import LC, MZ, TransformationPlan

# ------------------------------------------------------------------ SOETs


@dataclass(frozen=True)
class SoetWitness:
    tour: EulerianTour
    marked: frozenset
    order: tuple

    def induced_word(self) -> tuple:
        return tuple(v for v in self.tour.vertices if v in self.marked)


@dataclass(frozen=True)
class MaximalSubword:
    """Stretch of the tour strictly between two consecutive marked visits."""

    start: Label
    end: Label
    letters: tuple
    edges: tuple
    first_index: int


def is_soet(tour: EulerianTour, marked: Iterable[Label]) -> SoetWitness | None:
    marked = frozenset(marked)
    word = [v for v in tour.vertices if v in marked]
    k = len(marked)
    if len(word) != 2 * k:
        return None
    first, second = word[:k], word[k:]
    if first != second or len(set(first)) != k:
        return None
    return SoetWitness(tour, marked, tuple(first))


def consecutive_pairs(w: SoetWitness) -> set[frozenset]:
    s = w.order
    k = len(s)
    if k < 2:
        return set()
    return {frozenset((s[i], s[(i + 1) % k])) for i in range(k)}


def maximal_subwords(w: SoetWitness) -> list[MaximalSubword]:
    """The 2k stretches between successive marked visits, in tour order."""
    vs, es = w.tour.vertices, w.tour.edges
    m = len(vs)
    hits = [i for i, v in enumerate(vs) if v in w.marked]
    out = []
    for a, b in zip(hits, hits[1:] + hits[:1]):
        span = (b - a) % m or m
        idx = [(a + t) % m for t in range(1, span)]
        letters = tuple(vs[i] for i in idx)
        edges = tuple(es[(a + t) % m] for t in range(span))
        out.append(MaximalSubword(vs[a], vs[b], letters, edges, a))
    return out


def soet_bruteforce(f: MultiGraph, marked: Iterable[Label], budget: int = 2_000_000) -> SoetWitness | None:
    """First SOET among all Eulerian tour classes of ``f``."""
    from .circle import all_eulerian_tours

    marked = frozenset(marked)
    for tour in all_eulerian_tours(f, budget):
        w = is_soet(tour, marked)
        if w is not None:
            return w
    return None


# ----------------------------------------------------- triangular expansion


def outer_label(v: Label, w: Label) -> str:
    return f"{v}^{w}"


def inner_label(v: Label, w: Label) -> str:
    return f"~{v}^{w}"


@dataclass(frozen=True)
class TriangularExpansion:
    multigraph: MultiGraph
    origin: LabeledGraph
    roles: dict
    internal: dict
    crossings: dict

    def owner(self, x: Label) -> Label:
        """Original vertex whose gadget contains ``x``."""
        return self.roles[x][1]

    def crossing_ids(self, v: Label, w: Label) -> tuple:
        return self.crossings[frozenset((v, w))]


def require_cubic(r: LabeledGraph) -> None:
    bad = [v for v in r.vertices if r.degree(v) != 3]
    if bad:
        raise NotCubic(f"vertices without degree 3: {bad!r}")


def triangular_expansion(r: LabeledGraph) -> TriangularExpansion:
    """Replace each vertex by a six-vertex gadget and double every original edge.

    Neighbours are taken in ascending order; the two least get the paths
    through inner vertices and the greatest attaches to both inner vertices.
    """
    require_cubic(r)
    roles: dict = {}
    edges: list = []
    internal: dict = {}
    crossings: dict = {}
    eid = 0

    def add(a, b) -> int:
        nonlocal eid
        edges.append((a, b, eid))
        eid += 1
        return eid - 1

    for v in r.vertices:
        j, jp, jh = r.neighbors(v)
        roles[v] = ("original", v, None)
        for w in (j, jp, jh):
            roles[outer_label(v, w)] = ("outer", v, w)
        for w in (j, jp):
            roles[inner_label(v, w)] = ("inner", v, w)
        vj, vjp, vjh = outer_label(v, j), outer_label(v, jp), outer_label(v, jh)
        tj, tjp = inner_label(v, j), inner_label(v, jp)
        internal[v] = [
            add(v, tj),
            add(v, tjp),
            add(v, vj),
            add(v, vjp),
            add(tj, tjp),
            add(vj, tj),
            add(vjp, tjp),
            add(vjh, tj),
            add(vjh, tjp),
        ]
        for w in (j, jp, jh):
            crossings.setdefault(frozenset((v, w)), []).append(add(outer_label(v, w), outer_label(w, v)))
    f = MultiGraph(roles, edges)
    return TriangularExpansion(f, r, roles, internal, {k: tuple(ids) for k, ids in crossings.items()})


def _require_expansion(x: TriangularExpansion, tour: EulerianTour) -> None:
    if tour.graph is not x.multigraph and tour.graph != x.multigraph:
        raise NotATriangularExpansion("tour does not live on this triangular expansion")


# ------------------------------------------------------------------ skips


@dataclass(frozen=True)
class SkipReport:
    """The pass through a gadget that avoids its original vertex.

    ``kind`` is "skip" or "true_skip" when the pass lies in a maximal
    sub-word between two other marked vertices, "self_pass" when that
    sub-word starts or ends at the gadget's own vertex (which the skip
    definition leaves out), and "none" when no pass avoids the vertex.
    ``count`` is the number of avoiding passes; a SOET has exactly one.
    """

    kind: str
    subword: int | None = None
    entry: Label | None = None
    exit: Label | None = None
    count: int = 0


def _gadget_runs(x: TriangularExpansion, sub: MaximalSubword) -> list[tuple[Label, Label, Label]]:
    """(gadget owner, neighbour entered from, neighbour left to) for each pass through a gadget.

    The leading run in the start gadget and the trailing run in the end
    gadget are left out: they are the walks away from and towards the
    marked endpoints themselves.
    """
    seq = [sub.start, *sub.letters, sub.end]
    owners = [x.owner(a) for a in seq]
    runs = []
    i = 0
    while i < len(seq):
        g = owners[i]
        j = i
        while j + 1 < len(seq) and owners[j + 1] == g:
            j += 1
        if i > 0 and j < len(seq) - 1:
            runs.append((g, owners[i - 1], owners[j + 1]))
        i = j + 1
    return runs


def detect_skips(x: TriangularExpansion, w: SoetWitness) -> dict:
    """Per original vertex, the pass that goes through its gadget without visiting it."""
    _require_expansion(x, w.tour)
    marked = frozenset(x.origin.vertices)
    if w.marked != marked:
        raise NotATriangularExpansion("skip analysis needs the original vertices as the marked set")
    found: dict = {v: [] for v in x.origin.vertices}
    for idx, sub in enumerate(maximal_subwords(w)):
        for g, a, b in _gadget_runs(x, sub):
            found[g].append((idx, a, b, g in (sub.start, sub.end)))
    out = {}
    for v, hits in found.items():
        if not hits:
            out[v] = SkipReport("none")
            continue
        idx, a, b, own = hits[0]
        kind = "self_pass" if own else ("true_skip" if a != b else "skip")
        out[v] = SkipReport(kind, idx, a, b, len(hits))
    return out


def true_skips(x: TriangularExpansion, sub: MaximalSubword) -> list[Label]:
    return [g for g, a, b in _gadget_runs(x, sub) if g not in (sub.start, sub.end) and a != b]


# --------------------------------------------------- Hamiltonian cycles


def is_hamiltonian_cycle(r: LabeledGraph, cycle: Sequence[Label]) -> bool:
    cycle = list(cycle)
    if len(cycle) != len(r) or set(cycle) != set(r.vertices) or len(cycle) < 3:
        return False
    return all(r.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def hamiltonian_cycle(r: LabeledGraph) -> list | None:
    """Backtracking search from the least vertex; None when no cycle exists."""
    n = len(r)
    if n < 3:
        return None
    start = r.vertices[0]
    path = [start]
    on_path = {start}

    def extend() -> bool:
        last = path[-1]
        if len(path) == n:
            return r.has_edge(last, start)
        for w in r.neighbors(last):
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            if extend():
                return True
            path.pop()
            on_path.discard(w)
        return False

    return list(path) if extend() else None


# ------------------------------------------------------ Hamiltonian -> SOET


def _gadget_trails(x: TriangularExpansion, v: Label, enter: Label, leave: Label) -> tuple[list, list]:
    """Two edge-disjoint trails in the gadget of v from ``v^enter`` to ``v^leave``.

    Together they use all nine gadget edges and each passes v exactly once.
    Each trail is returned as (vertices, edge ids).
    """
    f = x.multigraph
    ids = x.internal[v]
    start, goal = outer_label(v, enter), outer_label(v, leave)
    adj: dict = {}
    for e in ids:
        a, b = f.endpoints(e)
        adj.setdefault(a, []).append((e, b))
        adj.setdefault(b, []).append((e, a))

    def trails(avail: frozenset, must_cover: bool):
        out = []
        vs, es = [start], []

        def walk(node, used):
            if node == goal and vs.count(v) == 1 and (not must_cover or len(used) == len(avail)):
                out.append((list(vs), list(es)))
            for e, other in adj[node]:
                if e in avail and e not in used:
                    vs.append(other)
                    es.append(e)
                    walk(other, used | {e})
                    vs.pop()
                    es.pop()

        walk(start, frozenset())
        return out

    full = frozenset(ids)
    for first in sorted(trails(full, False), key=lambda t: (-len(t[1]), t[1])):
        rest = full - set(first[1])
        second = trails(rest, True)
        if second:
            return first, second[0]
    raise MalformedWitness(f"no gadget trail pair for {v!r}")


def soet_from_hamiltonian(x: TriangularExpansion | LabeledGraph, cycle: Sequence[Label]) -> SoetWitness:
    """SOET on the triangular expansion built from a Hamiltonian cycle of its origin."""
    if isinstance(x, LabeledGraph):
        x = triangular_expansion(x)
    r = x.origin
    cycle = list(cycle)
    if not is_hamiltonian_cycle(r, cycle):
        raise NotHamiltonianCycle(f"{cycle!r} is not a Hamiltonian cycle")
    k = len(cycle)
    pairs = []
    for i, v in enumerate(cycle):
        pairs.append(_gadget_trails(x, v, cycle[i - 1], cycle[(i + 1) % k]))
    vs: list = []
    es: list = []
    for copy in (0, 1):
        for i, v in enumerate(cycle):
            tv, te = pairs[i][copy]
            vs += tv
            es += te + [x.crossing_ids(v, cycle[(i + 1) % k])[copy]]
    # walk every chord of the cycle back and forth over its two copies
    on_cycle = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    done: set = set()
    i = 0
    while i < len(vs):
        a = vs[i]
        role = x.roles[a]
        if role[0] == "outer":
            key = frozenset((role[1], role[2]))
            if key not in on_cycle and key not in done:
                done.add(key)
                e1, e2 = x.crossing_ids(role[1], role[2])
                vs[i + 1 : i + 1] = [outer_label(role[2], role[1]), a]
                es[i:i] = [e1, e2]
                i += 2
        i += 1
    tour = EulerianTour(x.multigraph, vs, es)
    if not tour.is_valid():
        raise MalformedWitness("constructed walk is not an Eulerian tour")
    w = is_soet(tour, r.vertices)
    if w is None:
        raise MalformedWitness("constructed tour is not semi-ordered")
    return w


# --------------------------------------------------- SOET -> HAMSOET -> cycle


def nonadjacent_consecutive(r: LabeledGraph, w: SoetWitness) -> list[tuple]:
    out = []
    for pair in consecutive_pairs(w):
        a, b = sort_labels(pair)
        if not r.has_edge(a, b):
            out.append((a, b))
    return sorted(out, key=lambda p: (sort_labels(p), repr(p)))


def is_hamsoet(x: TriangularExpansion, w: SoetWitness) -> bool:
    return not nonadjacent_consecutive(x.origin, w)


def _repair_candidates(r: LabeledGraph, u, v, s, t) -> list[tuple]:
    """kappa-vertex pairs that rewire a valid 11-skip (u, v consecutive; s, t skipped gadgets)."""
    out = []
    for a, b in ((u, v), (v, u)):
        for p, q in ((s, t), (t, s)):
            if r.has_edge(b, p) and r.has_edge(q, a):
                out.append((outer_label(b, p), outer_label(q, a)))
            if r.has_edge(p, a) and r.has_edge(b, q):
                out.append((outer_label(p, a), outer_label(b, q)))
    seen = []
    for c in out:
        if c not in seen:
            seen.append(c)
    return seen


def hamsoet_normalize(x: TriangularExpansion, w: SoetWitness) -> SoetWitness:
    """Repair valid 11-skips until every consecutive marked pair is adjacent in the origin."""
    _require_expansion(x, w.tour)
    r = x.origin
    marked = frozenset(r.vertices)
    if w.marked != marked or is_soet(w.tour, marked) is None:
        raise MalformedWitness("not a SOET on the original vertices")
    for _ in range(len(r) + 1):
        bad = nonadjacent_consecutive(r, w)
        if not bad:
            return w
        u, v = bad[0]
        subs = [s for s in maximal_subwords(w) if {s.start, s.end} == {u, v}]
        skips = [true_skips(x, s) for s in subs]
        if len(subs) != 2 or any(len(sk) != 1 for sk in skips):
            raise MalformedWitness(f"pair {u!r},{v!r} is not a valid 11-skip")
        s1, s2 = skips[0][0], skips[1][0]
        for p, q in _repair_candidates(r, u, v, s1, s2):
            for first, second in ((p, q), (q, p)):
                tour = kappa_transform(kappa_transform(w.tour, first), second)
                repaired = is_soet(tour, marked)
                if repaired is not None and len(nonadjacent_consecutive(r, repaired)) < len(bad):
                    w = repaired
                    break
            else:
                continue
            break
        else:
            raise MalformedWitness(f"no template repair for pair {u!r},{v!r}")
    raise MalformedWitness("repair did not converge")


def hamiltonian_from_hamsoet(x: TriangularExpansion, w: SoetWitness) -> list:
    cycle = list(w.order)
    if not is_hamiltonian_cycle(x.origin, cycle):
        raise MalformedWitness("witness order is not a Hamiltonian cycle")
    return cycle


# ------------------------------------------------------- reduction pipeline


@dataclass(frozen=True)
class CubHamInstance:
    graph: LabeledGraph
    targets: frozenset
    expansion: TriangularExpansion
    tour: EulerianTour


def reduce_cubham_to_starvm(r: LabeledGraph) -> CubHamInstance:
    """Circle graph whose star vertex-minor on V(r) exists iff r is Hamiltonian."""
    x = triangular_expansion(r)
    tour = eulerian_tour(x.multigraph)
    return CubHamInstance(alternance_graph(tour.word()), frozenset(r.vertices), x, tour)


def transitions(tour: EulerianTour) -> dict:
    """At each vertex, the pairs of edge ids used consecutively by the tour."""
    m = len(tour.edges)
    out: dict = {}
    for i, v in enumerate(tour.vertices):
        pair = frozenset((tour.edges[i - 1], tour.edges[i]))
        out.setdefault(v, set()).add(pair)
    return {v: frozenset(p) for v, p in out.items()}


def kappa_path(source: EulerianTour, target: EulerianTour) -> list:
    """Vertices whose kappa transformations turn ``source`` into ``target``'s class.

    Works on loopless 4-regular multigraphs by comparing transitions. A
    mismatch at v is fixed by kappa at v when that yields the target
    transition; otherwise v is interlaced with another mismatched vertex w
    and the pair v, w, v fixes both.
    """
    if any(a == b for a, b in (source.graph.endpoints(e) for e in source.graph.edge_ids)):
        raise ValueError("kappa_path needs a loopless multigraph")
    goal = transitions(target)
    cur = source
    path: list = []
    for _ in range(2 * len(goal) + 2):
        now = transitions(cur)
        diff = [v for v in sort_labels(goal) if now[v] != goal[v]]
        if not diff:
            return path
        for v in diff:
            nxt = kappa_transform(cur, v)
            if transitions(nxt)[v] == goal[v]:
                cur = nxt
                path.append(v)
                break
        else:
            v = diff[0]
            word = cur.word()
            a1, a2 = word.positions(v)
            partner = None
            for w in diff[1:]:
                b1, b2 = word.positions(w)
                if (a1 < b1 < a2) != (a1 < b2 < a2):
                    partner = w
                    break
            if partner is None:
                raise MalformedWitness("no interlaced mismatch to pair with")
            for z in (v, partner, v):
                cur = kappa_transform(cur, z)
            path += [v, partner, v]
    raise MalformedWitness("kappa path search did not converge")


def star_plan_from_soet(instance: CubHamInstance, w: SoetWitness) -> TransformationPlan:
    """Plan taking the reduction's circle graph to a star on the targets, built from a SOET."""
    lcs = kappa_path(instance.tour, w.tour)
    center = w.order[0]
    moves = [LC(v) for v in lcs]
    moves += [MZ(v) for v in instance.graph.vertices if v not in instance.targets]
    moves.append(LC(center))
    return TransformationPlan(tuple(moves), frozenset(instance.graph.vertices), instance.targets)


def crossing_pairs(x: TriangularExpansion) -> list:
    return [tuple(sort_labels(k)) for k in x.crossings]



# ------------------------------------------------------------ fixtures


def random_cubic(n: int, seed: int | None = None) -> LabeledGraph:
    """Uniform random simple cubic graph on labels 0..n-1 (n even, n >= 4)."""
    import networkx as nx

    if n < 4 or n % 2:
        raise ValueError("a cubic graph needs an even number of vertices, at least 4")
    h = nx.random_regular_graph(3, n, seed=seed)
    return LabeledGraph(range(n), h.edges())


def bridged_cubic_fixture() -> LabeledGraph:
    """Ten-vertex cubic graph with a bridge: two K4-minus-an-edge blocks joined by a bridged pair.

    Each block's two degree-two vertices attach to one end of the bridge.
    """
    edges = []
    for base, end in ((0, 8), (4, 9)):
        a, b, c, d = range(base, base + 4)
        # K4 minus the edge a-b
        edges += [(a, c), (a, d), (b, c), (b, d), (c, d), (end, a), (end, b)]
    edges.append((8, 9))
    return LabeledGraph(range(10), edges)
