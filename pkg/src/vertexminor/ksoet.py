"""Fixed-parameter search for semi-ordered Eulerian tours.

For k marked vertices every marked vertex v is split into two degree-two
vertices (v, "a") and (v, "b"), one per visit. A SOET with order s exists
exactly when, for some splitting and some order, the split graph has
edge-disjoint paths joining the a-copies of consecutive letters in a cycle
and the b-copies likewise. The paths are then stitched at the first letter
and the unused edges are spliced in as closed trails.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

from .circle import EulerianTour, MultiGraph, eulerian_tour, require_four_regular
from .errors import BudgetExceeded, Disconnected, UnknownVertex
from .graph import Label, label_key, sort_labels
from .soet import SoetWitness, is_soet

DEFAULT_MAX_MARKED = int(os.environ.get("VERTEXMINOR_KSOET_MAX_MARKED", "5"))
DEFAULT_PATH_BUDGET = int(os.environ.get("VERTEXMINOR_KSOET_BUDGET", "2000000"))


@dataclass(frozen=True)
class SoetSplitting:
    """A split graph plus, per marked vertex, the edge ends moved to each copy.

    Edge ends are (edge id, end) pairs with end 0 or 1, so both ends of a
    self-loop can be told apart.
    """

    split_graph: MultiGraph
    pairing: dict


def _ends(f: MultiGraph, v: Label) -> list[tuple]:
    out = []
    for e in dict.fromkeys(f.incident(v)):
        a, b = f.endpoints(e)
        if a == v:
            out.append((e, 0))
        if b == v:
            out.append((e, 1))
    return out


def _assignments(ends: list) -> list[tuple[tuple, tuple]]:
    """The six labelled 2+2 splits of four edge ends."""
    out = []
    for pick in combinations(range(4), 2):
        a = tuple(ends[i] for i in pick)
        b = tuple(ends[i] for i in range(4) if i not in pick)
        out.append((a, b))
    return out


def _split_graph(f: MultiGraph, pairing: dict) -> MultiGraph:
    where: dict = {}
    for v, (a, b) in pairing.items():
        for end in a:
            where[end] = (v, "a")
        for end in b:
            where[end] = (v, "b")
    verts = [v for v in f.vertices if v not in pairing]
    for v in pairing:
        verts += [(v, "a"), (v, "b")]
    if len(set(verts)) != len(verts):
        raise ValueError("split vertex labels collide with existing vertices")
    edges = []
    for u, v, e in f.edge_list():
        edges.append((where.get((e, 0), u), where.get((e, 1), v), e))
    return MultiGraph(verts, edges)


def soet_splittings(f: MultiGraph, marked: Iterable[Label], symmetric: bool = True) -> Iterator[SoetSplitting]:
    """Every way of splitting the marked vertices into an a-copy and a b-copy.

    With ``symmetric`` the first marked vertex keeps only one labelling per
    partition, since swapping every a with every b gives the same instance.
    """
    require_four_regular(f)
    marked = sort_labels(set(marked))
    for v in marked:
        if v not in f.vertices:
            raise UnknownVertex(v)
    options = []
    for i, v in enumerate(marked):
        ends = _ends(f, v)
        choices = _assignments(ends)
        if symmetric and i == 0:
            choices = [c for c in choices if ends[0] in c[0]]
        options.append(choices)
    for combo in product(*options):
        pairing = dict(zip(marked, combo))
        yield SoetSplitting(_split_graph(f, pairing), pairing)


def disjoint_paths(
    h: MultiGraph,
    pairs: Sequence[tuple[Label, Label]],
    budget: int = DEFAULT_PATH_BUDGET,
    _counter: list | None = None,
) -> list[tuple[list, list]] | None:
    """Pairwise edge-disjoint simple paths joining each terminal pair.

    Backtracks pair by pair. Among unused parallel edges to the same
    neighbour only the least id is tried. Paths are (vertices, edge ids).
    Returns None when no routing exists; raises BudgetExceeded when the
    search needs more than ``budget`` steps.
    """
    for s, t in pairs:
        for v in (s, t):
            if v not in h.vertices:
                raise UnknownVertex(v)
    counter = _counter if _counter is not None else [0]
    incident = {v: sorted(dict.fromkeys(h.incident(v)), key=label_key) for v in h.vertices}
    used: set = set()
    routes: list = []

    def route(i: int) -> bool:
        if i == len(pairs):
            return True
        s, t = pairs[i]
        vs, es = [s], []
        on_path = {s}

        def step(v) -> bool:
            counter[0] += 1
            if counter[0] > budget:
                raise BudgetExceeded(f"path search exceeded {budget} steps")
            if v == t and (es or s == t):
                routes.append((list(vs), list(es)))
                if route(i + 1):
                    return True
                routes.pop()
                return False
            tried = set()
            for e in incident[v]:
                if e in used:
                    continue
                w = h.other_end(e, v)
                if w in tried or (w in on_path and not (w == t == s)):
                    continue
                tried.add(w)
                used.add(e)
                vs.append(w)
                es.append(e)
                on_path.add(w)
                if step(w):
                    return True
                on_path.discard(w)
                es.pop()
                vs.pop()
                used.discard(e)
            return False

        return step(s)

    return list(routes) if route(0) else None


def candidate_orders(marked: Sequence[Label]) -> Iterator[tuple]:
    """Cyclic orders starting at the least letter, one per reversal pair."""
    marked = sort_labels(set(marked))
    if not marked:
        return
    first, rest = marked[0], marked[1:]
    for perm in permutations(rest):
        if len(perm) >= 2 and label_key(perm[0]) > label_key(perm[-1]):
            continue
        yield (first, *perm)


def _splice_leftovers(f: MultiGraph, vs: list, es: list) -> tuple[list, list]:
    """Insert closed trails covering the edges not yet on the tour."""
    used = set(es)
    while len(used) < f.edge_count:
        left = [(a, b, e) for a, b, e in f.edge_list() if e not in used]
        rest = MultiGraph({x for a, b, _ in left for x in (a, b)}, left)
        comp = rest.components()[0]
        anchor = next(i for i, v in enumerate(vs) if v in comp)
        sub = MultiGraph(comp, [t for t in left if t[0] in comp])
        loop = eulerian_tour(sub, start=vs[anchor])
        vs[anchor + 1 : anchor + 1] = list(loop.vertices[1:]) + [vs[anchor]]
        es[anchor:anchor] = list(loop.edges)
        used.update(loop.edges)
    return vs, es


def _stitch(f: MultiGraph, order: tuple, routes: list) -> EulerianTour:
    merge = {(v, copy): v for v in order for copy in ("a", "b")}
    vs: list = []
    es: list = []
    for pv, pe in routes:
        vs += [merge.get(x, x) for x in pv[:-1]]
        es += pe
    vs, es = _splice_leftovers(f, vs, es)
    return EulerianTour(f, vs, es)


def k_soet(
    f: MultiGraph,
    marked: Iterable[Label],
    budget: int = DEFAULT_PATH_BUDGET,
    max_marked: int = DEFAULT_MAX_MARKED,
) -> SoetWitness | None:
    """A SOET of ``f`` with respect to ``marked``, or None when there is none.

    Every splitting and cyclic order is tried; budget exhaustion raises
    BudgetExceeded and is never reported as a negative.
    """
    require_four_regular(f)
    if not f.is_connected():
        raise Disconnected("k-SOET search needs a connected multigraph")
    marked = sort_labels(set(marked))
    for v in marked:
        if v not in f.vertices:
            raise UnknownVertex(v)
    if len(marked) > max_marked:
        raise BudgetExceeded(f"{len(marked)} marked vertices exceed the cap of {max_marked}")
    if len(marked) <= 1:
        start = marked[0] if marked else None
        return is_soet(eulerian_tour(f, start), marked)
    counter = [0]
    for split in soet_splittings(f, marked):
        h = split.split_graph
        for order in candidate_orders(marked):
            pairs = []
            for copy in ("a", "b"):
                cyc = [(v, copy) for v in order]
                pairs += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
            routes = disjoint_paths(h, pairs, budget, counter)
            if routes is None:
                continue
            w = is_soet(_stitch(f, order, routes), marked)
            if w is None:
                raise AssertionError("stitched tour is not semi-ordered")
            return w
    return None
