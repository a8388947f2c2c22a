"""Labeled simple graphs and the rewriting primitives of the vertex-minor calculus.

Vertices are opaque labels (ints or strings) kept in a fixed total order.
Adjacency is stored as one Python int per vertex used as a bitset over the
dense index of each label, so a local complementation is a handful of XORs.
Graphs are immutable; every operation returns a new graph.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Iterator, NamedTuple, Sequence

from .errors import NotAnEdge, UnknownVertex

Label = Hashable


def label_key(label: Label) -> tuple:
    """Sort key giving a total order on mixed int/str labels (ints first)."""
    if isinstance(label, bool):
        return (0, int(label), "")
    if isinstance(label, int):
        return (0, label, "")
    if isinstance(label, tuple):
        return (2, 0, "", tuple(label_key(part) for part in label))
    return (1, 0, str(label))


def sort_labels(labels: Iterable[Label]) -> list:
    return sorted(labels, key=label_key)


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _drop_bit(row: int, i: int) -> int:
    low = row & ((1 << i) - 1)
    return low | ((row >> (i + 1)) << i)


class LabeledGraph:
    """Simple undirected graph over an ordered set of labels."""

    __slots__ = ("_vertices", "_index", "_rows", "_hash")

    def __init__(self, vertices: Iterable[Label] = (), edges: Iterable[tuple[Label, Label]] = ()):
        verts = sort_labels(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for u, v in edges:
            if u not in index:
                raise UnknownVertex(u)
            if v not in index:
                raise UnknownVertex(v)
            if u == v:
                raise ValueError(f"self-loop at {u!r} is not allowed in a simple graph")
            i, j = index[u], index[v]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self._vertices = tuple(verts)
        self._index = index
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Label, Label]], vertices: Iterable[Label] = ()) -> "LabeledGraph":
        edges = list(edges)
        verts = set(vertices)
        for u, v in edges:
            verts.add(u)
            verts.add(v)
        return cls(verts, edges)

    @classmethod
    def _raw(cls, vertices: tuple, index: dict, rows: tuple) -> "LabeledGraph":
        g = cls.__new__(cls)
        g._vertices = vertices
        g._index = index
        g._rows = rows
        g._hash = None
        return g

    # basic queries

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bitsets in vertex order; also the graph's serialization key."""
        return self._rows

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[Label]:
        return iter(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def index(self, v: Label) -> int:
        try:
            return self._index[v]
        except (KeyError, TypeError):
            raise UnknownVertex(v) from None

    def row(self, v: Label) -> int:
        return self._rows[self.index(v)]

    def mask(self, vs: Iterable[Label]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index(v)
        return m

    def labels(self, bits: int) -> list:
        return [self._vertices[i] for i in iter_bits(bits)]

    def neighbors(self, v: Label) -> list:
        """Neighbors of ``v`` in vertex order."""
        return self.labels(self.row(v))

    def degree(self, v: Label) -> int:
        return self.row(v).bit_count()

    def has_edge(self, u: Label, v: Label) -> bool:
        return bool(self.row(u) >> self.index(v) & 1)

    def edges(self) -> list[tuple]:
        out = []
        for i, r in enumerate(self._rows):
            for j in iter_bits(r >> (i + 1)):
                out.append((self._vertices[i], self._vertices[i + 1 + j]))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def min_label(self, vs: Iterable[Label]) -> Label:
        return min(vs, key=label_key)

    # value semantics

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"LabeledGraph(vertices={list(self._vertices)!r}, edges={self.edges()!r})"

    def with_rows(self, rows: Sequence[int]) -> "LabeledGraph":
        return LabeledGraph._raw(self._vertices, self._index, tuple(rows))

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(self._vertices)
        h.add_edges_from(self.edges())
        return h


# constructors


def empty_graph(vertices: Iterable[Label]) -> LabeledGraph:
    return LabeledGraph(vertices)


def complete_graph(vertices: Iterable[Label]) -> LabeledGraph:
    vs = sort_labels(set(vertices))
    return LabeledGraph(vs, [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))])


def star_graph(vertices: Iterable[Label], center: Label) -> LabeledGraph:
    vs = set(vertices)
    if center not in vs:
        raise UnknownVertex(center)
    return LabeledGraph(vs, [(center, v) for v in vs if v != center])


def path_graph(vertices: Sequence[Label]) -> LabeledGraph:
    return LabeledGraph(vertices, list(zip(vertices, vertices[1:])))


def cycle_graph(vertices: Sequence[Label]) -> LabeledGraph:
    edges = list(zip(vertices, vertices[1:]))
    if len(vertices) > 2:
        edges.append((vertices[-1], vertices[0]))
    return LabeledGraph(vertices, edges)


# rewriting primitives


def local_complement(g: LabeledGraph, v: Label) -> LabeledGraph:
    """Complement the subgraph induced on the neighborhood of ``v``."""
    i = g.index(v)
    rows = list(g.rows)
    nv = rows[i]
    for j in iter_bits(nv):
        rows[j] ^= nv & ~(1 << j)
    return g.with_rows(rows)


def pivot(g: LabeledGraph, u: Label, v: Label) -> LabeledGraph:
    """Pivot on the edge ``(u, v)``: local complementation at v, u, v in turn."""
    if not g.has_edge(u, v):
        raise NotAnEdge((u, v))
    return local_complement(local_complement(local_complement(g, v), u), v)


def pivot_at_vertex(g: LabeledGraph, v: Label) -> LabeledGraph:
    """Pivot on ``(v, w)`` with ``w`` the least neighbor of ``v``; identity if isolated."""
    r = g.row(v)
    if not r:
        return g
    w = g.vertices[(r & -r).bit_length() - 1]
    return pivot(g, v, w)


def induced_subgraph(g: LabeledGraph, keep: Iterable[Label]) -> LabeledGraph:
    keep_idx = sorted({g.index(v) for v in keep})
    if len(keep_idx) == len(g):
        return g
    verts = tuple(g.vertices[i] for i in keep_idx)
    remap = {old: new for new, old in enumerate(keep_idx)}
    keep_mask = 0
    for i in keep_idx:
        keep_mask |= 1 << i
    rows = []
    for i in keep_idx:
        r = 0
        for j in iter_bits(g.rows[i] & keep_mask):
            r |= 1 << remap[j]
        rows.append(r)
    return LabeledGraph._raw(verts, {v: k for k, v in enumerate(verts)}, tuple(rows))


def delete_vertex(g: LabeledGraph, v: Label) -> LabeledGraph:
    i = g.index(v)
    verts = g.vertices[:i] + g.vertices[i + 1 :]
    rows = tuple(_drop_bit(r, i) for k, r in enumerate(g.rows) if k != i)
    return LabeledGraph._raw(verts, {w: k for k, w in enumerate(verts)}, rows)


def delete_vertices(g: LabeledGraph, vs: Iterable[Label]) -> LabeledGraph:
    drop = set(vs)
    for v in drop:
        g.index(v)
    return induced_subgraph(g, [v for v in g.vertices if v not in drop])


def complement(g: LabeledGraph) -> LabeledGraph:
    full = (1 << len(g)) - 1
    return g.with_rows([(~r & full) & ~(1 << i) for i, r in enumerate(g.rows)])


# shape classification and queries


class Shape(NamedTuple):
    kind: str  # "complete", "star" or "other"
    center: Label | None = None


def classify(g: LabeledGraph) -> Shape:
    """Return ``Shape("complete")``, ``Shape("star", c)`` or ``Shape("other")``.

    Complete is tested first, so K1 and K2 report as complete.
    """
    n = len(g)
    full = (1 << n) - 1
    if all(r == full & ~(1 << i) for i, r in enumerate(g.rows)):
        return Shape("complete")
    hubs = [i for i, r in enumerate(g.rows) if r == full & ~(1 << i)]
    if len(hubs) == 1:
        c = hubs[0]
        if all(r == 1 << c for i, r in enumerate(g.rows) if i != c):
            return Shape("star", g.vertices[c])
    return Shape("other")


def is_star(g: LabeledGraph, center: Label | None = None) -> bool:
    """True when ``g`` is a star; K2 counts as a star with either center."""
    n = len(g)
    if n == 0:
        return False
    if n <= 2:
        return classify(g).kind == "complete" and (center is None or center in g)
    shape = classify(g)
    return shape.kind == "star" and (center is None or shape.center == center)


def _component_bits(g: LabeledGraph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    rows = g.rows
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= rows[i]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: LabeledGraph) -> list[list]:
    """Components as label lists, ordered by their least vertex."""
    left = (1 << len(g)) - 1
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = _component_bits(g, start, left)
        out.append(g.labels(comp))
        left &= ~comp
    return out


def is_connected(g: LabeledGraph) -> bool:
    if len(g) == 0:
        return True
    full = (1 << len(g)) - 1
    return _component_bits(g, 0, full) == full


def component_of(g: LabeledGraph, v: Label) -> list:
    return g.labels(_component_bits(g, g.index(v), (1 << len(g)) - 1))


def shortest_path(g: LabeledGraph, source: Label, target: Label) -> list | None:
    """Breadth-first shortest path; ties go to the least label. None if unreachable."""
    s, t = g.index(source), g.index(target)
    if s == t:
        return [source]
    parent = {s: None}
    queue = deque([s])
    while queue:
        i = queue.popleft()
        for j in iter_bits(g.rows[i]):
            if j in parent:
                continue
            parent[j] = i
            if j == t:
                path = [j]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return [g.vertices[k] for k in reversed(path)]
            queue.append(j)
    return None


def distance(g: LabeledGraph, u: Label, v: Label) -> float:
    path = shortest_path(g, u, v)
    return float("inf") if path is None else len(path) - 1


def all_distances(g: LabeledGraph) -> list[list[float]]:
    n = len(g)
    out = []
    for s in range(n):
        dist = [float("inf")] * n
        dist[s] = 0
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= g.rows[i]
            nxt &= ~seen
            for j in iter_bits(nxt):
                dist[j] = d
            seen |= nxt
            frontier = nxt
        out.append(dist)
    return out


def cut_vertices(g: LabeledGraph) -> list:
    """Vertices whose removal increases the number of components."""
    full = (1 << len(g)) - 1
    out = []
    for i, v in enumerate(g.vertices):
        comp = _component_bits(g, i, full)
        rest = comp & ~(1 << i)
        if not rest:
            continue
        start = (rest & -rest).bit_length() - 1
        if _component_bits(g, start, rest) != rest:
            out.append(v)
    return out
