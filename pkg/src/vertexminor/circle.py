"""Double occurrence words, 4-regular multigraphs and their Eulerian tours.

A double occurrence word (DOW) lists every letter exactly twice. Its
alternance graph joins two letters whose occurrences interleave. Reading the
vertices visited by an Eulerian tour of a 4-regular multigraph gives a DOW,
and reversing the first closed sub-trail at a vertex acts on that word as a
local complementation acts on its alternance graph.

Tours are stored as two parallel lists: ``vertices[i]`` is the i-th vertex
visited and ``edges[i]`` is the id of the edge leaving it towards
``vertices[i + 1]`` (cyclically). A self-loop is one step from a vertex back
to itself, so the vertex shows up twice in a row in the word.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExceeded,
    MalformedWord,
    NotEulerian,
    NotFourRegular,
    UnknownLetter,
    UnknownVertex,
)
from .graph import Label, LabeledGraph, label_key, sort_labels


# ---------------------------------------------------------------- words


class DoubleOccurrenceWord:
    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Label]):
        letters = tuple(letters)
        counts: dict = defaultdict(int)
        for a in letters:
            counts[a] += 1
        odd = [a for a, k in counts.items() if k != 2]
        if odd:
            raise MalformedWord(f"letters not occurring exactly twice: {odd!r}")
        self.letters = letters

    @classmethod
    def parse(cls, text: str) -> "DoubleOccurrenceWord":
        """Whitespace-separated letters; a token without spaces is split per character."""
        parts = text.split()
        if len(parts) == 1 and len(parts[0]) > 1:
            parts = list(parts[0])
        return cls(_parse_label(p) for p in parts)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DoubleOccurrenceWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"DoubleOccurrenceWord({' '.join(map(str, self.letters))!r})"

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    @property
    def vertices(self) -> list:
        return sort_labels(set(self.letters))

    def positions(self, v: Label) -> tuple[int, int]:
        idx = [i for i, a in enumerate(self.letters) if a == v]
        if not idx:
            raise UnknownLetter(v)
        return idx[0], idx[1]

    def canonical(self) -> tuple:
        """Least representative over rotations and the reflection."""
        return _least_rotation(self.letters, key=lambda seq: [label_key(a) for a in seq])

    def equivalent(self, other: "DoubleOccurrenceWord") -> bool:
        return self.canonical() == other.canonical()


def _parse_label(token: str) -> Label:
    try:
        return int(token)
    except ValueError:
        return token


def _least_rotation(seq: Sequence, key) -> tuple:
    n = len(seq)
    if n == 0:
        return ()
    rev = list(reversed(seq))
    candidates = [tuple(seq[i:]) + tuple(seq[:i]) for i in range(n)]
    candidates += [tuple(rev[i:]) + tuple(rev[:i]) for i in range(n)]
    return min(candidates, key=key)


def as_word(x) -> DoubleOccurrenceWord:
    if isinstance(x, DoubleOccurrenceWord):
        return x
    if isinstance(x, str):
        return DoubleOccurrenceWord.parse(x)
    return DoubleOccurrenceWord(x)


def alternance_graph(x) -> LabeledGraph:
    """Graph on the letters joining each interleaved pair u..v..u..v."""
    x = as_word(x)
    first: dict = {}
    span: dict = {}
    for i, a in enumerate(x.letters):
        if a in first:
            span[a] = (first[a], i)
        else:
            first[a] = i
    letters = list(span)
    edges = []
    for ai in range(len(letters)):
        u = letters[ai]
        i1, i2 = span[u]
        for bi in range(ai + 1, len(letters)):
            v = letters[bi]
            j1, j2 = span[v]
            if (i1 < j1 < i2) != (i1 < j2 < i2):
                edges.append((u, v))
    return LabeledGraph(letters, edges)


def word_local_complement(x, v: Label) -> DoubleOccurrenceWord:
    """Reverse the block strictly between the two occurrences of ``v``."""
    x = as_word(x)
    i, j = x.positions(v)
    s = x.letters
    return DoubleOccurrenceWord(s[: i + 1] + s[i + 1 : j][::-1] + s[j:])


def word_delete(x, v: Label) -> DoubleOccurrenceWord:
    x = as_word(x)
    x.positions(v)
    return DoubleOccurrenceWord(a for a in x.letters if a != v)


def word_induce(x, keep: Iterable[Label]) -> DoubleOccurrenceWord:
    x = as_word(x)
    keep = set(keep)
    for v in keep:
        x.positions(v)
    return DoubleOccurrenceWord(a for a in x.letters if a in keep)


# ----------------------------------------------------------- multigraphs


class MultiGraph:
    """Undirected multigraph with unique edge ids; self-loops allowed."""

    __slots__ = ("vertices", "_edges", "_incident")

    def __init__(self, vertices: Iterable[Label], edges: Iterable[tuple[Label, Label, Label]]):
        self.vertices = tuple(sort_labels(set(vertices)))
        known = set(self.vertices)
        self._edges: dict = {}
        self._incident: dict = {v: [] for v in self.vertices}
        for u, v, eid in edges:
            for w in (u, v):
                if w not in known:
                    raise UnknownVertex(w)
            if eid in self._edges:
                raise ValueError(f"duplicate edge id {eid!r}")
            self._edges[eid] = (u, v)
            self._incident[u].append(eid)
            if u != v:
                self._incident[v].append(eid)
            else:
                self._incident[u].append(eid)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Label, Label]], vertices: Iterable[Label] = ()) -> "MultiGraph":
        pairs = list(pairs)
        verts = set(vertices)
        for u, v in pairs:
            verts.update((u, v))
        return cls(verts, [(u, v, i) for i, (u, v) in enumerate(pairs)])

    def __repr__(self) -> str:
        return f"MultiGraph({list(self.vertices)!r}, {self.edge_list()!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiGraph) and self.vertices == other.vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(sorted(self._edges.items(), key=lambda kv: repr(kv)))))

    @property
    def edge_ids(self) -> list:
        return list(self._edges)

    def edge_list(self) -> list[tuple]:
        return [(u, v, e) for e, (u, v) in self._edges.items()]

    def endpoints(self, eid: Label) -> tuple[Label, Label]:
        return self._edges[eid]

    def other_end(self, eid: Label, v: Label) -> Label:
        a, b = self._edges[eid]
        return b if a == v else a

    def incident(self, v: Label) -> list:
        """Edge ids at ``v``; a self-loop is listed twice (once per end)."""
        return list(self._incident[v])

    def degree(self, v: Label) -> int:
        return len(self._incident[v])

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def is_four_regular(self) -> bool:
        return all(self.degree(v) == 4 for v in self.vertices)

    def components(self) -> list[list]:
        seen: set = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for e in self._incident[v]:
                    w = self.other_end(e, v)
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            out.append(sort_labels(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_networkx(self):
        import networkx as nx

        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for e, (u, v) in self._edges.items():
            g.add_edge(u, v, key=e)
        return g


# ----------------------------------------------------------------- tours


@dataclass(frozen=True)
class EulerianTour:
    graph: MultiGraph
    vertices: tuple
    edges: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def word(self) -> DoubleOccurrenceWord:
        """The vertex sequence m(U); a DOW when the graph is 4-regular."""
        return DoubleOccurrenceWord(self.vertices)

    def steps(self) -> list:
        """Alternating vertex, edge, vertex, ... closing on the start."""
        out: list = []
        for v, e in zip(self.vertices, self.edges):
            out += [v, e]
        return out + [self.vertices[0]] if self.vertices else out

    def key(self) -> tuple:
        """Class key, invariant under rotation and reversal of the tour."""
        m = len(self.edges)
        if m == 0:
            return ()
        fwd = list(zip(self.vertices, self.edges))
        vs, es = self.vertices, self.edges
        back = [(vs[0], es[m - 1])] + [(vs[i], es[i - 1]) for i in range(m - 1, 0, -1)]
        best = None
        for seq in (fwd, back):
            for r in range(m):
                cand = tuple(seq[r:] + seq[:r])
                k = [(label_key(v), label_key(e)) for v, e in cand]
                if best is None or k < best[0]:
                    best = (k, cand)
        return best[1]

    def is_valid(self) -> bool:
        g = self.graph
        m = len(self.edges)
        if m != g.edge_count or len(self.vertices) != m or sorted(map(repr, self.edges)) != sorted(map(repr, g.edge_ids)):
            return False
        for i, e in enumerate(self.edges):
            a, b = g.endpoints(e)
            u, v = self.vertices[i], self.vertices[(i + 1) % m]
            if {a, b} != {u, v} or (a == b) != (u == v):
                return False
        return True


def _require_tour(ok: bool, msg: str) -> None:
    if not ok:
        raise NotEulerian(msg)


def eulerian_tour(f: MultiGraph, start: Label | None = None) -> EulerianTour:
    """Hierholzer's construction taking the lowest unused edge id at each step."""
    _require_tour(all(f.degree(v) % 2 == 0 for v in f.vertices), "odd degree vertex")
    touched = [v for v in f.vertices if f.degree(v)]
    if not touched:
        return EulerianTour(f, (), ())
    sub = [c for c in f.components() if any(f.degree(v) for v in c)]
    _require_tour(len(sub) == 1, "edges lie in more than one component")
    if start is None:
        start = touched[0]
    unused = {v: sorted(set(f.incident(v)), key=label_key, reverse=True) for v in f.vertices}
    used: set = set()
    stack: list = [(start, None)]
    circuit: list = []
    while stack:
        v, via = stack[-1]
        nxt = unused[v]
        while nxt and nxt[-1] in used:
            nxt.pop()
        if nxt:
            e = nxt.pop()
            used.add(e)
            stack.append((f.other_end(e, v), e))
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    vertices = [v for v, _ in circuit[:-1]]
    edges = [e for _, e in circuit[1:]]
    return EulerianTour(f, vertices, edges)


def kappa_transform(u: EulerianTour, v: Label) -> EulerianTour:
    """Reverse the first closed sub-trail from ``v`` back to ``v``."""
    idx = [i for i, w in enumerate(u.vertices) if w == v]
    if len(idx) < 2:
        raise UnknownVertex(v)
    i, j = idx[0], idx[1]
    vs, es = u.vertices, u.edges
    return EulerianTour(u.graph, vs[: i + 1] + vs[i + 1 : j][::-1] + vs[j:], es[:i] + es[i:j][::-1] + es[j:])


def tour_alternance_graph(u: EulerianTour) -> LabeledGraph:
    return alternance_graph(u.word())


def multigraph_from_word(x) -> tuple[MultiGraph, EulerianTour]:
    """Close the letter positions into a cycle and merge equal letters.

    Edge ``i`` joins the letters at positions i and i+1 (cyclically), and the
    tour walking those edges in order reads back the word.
    """
    x = as_word(x)
    if not len(x):
        raise MalformedWord("empty word")
    s = x.letters
    m = len(s)
    f = MultiGraph(s, [(s[i], s[(i + 1) % m], i) for i in range(m)])
    return f, EulerianTour(f, s, tuple(range(m)))


def all_eulerian_tours(f: MultiGraph, budget: int = 2_000_000) -> list[EulerianTour]:
    """Every Eulerian tour class of ``f`` (one representative each).

    Backtracks over unused incident edges from the least vertex; classes are
    deduplicated by the rotation/reversal key. Raises BudgetExceeded when more
    than ``budget`` search steps are taken.
    """
    touched = [v for v in f.vertices if f.degree(v)]
    if not touched:
        return [EulerianTour(f, (), ())]
    if any(f.degree(v) % 2 for v in f.vertices) or len([c for c in f.components() if any(f.degree(v) for v in c)]) > 1:
        return []
    start = touched[0]
    m = f.edge_count
    incident = {v: sorted(set(f.incident(v)), key=label_key) for v in f.vertices}
    used: set = set()
    vs: list = [start]
    es: list = []
    found: dict = {}
    steps = 0

    def extend(v: Label) -> None:
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"tour enumeration exceeded {budget} steps")
        if len(es) == m:
            if v == start:
                tour = EulerianTour(f, tuple(vs[:-1]), tuple(es))
                found.setdefault(tour.key(), tour)
            return
        for e in incident[v]:
            if e in used:
                continue
            w = f.other_end(e, v)
            used.add(e)
            es.append(e)
            vs.append(w)
            extend(w)
            vs.pop()
            es.pop()
            used.discard(e)

    extend(start)
    return list(found.values())


def kotzig_orbit(u: EulerianTour) -> set:
    """Tour-class keys reachable from ``u`` by kappa transformations."""
    seen = {u.key(): u}
    queue = deque([u])
    while queue:
        t = queue.popleft()
        for v in sort_labels(set(t.vertices)):
            nxt = kappa_transform(t, v)
            k = nxt.key()
            if k not in seen:
                seen[k] = nxt
                queue.append(nxt)
    return set(seen)


# ------------------------------------------------- 4-regular enumeration


def _canonical_multiplicities(n: int, loops: Sequence[int], mult: dict) -> tuple:
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for new, old in enumerate(perm):
            inv[old] = new
        code = tuple(loops[perm[i]] for i in range(n)) + tuple(
            mult.get((min(perm[i], perm[j]), max(perm[i], perm[j])), 0) for i in range(n) for j in range(i + 1, n)
        )
        if best is None or code < best:
            best = code
    return best


def four_regular_multigraphs(n: int, connected: bool = True) -> list[MultiGraph]:
    """All 4-regular multigraphs (loops allowed) on vertices 0..n-1 up to isomorphism."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    results: dict = {}
    deg = [0] * n
    mult: dict = {}

    def place(k: int) -> None:
        if k == len(pairs):
            if any((4 - d) % 2 for d in deg):
                return
            loops = [(4 - d) // 2 for d in deg]
            f = _build(n, loops, mult)
            if connected and not f.is_connected():
                return
            key = _canonical_multiplicities(n, loops, mult)
            results.setdefault(key, f)
            return
        i, j = pairs[k]
        for m in range(0, min(4 - deg[i], 4 - deg[j]) + 1):
            if m:
                mult[(i, j)] = m
            deg[i] += m
            deg[j] += m
            place(k + 1)
            deg[i] -= m
            deg[j] -= m
            mult.pop((i, j), None)

    place(0)
    return list(results.values())


def _build(n: int, loops: Sequence[int], mult: dict) -> MultiGraph:
    edges = []
    eid = 0
    for v in range(n):
        for _ in range(loops[v]):
            edges.append((v, v, eid))
            eid += 1
    for (i, j), m in sorted(mult.items()):
        for _ in range(m):
            edges.append((i, j, eid))
            eid += 1
    return MultiGraph(range(n), edges)


def require_four_regular(f: MultiGraph) -> None:
    bad = [v for v in f.vertices if f.degree(v) != 4]
    if bad:
        raise NotFourRegular(f"vertices without degree 4: {bad!r}")
