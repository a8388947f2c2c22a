"""Exhaustive LC-equivalence and vertex-minor search for small instances.

Both routines are exponential and exist to give ground truth for the fast
algorithms. LC orbits are explored breadth first with parent pointers so a
witness sequence can be read back. Vertex-minors are searched over one fixed
elimination order: every vertex outside the target is measured in X, Y or Z
in turn and the remaining graph is compared against the target's LC orbit.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceeded, InvalidTarget, SizeCapExceeded
from .graph import Label, LabeledGraph, induced_subgraph, iter_bits, sort_labels, star_graph
from .localops import LC, TransformationPlan, elimination_moves

DEFAULT_SIZE_CAP = 8
DEFAULT_BRANCH_BUDGET = 600_000


def lc_rows(rows: Sequence[int], i: int) -> tuple[int, ...]:
    """Local complementation at index ``i`` acting directly on bitset rows."""
    out = list(rows)
    nbrs = rows[i]
    for j in iter_bits(nbrs):
        out[j] ^= nbrs & ~(1 << j)
    return tuple(out)


@dataclass
class LcOrbit:
    """Every labeled graph reachable from ``seed`` by local complementations."""

    seed: LabeledGraph
    parents: dict

    @property
    def members(self) -> set:
        return set(self.parents)

    @property
    def canonical_key(self) -> tuple:
        return min(self.parents)

    def __len__(self) -> int:
        return len(self.parents)

    def __contains__(self, g: object) -> bool:
        if isinstance(g, LabeledGraph):
            return g.vertices == self.seed.vertices and g.rows in self.parents
        return g in self.parents

    def graphs(self) -> list[LabeledGraph]:
        return [self.seed.with_rows(rows) for rows in self.parents]

    def path_from_seed(self, rows: tuple) -> list:
        """Labels v1..vk with tau_vk(...tau_v1(seed)) having the given rows."""
        steps = []
        while True:
            parent, i = self.parents[rows]
            if parent is None:
                break
            steps.append(self.seed.vertices[i])
            rows = parent
        steps.reverse()
        return steps


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise SizeCapExceeded(f"orbit search refused for {n} vertices (cap {cap})")


def lc_orbit(g: LabeledGraph, cap: int = DEFAULT_SIZE_CAP, stop_at: tuple | None = None) -> LcOrbit:
    _check_cap(len(g), cap)
    parents: dict = {g.rows: (None, -1)}
    queue = deque([g.rows])
    n = len(g)
    while queue:
        rows = queue.popleft()
        if rows == stop_at:
            break
        for i in range(n):
            if not rows[i]:
                continue
            nxt = lc_rows(rows, i)
            if nxt not in parents:
                parents[nxt] = (rows, i)
                queue.append(nxt)
    return LcOrbit(g, parents)


def lc_equivalence_witness(g1: LabeledGraph, g2: LabeledGraph, cap: int = DEFAULT_SIZE_CAP) -> list | None:
    """LC sequence taking ``g1`` to ``g2``, or None when they are not LC-equivalent."""
    if g1.vertices != g2.vertices:
        raise ValueError("graphs must share their vertex set")
    orbit = lc_orbit(g1, cap, stop_at=g2.rows)
    if g2.rows not in orbit.parents:
        return None
    return orbit.path_from_seed(g2.rows)


def lc_equivalent(g1: LabeledGraph, g2: LabeledGraph, cap: int = DEFAULT_SIZE_CAP) -> bool:
    return lc_equivalence_witness(g1, g2, cap) is not None


def strip_isolated(target: LabeledGraph) -> tuple[LabeledGraph, list]:
    """Split a target into its non-isolated part and its degree-zero vertices."""
    isolated = [v for v in target.vertices if not target.row(v)]
    core = [v for v in target.vertices if target.row(v)]
    return induced_subgraph(target, core), isolated


def vertex_minor_bruteforce(
    g: LabeledGraph,
    target: LabeledGraph,
    order: Sequence[Label] | None = None,
    rng: random.Random | None = None,
    budget: int = DEFAULT_BRANCH_BUDGET,
    cap: int = DEFAULT_SIZE_CAP,
) -> TransformationPlan | None:
    """Search every X/Y/Z assignment over one elimination order.

    Degree-zero target vertices are stripped first; they are measured like any
    other vertex because an isolated qubit needs no entanglement. The returned
    plan's target set is the stripped vertex set. ``order`` fixes the
    elimination order, otherwise it is ascending, or shuffled when ``rng`` is
    given. Raises BudgetExceeded when more than ``budget`` search nodes are
    visited, so a None answer is always a genuine negative.
    """
    for v in target.vertices:
        if v not in g:
            raise InvalidTarget(f"target vertex {v!r} not in graph")
    core, _ = strip_isolated(target)
    keep = set(core.vertices)
    rest = [v for v in g.vertices if v not in keep]
    if order is not None:
        if len(order) != len(rest) or set(order) != set(rest):
            raise ValueError("order must list exactly the vertices outside the target")
        rest = list(order)
    elif rng is not None:
        rng.shuffle(rest)
    orbit = lc_orbit(core, cap)
    seen: set = set()
    visited = 0
    reached: list = []

    def search(h: LabeledGraph, depth: int) -> list | None:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"more than {budget} search nodes")
        if depth == len(rest):
            if h.rows in orbit.parents:
                reached.append(h.rows)
                return []
            return None
        key = (depth, h.rows)
        if key in seen:
            return None
        seen.add(key)
        v = rest[depth]
        bases = ("Z", "Y", "X") if h.row(v) else ("Z",)
        for basis in bases:
            nxt, move = elimination_moves(h, v, basis)
            found = search(nxt, depth + 1)
            if found is not None:
                return [move] + found
        return None

    found = search(g, 0)
    if found is None:
        return None
    # orbit parents walk from the target to the reached graph; LCs are involutions.
    lcs = [LC(v) for v in reversed(orbit.path_from_seed(reached[0]))]
    return TransformationPlan(tuple(found) + tuple(lcs), frozenset(g.vertices), frozenset(keep))


def is_vertex_minor(g: LabeledGraph, target: LabeledGraph, **kwargs) -> bool:
    return vertex_minor_bruteforce(g, target, **kwargs) is not None


def star_minor_bruteforce(g: LabeledGraph, targets, **kwargs) -> TransformationPlan | None:
    """Brute-force check that a star on ``targets`` is a vertex-minor of ``g``."""
    targets = sort_labels(targets)
    return vertex_minor_bruteforce(g, star_graph(targets, targets[0]), **kwargs)

