"""Distance-hereditary graphs: foliage, recognition, reductions and generation.

A connected graph is distance-hereditary exactly when it can be grown from a
single vertex by adding leaves and splitting twins, so recognition prunes
leaves and twins until one vertex is left.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import NotConnected
from .graph import (
    Label,
    LabeledGraph,
    connected_components,
    delete_vertex,
    induced_subgraph,
    is_connected,
    iter_bits,
    local_complement,
)
from .localops import LC, MZ, Move


@dataclass(frozen=True)
class FoliageReport:
    leaves: frozenset
    axils: frozenset
    twins: dict
    true_pairs: frozenset
    false_pairs: frozenset

    @property
    def foliage(self) -> frozenset:
        return self.leaves | self.axils | frozenset(self.twins)

    def __len__(self) -> int:
        return len(self.foliage)


def _twin_bits(rows: list[int], alive: int, i: int, j: int) -> bool:
    bi, bj = 1 << i, 1 << j
    return (rows[i] & alive & ~bj) == (rows[j] & alive & ~bi)


def foliage(g: LabeledGraph) -> FoliageReport:
    rows = list(g.rows)
    n = len(rows)
    alive = (1 << n) - 1
    verts = g.vertices
    leaves, axils = set(), set()
    for i, row in enumerate(rows):
        if row.bit_count() == 1:
            leaves.add(verts[i])
            axils.add(verts[row.bit_length() - 1])
    twins: dict = {}
    true_pairs, false_pairs = set(), set()
    for i in range(n):
        for j in range(i + 1, n):
            if _twin_bits(rows, alive, i, j):
                u, v = verts[i], verts[j]
                twins.setdefault(u, set()).add(v)
                twins.setdefault(v, set()).add(u)
                pair = frozenset((u, v))
                (true_pairs if rows[i] >> j & 1 else false_pairs).add(pair)
    return FoliageReport(
        frozenset(leaves),
        frozenset(axils),
        {v: frozenset(ps) for v, ps in twins.items()},
        frozenset(true_pairs),
        frozenset(false_pairs),
    )


def _removable(rows: list[int], alive: int) -> int | None:
    """Least live index that is a leaf or has a twin among live vertices."""
    false_keys: dict[int, int] = {}
    true_keys: dict[int, int] = {}
    for i in iter_bits(alive):
        nb = rows[i] & alive
        false_keys[nb] = false_keys.get(nb, 0) + 1
        closed = nb | (1 << i)
        true_keys[closed] = true_keys.get(closed, 0) + 1
    for i in iter_bits(alive):
        nb = rows[i] & alive
        if nb.bit_count() == 1 or false_keys[nb] > 1 or true_keys[nb | (1 << i)] > 1:
            return i
    return None


def pruning_sequence(g: LabeledGraph) -> list | None:
    """Labels removed while pruning leaves and twins, or None if pruning gets stuck."""
    rows = list(g.rows)
    alive = (1 << len(rows)) - 1
    removed = []
    while alive.bit_count() > 1:
        i = _removable(rows, alive)
        if i is None:
            return None
        alive &= ~(1 << i)
        removed.append(g.vertices[i])
    return removed


def is_distance_hereditary(g: LabeledGraph) -> bool:
    if not is_connected(g):
        raise NotConnected("distance-hereditary recognition needs a connected graph")
    return pruning_sequence(g) is not None


def components_distance_hereditary(g: LabeledGraph) -> bool:
    """Componentwise check for graphs that may be disconnected."""
    return all(pruning_sequence(induced_subgraph(g, comp)) is not None for comp in connected_components(g))


class GrowthStep(NamedTuple):
    operation: str
    anchor: Label
    added: Label


GROWTH_OPERATIONS = ("leaf", "false_twin", "true_twin")


def grow(g: LabeledGraph, operation: str, anchor: Label, new: Label) -> LabeledGraph:
    """Apply one growth operation: add a leaf or split a twin off ``anchor``."""
    if operation == "leaf":
        nbrs = [anchor]
    elif operation == "false_twin":
        nbrs = g.neighbors(anchor)
    elif operation == "true_twin":
        nbrs = g.neighbors(anchor) + [anchor]
    else:
        raise ValueError(f"unknown growth operation {operation!r}")
    return LabeledGraph(list(g.vertices) + [new], g.edges() + [(new, x) for x in nbrs])


def random_dh_with_trace(
    n: int,
    rng: random.Random | int,
    p_leaf: float = 1 / 3,
    p_false: float = 1 / 3,
    p_true: float = 1 / 3,
) -> tuple[LabeledGraph, list[GrowthStep]]:
    """Random connected DH graph on labels 0..n-1 with its construction trace."""
    if n < 1:
        raise ValueError("n must be positive")
    if abs(p_leaf + p_false + p_true - 1.0) > 1e-9 or min(p_leaf, p_false, p_true) < 0:
        raise ValueError("probabilities must be non-negative and sum to 1")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    rows = [0] * n
    trace = []
    for new in range(1, n):
        anchor = rng.randrange(new)
        op = rng.choices(GROWTH_OPERATIONS, weights=(p_leaf, p_false, p_true))[0]
        if op == "leaf":
            nb = 1 << anchor
        elif op == "false_twin":
            nb = rows[anchor]
        else:
            nb = rows[anchor] | (1 << anchor)
        # a false twin of a lone vertex would be isolated; K_1 only grows to K_2
        if nb == 0:
            nb = 1 << anchor
        rows[new] = nb
        for j in iter_bits(nb):
            rows[j] |= 1 << new
        trace.append(GrowthStep(op, anchor, new))
    verts = tuple(range(n))
    return LabeledGraph._raw(verts, {v: v for v in verts}, tuple(rows)), trace


def random_dh(n: int, rng: random.Random | int, p_leaf: float = 1 / 3, p_false: float = 1 / 3, p_true: float = 1 / 3) -> LabeledGraph:
    return random_dh_with_trace(n, rng, p_leaf, p_false, p_true)[0]


def reduce_instance(g: LabeledGraph, keep: Iterable[Label]) -> tuple[LabeledGraph, list[Move]]:
    """Strip removable foliage outside ``keep`` without changing any vertex-minor answer on ``keep``.

    Leaves and twins are deleted directly. An axil v with leaf w is removed
    after local complementations at v and then w. Returns the reduced graph
    and the moves that produced it from ``g``.
    """
    keep = set(keep)
    for v in keep:
        g.index(v)
    moves: list[Move] = []
    while True:
        report = foliage(g)
        simple = [v for v in g.vertices if v not in keep and (v in report.leaves or v in report.twins)]
        if simple:
            v = simple[0]
            g = delete_vertex(g, v)
            moves.append(MZ(v))
            continue
        axils = [v for v in g.vertices if v not in keep and v in report.axils]
        if not axils:
            return g, moves
        v = axils[0]
        leaf = min((w for w in g.neighbors(v) if g.degree(w) == 1), key=g.index)
        g = local_complement(local_complement(g, v), leaf)
        g = delete_vertex(g, v)
        moves += [LC(v), LC(leaf), MZ(v)]
