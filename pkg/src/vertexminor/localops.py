"""Measurement-induced graph rewrites and replay of transformation plans.

A Pauli measurement on a graph state maps the graph as follows, up to local
Cliffords on the neighbours of the measured vertex:

* Z on v deletes v,
* Y on v applies a local complementation at v and then deletes v,
* X on v with partner p (a neighbour of v) pivots on (p, v) and deletes v.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidMove, InvalidPartner, UnknownVertex, VertexMinorError
from .graph import Label, LabeledGraph, delete_vertex, local_complement, pivot

KINDS = ("LC", "MX", "MY", "MZ")
MEASUREMENTS = {"MX": "X", "MY": "Y", "MZ": "Z"}


@dataclass(frozen=True)
class Move:
    kind: str
    vertex: Label
    partner: Label | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.partner is not None and self.kind != "MX":
            raise ValueError("only X measurements take a partner")

    @property
    def is_measurement(self) -> bool:
        return self.kind != "LC"

    def to_dict(self) -> dict:
        out = {"op": self.kind, "v": self.vertex}
        if self.partner is not None:
            out["partner"] = self.partner
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Move":
        return cls(data["op"], _label_from_json(data["v"]), _label_from_json(data.get("partner")))

    def __str__(self) -> str:
        if self.partner is not None:
            return f"{self.kind}({self.vertex},{self.partner})"
        return f"{self.kind}({self.vertex})"


def LC(v: Label) -> Move:
    return Move("LC", v)


def MX(v: Label, partner: Label | None = None) -> Move:
    return Move("MX", v, partner)


def MY(v: Label) -> Move:
    return Move("MY", v)


def MZ(v: Label) -> Move:
    return Move("MZ", v)


def _label_from_json(value):
    # JSON turns tuples into lists; labels must stay hashable.
    if isinstance(value, list):
        return tuple(_label_from_json(x) for x in value)
    return value


@dataclass(frozen=True)
class TransformationPlan:
    """Ordered moves taking a graph on ``source_vertices`` to one on ``target_vertices``."""

    moves: tuple[Move, ...]
    source_vertices: frozenset = field(default_factory=frozenset)
    target_vertices: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))
        object.__setattr__(self, "source_vertices", frozenset(self.source_vertices))
        object.__setattr__(self, "target_vertices", frozenset(self.target_vertices))
        measured = [m.vertex for m in self.moves if m.is_measurement]
        if len(measured) != len(set(measured)):
            raise ValueError("a vertex is measured more than once")
        if not self.target_vertices <= self.source_vertices:
            raise ValueError("target vertices must be source vertices")
        if self.target_vertices & set(measured):
            raise ValueError("a target vertex is measured")

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    @property
    def measured(self) -> list:
        return [m.vertex for m in self.moves if m.is_measurement]

    def to_json(self) -> str:
        return plan_to_json(self.moves)


def make_plan(moves: Iterable[Move], source: Iterable[Label], target: Iterable[Label]) -> TransformationPlan:
    return TransformationPlan(tuple(moves), frozenset(source), frozenset(target))


def plan_to_json(moves: Iterable[Move]) -> str:
    return json.dumps([m.to_dict() for m in moves])


def plan_from_json(text: str) -> list[Move]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("plan must be a JSON list")
    return [Move.from_dict(item) for item in data]


def measure(g: LabeledGraph, basis: str, v: Label, partner: Label | None = None) -> LabeledGraph:
    """Graph obtained after measuring qubit ``v`` in the given Pauli basis."""
    if v not in g:
        raise UnknownVertex(v)
    basis = basis.upper()
    if basis == "Z":
        return delete_vertex(g, v)
    if basis == "Y":
        return delete_vertex(local_complement(g, v), v)
    if basis != "X":
        raise ValueError(f"unknown basis {basis!r}")
    nbrs = g.row(v)
    if not nbrs:
        if partner is not None:
            raise InvalidPartner(partner)
        return delete_vertex(g, v)
    if partner is None:
        partner = g.vertices[(nbrs & -nbrs).bit_length() - 1]
    elif partner not in g or not g.has_edge(v, partner):
        raise InvalidPartner(partner)
    return delete_vertex(pivot(g, partner, v), v)


def default_partner(g: LabeledGraph, v: Label) -> Label | None:
    nbrs = g.row(v)
    if not nbrs:
        return None
    return g.vertices[(nbrs & -nbrs).bit_length() - 1]


def apply_move(g: LabeledGraph, move: Move) -> LabeledGraph:
    if move.kind == "LC":
        return local_complement(g, move.vertex)
    if move.kind == "MX":
        if move.partner is None and g.row(move.vertex):
            raise InvalidPartner(None)
        return measure(g, "X", move.vertex, move.partner)
    return measure(g, MEASUREMENTS[move.kind], move.vertex)


def apply_plan(g: LabeledGraph, plan: TransformationPlan | Sequence[Move]) -> LabeledGraph:
    """Replay every move; the first failing move is reported with its index."""
    moves = plan.moves if isinstance(plan, TransformationPlan) else plan
    for i, move in enumerate(moves):
        try:
            g = apply_move(g, move)
        except UnknownVertex as exc:
            raise InvalidMove(i, f"vertex {exc.args[0]!r} not in graph") from exc
        except InvalidPartner as exc:
            raise InvalidMove(i, f"partner {move.partner!r} not adjacent to {move.vertex!r}") from exc
        except VertexMinorError as exc:
            raise InvalidMove(i, str(exc)) from exc
    return g


def elimination_moves(g: LabeledGraph, vertex: Label, basis: str) -> tuple[LabeledGraph, Move]:
    """Measure ``vertex`` recording the partner explicitly for X."""
    if basis == "X":
        partner = default_partner(g, vertex)
        return measure(g, "X", vertex, partner), MX(vertex, partner)
    if basis == "Y":
        return measure(g, "Y", vertex), MY(vertex)
    return measure(g, "Z", vertex), MZ(vertex)
