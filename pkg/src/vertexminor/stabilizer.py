"""Binary symplectic stabilizer simulation of graph-state protocols.

A Pauli operator is a triple (x, z, r) of two qubit bitsets and a phase
exponent, standing for i^r X^x Z^z with X before Z on every qubit. A
tableau is a list of n such generators over a tuple of qubit labels.

Plans are checked by running them on actual states: local
complementations become single-qubit rotations, measurements project onto
either outcome, and the outcome-dependent corrections are worked out from
the graph at hand. After every plan the state must be exactly the target
graph state on every branch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import CapExceeded, InvalidOutcomeRequest, UnknownVertex, VertexMinorError
from .graph import Label, LabeledGraph, iter_bits, local_complement
from .localops import TransformationPlan, default_partner, measure

Pauli = tuple[int, int, int]

DEFAULT_QUBIT_CAP = 16

PAULI_X: Pauli = (1, 0, 0)
PAULI_Z: Pauli = (0, 1, 0)
PAULI_Y: Pauli = (1, 1, 1)
SINGLE = {"X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}


class NotAStabilizerState(VertexMinorError):
    """Generators fail to commute or are not independent."""


def pauli_mul(p: Pauli, q: Pauli) -> Pauli:
    x1, z1, r1 = p
    x2, z2, r2 = q
    return x1 ^ x2, z1 ^ z2, (r1 + r2 + 2 * (z1 & x2).bit_count()) % 4


def commutes(p: Pauli, q: Pauli) -> bool:
    return ((p[0] & q[1]).bit_count() + (p[1] & q[0]).bit_count()) % 2 == 0


def pauli_string(p: Pauli, n: int) -> str:
    """Signed string such as ``+XZI``; Y factors absorb one power of i each."""
    x, z, r = p
    ys = (x & z).bit_count()
    sign = (r - ys) % 4
    if sign % 2:
        raise ValueError("operator is not Hermitian")
    chars = []
    for i in range(n):
        a, b = x >> i & 1, z >> i & 1
        chars.append("IXZY"[a + 2 * b])
    return ("+" if sign == 0 else "-") + "".join(chars)


def pauli_from_string(text: str) -> Pauli:
    sign = 0
    if text[:1] in "+-":
        sign = 0 if text[0] == "+" else 2
        text = text[1:]
    x = z = 0
    ys = 0
    for i, ch in enumerate(text.upper()):
        if ch in "XY":
            x |= 1 << i
        if ch in "ZY":
            z |= 1 << i
        if ch == "Y":
            ys += 1
        elif ch not in "IXZ":
            raise ValueError(f"bad Pauli letter {ch!r}")
    return x, z, (sign + ys) % 4


def _local(p: Pauli, i: int) -> tuple[Pauli, Pauli]:
    """Split into the single-qubit factor at bit i (as a 1-qubit Pauli) and the rest."""
    x, z, r = p
    a, b = x >> i & 1, z >> i & 1
    mask = ~(1 << i)
    return (a, b, 0), (x & mask, z & mask, r)


def _embed(single: Pauli, rest: Pauli, i: int) -> Pauli:
    a, b, r1 = single
    x, z, r2 = rest
    return x | (a << i), z | (b << i), (r1 + r2) % 4


def rotation_image(p: Pauli, axis: Pauli, sign: int) -> Pauli:
    """Conjugate a 1-qubit Pauli by exp(sign * i*pi/4 * axis)."""
    if commutes(p, axis):
        return p
    # anticommuting part picks up sign * i * axis
    return pauli_mul((0, 0, 1 if sign > 0 else 3), pauli_mul(axis, p))


@dataclass
class StabilizerTableau:
    qubits: tuple
    gens: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.qubits)

    def index(self, q: Label) -> int:
        try:
            return self.qubits.index(q)
        except ValueError:
            raise UnknownVertex(q) from None

    def copy(self) -> "StabilizerTableau":
        return StabilizerTableau(self.qubits, list(self.gens))

    def strings(self) -> list[str]:
        return [pauli_string(g, self.n) for g in self.gens]

    def check(self) -> None:
        """Raise unless the generators commute pairwise and are independent."""
        if len(self.gens) != self.n:
            raise NotAStabilizerState("generator count differs from qubit count")
        for i, a in enumerate(self.gens):
            for b in self.gens[i + 1 :]:
                if not commutes(a, b):
                    raise NotAStabilizerState("generators anticommute")
        if len(_row_reduce(self.gens, self.n)) != self.n:
            raise NotAStabilizerState("generators are dependent")

    def key(self) -> tuple:
        """Reduced generating set; equal exactly when the stabilizer groups match."""
        return self.qubits, tuple(_row_reduce(self.gens, self.n))


def _vec(p: Pauli, n: int) -> int:
    return p[0] | (p[1] << n)


def _row_reduce(gens: Sequence[Pauli], n: int) -> list[Pauli]:
    """Fully reduced echelon form over the 2n-bit symplectic vectors, phases tracked."""
    rows = list(gens)
    out: list[Pauli] = []
    for bit in reversed(range(2 * n)):
        pivot = next((k for k, p in enumerate(rows) if _vec(p, n) >> bit & 1), None)
        if pivot is None:
            continue
        p = rows.pop(pivot)
        rows = [pauli_mul(q, p) if _vec(q, n) >> bit & 1 else q for q in rows]
        out = [pauli_mul(q, p) if _vec(q, n) >> bit & 1 else q for q in out]
        out.append(p)
    return out


def graph_state(g: LabeledGraph) -> StabilizerTableau:
    """Generators X_v Z_{N(v)} for every vertex v."""
    return StabilizerTableau(g.vertices, [(1 << i, row, 0) for i, row in enumerate(g.rows)])


def apply_single_qubit(t: StabilizerTableau, q: Label, image_x: Pauli, image_z: Pauli) -> StabilizerTableau:
    """Apply the 1-qubit Clifford sending X to ``image_x`` and Z to ``image_z``."""
    i = t.index(q)
    gens = []
    for g in t.gens:
        (a, b, _), rest = _local(g, i)
        local: Pauli = (0, 0, 0)
        if a:
            local = pauli_mul(local, image_x)
        if b:
            local = pauli_mul(local, image_z)
        gens.append(_embed(local, rest, i))
    return StabilizerTableau(t.qubits, gens)


def apply_rotation(t: StabilizerTableau, q: Label, axis: str, sign: int) -> StabilizerTableau:
    """Apply exp(sign * i*pi/4 * axis) on qubit ``q``."""
    ax = SINGLE[axis]
    return apply_single_qubit(t, q, rotation_image(PAULI_X, ax, sign), rotation_image(PAULI_Z, ax, sign))


def apply_pauli(t: StabilizerTableau, q: Label, axis: str) -> StabilizerTableau:
    ax = SINGLE[axis]
    flip = lambda p: p if commutes(p, ax) else pauli_mul((0, 0, 2), p)  # noqa: E731
    return apply_single_qubit(t, q, flip(PAULI_X), flip(PAULI_Z))


def apply_hadamard(t: StabilizerTableau, q: Label) -> StabilizerTableau:
    return apply_single_qubit(t, q, PAULI_Z, PAULI_X)


def graph_of(t: StabilizerTableau) -> LabeledGraph | None:
    """The graph G with the state exactly |G>, or None when it is not a graph state."""
    n = t.n
    rows = list(t.gens)
    for col in range(n):
        pivot = next((k for k in range(col, n) if rows[k][0] >> col & 1), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col]
        rows = [pauli_mul(q, p) if k != col and q[0] >> col & 1 else q for k, q in enumerate(rows)]
    adjacency = []
    for col, (x, z, r) in enumerate(rows):
        if x != 1 << col or z >> col & 1 or r != 0:
            return None
        adjacency.append(z)
    for i in range(n):
        for j in iter_bits(adjacency[i]):
            if not adjacency[j] >> i & 1:
                return None
    q = t.qubits
    return LabeledGraph(q, [(q[i], q[j]) for i in range(n) for j in iter_bits(adjacency[i]) if i < j])


def apply_lc_circuit(t: StabilizerTableau, v: Label, g: LabeledGraph | None = None) -> StabilizerTableau:
    """Rotations realising local complementation at ``v`` of the underlying graph.

    exp(-i*pi/4 X) acts on v and exp(+i*pi/4 Z) on each neighbour. The
    neighbourhood comes from ``g`` or, when omitted, from the state itself.
    """
    if g is None:
        g = graph_of(t)
        if g is None:
            raise NotAStabilizerState("state is not a graph state; pass the graph explicitly")
    t = apply_rotation(t, v, "X", -1)
    for u in g.neighbors(v):
        t = apply_rotation(t, u, "Z", +1)
    return t


def measure_pauli(t: StabilizerTableau, basis: str, v: Label, outcome: int) -> tuple[StabilizerTableau, bool]:
    """Project qubit ``v`` onto the (-1)^outcome eigenspace of the given Pauli.

    Returns the new tableau and whether the outcome was deterministic. Asking
    for the impossible outcome of a deterministic measurement raises
    InvalidOutcomeRequest.
    """
    i = t.index(v)
    a, b, r = SINGLE[basis.upper()]
    target: Pauli = (a << i, b << i, (r + 2 * outcome) % 4)
    anti = [k for k, g in enumerate(t.gens) if not commutes(g, target)]
    gens = list(t.gens)
    if anti:
        k = anti[0]
        for j in anti[1:]:
            gens[j] = pauli_mul(gens[j], gens[k])
        gens[k] = target
        return StabilizerTableau(t.qubits, gens), False
    product, used = _express(gens, target, t.n)
    if product[2] != target[2]:
        raise InvalidOutcomeRequest(f"{basis} on {v!r} is deterministic with the other outcome")
    gens[used] = target
    return StabilizerTableau(t.qubits, gens), True


def _express(gens: list[Pauli], target: Pauli, n: int) -> tuple[Pauli, int]:
    """Product of generators matching ``target`` up to phase, plus one generator index it uses."""
    basis: list[tuple[int, int]] = []  # (vector, combination mask)
    for k, g in enumerate(gens):
        vec, combo = _vec(g, n), 1 << k
        for bv, bc in basis:
            if vec ^ bv < vec:
                vec, combo = vec ^ bv, combo ^ bc
        if vec:
            basis.append((vec, combo))
            basis.sort(reverse=True)
    vec, combo = _vec(target, n), 0
    for bv, bc in basis:
        if vec ^ bv < vec:
            vec, combo = vec ^ bv, combo ^ bc
    if vec:
        raise NotAStabilizerState("commuting Pauli outside the stabilizer group")
    product: Pauli = (0, 0, 0)
    for k in iter_bits(combo):
        product = pauli_mul(product, gens[k])
    return product, (combo & -combo).bit_length() - 1


def remove_qubit(t: StabilizerTableau, v: Label) -> StabilizerTableau:
    """Trace out a qubit that is in a Pauli eigenstate."""
    i = t.index(v)
    local = [k for k, g in enumerate(t.gens) if g[0] == g[0] & (1 << i) and g[1] == g[1] & (1 << i) and (g[0] | g[1])]
    if not local:
        raise NotAStabilizerState(f"qubit {v!r} is not in a Pauli eigenstate")
    k = local[0]
    p = t.gens[k]
    gens = []
    for j, g in enumerate(t.gens):
        if j == k:
            continue
        if (g[0] | g[1]) >> i & 1:
            g = pauli_mul(g, p)
        if (g[0] | g[1]) >> i & 1:
            raise NotAStabilizerState("generator still touches the removed qubit")
        gens.append((_drop(g[0], i), _drop(g[1], i), g[2]))
    return StabilizerTableau(t.qubits[:i] + t.qubits[i + 1 :], gens)


def _drop(bits: int, i: int) -> int:
    low = bits & ((1 << i) - 1)
    return low | ((bits >> (i + 1)) << i)


def measurement_correction(t: StabilizerTableau, g: LabeledGraph, basis: str, v: Label, outcome: int, partner: Label | None) -> StabilizerTableau:
    """Undo the local unitary left on the neighbours after measuring ``v`` in ``g``.

    Z: Pauli Z on every neighbour for the minus outcome. Y: a quarter turn
    about Z on every neighbour. X: a quarter turn about Y on the partner b
    and Z on the neighbours of v outside N(b) and b (plus outcome) or of b
    outside N(v) and v (minus outcome).
    """
    basis = basis.upper()
    nv = set(g.neighbors(v))
    if basis == "Z":
        if outcome:
            for u in nv:
                t = apply_pauli(t, u, "Z")
        return t
    if basis == "Y":
        # the leftover is exp(-+ i*pi/4 Z) per neighbour; apply its inverse
        for u in nv:
            t = apply_rotation(t, u, "Z", +1 if outcome == 0 else -1)
        return t
    if not nv:
        return t
    b = partner if partner is not None else default_partner(g, v)
    nb = set(g.neighbors(b))
    flips = (nv - nb - {b}) if outcome == 0 else (nb - nv - {v})
    for u in flips:
        t = apply_pauli(t, u, "Z")
    return apply_rotation(t, b, "Y", -1 if outcome == 0 else +1)


@dataclass
class VerificationReport:
    ok: bool
    branches: int
    failure: tuple | None = None
    reason: str = ""


def verify_plan_report(g: LabeledGraph, target: LabeledGraph, plan: TransformationPlan | Sequence, cap: int = DEFAULT_QUBIT_CAP) -> VerificationReport:
    """Run the plan on |g> and compare every branch with |target>.

    Branches whose corrected states coincide are merged, which keeps the
    work linear while still covering every outcome sequence.
    """
    if len(g) > cap:
        raise CapExceeded(f"{len(g)} qubits exceed the cap of {cap}")
    moves = plan.moves if isinstance(plan, TransformationPlan) else tuple(plan)
    frontier = {graph_state(g).key(): (graph_state(g), g, ())}
    explored = 1
    for move in moves:
        nxt: dict = {}
        for state, graph, history in frontier.values():
            if move.vertex not in graph:
                return VerificationReport(False, explored, history, f"{move} acts on a missing qubit")
            if move.kind == "LC":
                branches = [(apply_lc_circuit(state, move.vertex, graph), local_complement(graph, move.vertex), history + ((str(move), None),))]
            else:
                basis = move.kind[1]
                branches = []
                after = measure(graph, basis, move.vertex, move.partner)
                for outcome in (0, 1):
                    try:
                        projected, _ = measure_pauli(state, basis, move.vertex, outcome)
                    except InvalidOutcomeRequest:
                        continue
                    corrected = measurement_correction(projected, graph, basis, move.vertex, outcome, move.partner)
                    reduced = remove_qubit(corrected, move.vertex)
                    branches.append((reduced, after, history + ((str(move), outcome),)))
            for state2, graph2, hist2 in branches:
                state2.check()
                explored += 1
                nxt.setdefault(state2.key(), (state2, graph2, hist2))
        frontier = nxt
    for state, _, history in frontier.values():
        got = graph_of(state)
        if got is None:
            return VerificationReport(False, explored, history, "final state is not a graph state")
        if set(got.vertices) != set(target.vertices) or got != LabeledGraph(got.vertices, target.edges()):
            return VerificationReport(False, explored, history, "final graph differs from the target")
    return VerificationReport(True, explored)


def verify_plan(g: LabeledGraph, target: LabeledGraph, plan: TransformationPlan | Sequence, cap: int = DEFAULT_QUBIT_CAP) -> bool:
    return verify_plan_report(g, target, plan, cap).ok
