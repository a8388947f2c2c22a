"""Dense state-vector reference for small graph states.

Basis index bit i holds qubit i, with qubits in the graph's vertex order.
Everything here works on explicit amplitudes, so it shares no code with the
tableau simulator.
"""

from __future__ import annotations

import numpy as np

from vertexminor.graph import LabeledGraph


def graph_vector(g: LabeledGraph) -> np.ndarray:
    n = len(g.vertices)
    pos = {v: i for i, v in enumerate(g.vertices)}
    idx = np.arange(2**n)
    phase = np.zeros(2**n, dtype=int)
    for u, v in g.edges():
        phase += (idx >> pos[u]) & (idx >> pos[v]) & 1
    return ((-1.0) ** phase / np.sqrt(2**n)).astype(complex)


def apply_pauli_op(p: tuple[int, int, int], vec: np.ndarray) -> np.ndarray:
    """Apply i^r X^x Z^z; Z acts first."""
    x, z, r = p
    idx = np.arange(len(vec))
    signs = np.array([(-1) ** bin(i & z).count("1") for i in idx])
    out = np.empty_like(vec)
    out[idx ^ x] = vec * signs
    return (1j**r) * out


def single(letter: str, i: int) -> tuple[int, int, int]:
    return {"X": (1 << i, 0, 0), "Z": (0, 1 << i, 0), "Y": (1 << i, 1 << i, 1)}[letter]


def rotate(vec: np.ndarray, letter: str, i: int, sign: int) -> np.ndarray:
    """exp(sign * i*pi/4 * P) for a single-qubit Pauli P."""
    return (vec + sign * 1j * apply_pauli_op(single(letter, i), vec)) / np.sqrt(2)


def lc_vector(vec: np.ndarray, g: LabeledGraph, v) -> np.ndarray:
    pos = {u: i for i, u in enumerate(g.vertices)}
    vec = rotate(vec, "X", pos[v], -1)
    for u in g.neighbors(v):
        vec = rotate(vec, "Z", pos[u], +1)
    return vec


def project(vec: np.ndarray, letter: str, i: int, outcome: int) -> np.ndarray | None:
    """Normalised (-1)^outcome projection, or None for a zero-probability outcome."""
    sign = -1 if outcome else 1
    out = (vec + sign * apply_pauli_op(single(letter, i), vec)) / 2
    norm = np.linalg.norm(out)
    return None if norm < 1e-9 else out / norm


def eigenstate(letter: str, outcome: int) -> np.ndarray:
    s = -1 if outcome else 1
    return {
        "Z": np.array([1, 0] if not outcome else [0, 1], dtype=complex),
        "X": np.array([1, s], dtype=complex) / np.sqrt(2),
        "Y": np.array([1, s * 1j], dtype=complex) / np.sqrt(2),
    }[letter]


def with_qubit(rest: np.ndarray, one: np.ndarray, i: int, n: int) -> np.ndarray:
    """Insert a single-qubit state at position i of an n-qubit register."""
    out = np.zeros(2**n, dtype=complex)
    for idx in range(2**n):
        bit = idx >> i & 1
        low = idx & ((1 << i) - 1)
        high = idx >> (i + 1)
        out[idx] = one[bit] * rest[low | (high << i)]
    return out


def same_ray(a: np.ndarray, b: np.ndarray) -> bool:
    return abs(abs(np.vdot(a, b)) - 1) < 1e-9


def stabilizes(p: tuple[int, int, int], vec: np.ndarray) -> bool:
    return np.allclose(apply_pauli_op(p, vec), vec, atol=1e-9)
