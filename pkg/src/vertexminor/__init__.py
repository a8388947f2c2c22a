"""Vertex-minor calculus for extracting graph states, with brute-force oracles."""

from __future__ import annotations

from .circle import (
    DoubleOccurrenceWord,
    EulerianTour,
    MultiGraph,
    alternance_graph,
    eulerian_tour,
    kappa_transform,
    multigraph_from_word,
)
from .dh import foliage, is_distance_hereditary, random_dh, reduce_instance
from .dhstar import SolverVerdict, lu_condition, lu_pattern, solve_star
from .errors import VertexMinorError
from .graph import LabeledGraph, classify, local_complement, pivot
from .ksoet import k_soet
from .localops import LC, MX, MY, MZ, Move, TransformationPlan, apply_move, apply_plan, measure
from .oracle import is_vertex_minor, lc_equivalent, star_minor_bruteforce, vertex_minor_bruteforce
from .small import make_pair, make_triple, small_vertex_minor
from .soet import (
    hamiltonian_from_hamsoet,
    hamsoet_normalize,
    is_soet,
    reduce_cubham_to_starvm,
    soet_bruteforce,
    soet_from_hamiltonian,
    triangular_expansion,
)
from .stabilizer import graph_state, verify_plan

__version__ = "0.1.0"

__all__ = [
    "DoubleOccurrenceWord",
    "EulerianTour",
    "LC",
    "LabeledGraph",
    "MX",
    "MY",
    "MZ",
    "Move",
    "MultiGraph",
    "SolverVerdict",
    "TransformationPlan",
    "VertexMinorError",
    "alternance_graph",
    "apply_move",
    "apply_plan",
    "classify",
    "eulerian_tour",
    "foliage",
    "graph_state",
    "hamiltonian_from_hamsoet",
    "hamsoet_normalize",
    "is_distance_hereditary",
    "is_soet",
    "is_vertex_minor",
    "k_soet",
    "kappa_transform",
    "lc_equivalent",
    "local_complement",
    "lu_condition",
    "lu_pattern",
    "make_pair",
    "make_triple",
    "measure",
    "multigraph_from_word",
    "pivot",
    "random_dh",
    "reduce_cubham_to_starvm",
    "reduce_instance",
    "small_vertex_minor",
    "soet_bruteforce",
    "soet_from_hamiltonian",
    "solve_star",
    "star_minor_bruteforce",
    "triangular_expansion",
    "verify_plan",
    "vertex_minor_bruteforce",
]
