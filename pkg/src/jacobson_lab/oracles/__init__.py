"""Exact graph oracles used to check the closed-form theory."""

from jacobson_lab.oracles.eulerian import EulerKind, EulerResult, eulerian
from jacobson_lab.oracles.hamiltonian import hamiltonian_cycle, hamiltonian_path, has_cut_vertex
from jacobson_lab.oracles.induced import (
    BruteForceLengths,
    InducedResult,
    brute_force_induced,
    longest_induced_cycle,
    longest_induced_path,
)
from jacobson_lab.oracles.pancyclic import (
    PancyclicResult,
    cycle_of_length,
    pancyclic_check,
    shorter_cycles,
)
from jacobson_lab.oracles.structure import components, diameter, girth, is_connected
from jacobson_lab.oracles.walks import (
    SearchBudget,
    SearchResult,
    SearchStatus,
    Walk,
    WalkCheck,
    WalkKind,
    validate_walk,
)

__all__ = [
    "BruteForceLengths",
    "EulerKind",
    "EulerResult",
    "InducedResult",
    "PancyclicResult",
    "SearchBudget",
    "SearchResult",
    "SearchStatus",
    "Walk",
    "WalkCheck",
    "WalkKind",
    "brute_force_induced",
    "components",
    "cycle_of_length",
    "diameter",
    "eulerian",
    "girth",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "has_cut_vertex",
    "is_connected",
    "longest_induced_cycle",
    "longest_induced_path",
    "pancyclic_check",
    "shorter_cycles",
    "validate_walk",
]
