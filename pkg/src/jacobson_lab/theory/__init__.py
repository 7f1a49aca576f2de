"""Closed-form theory and explicit constructions."""

from jacobson_lab.theory.constructions import (
    ConstructionTrace,
    Strategy,
    blowup_lift,
    construct_hamiltonian,
    cycles_all_lengths,
    fiber,
    field_of_order,
    layer_compose,
    coset_schedule,
    inverse_pairs,
    k_z2_z2_cycle,
    two_field_cycle,
)
from jacobson_lab.theory.theorems import (
    Classification,
    FieldStats,
    HamStatus,
    LcRule,
    LocalStructure,
    classify,
    field_stats,
    is_z2_plus_field,
    lc_classified,
    lc_closed_form,
    lc_closed_form_ordered,
    lc_local,
    lc_rule,
    local_structure,
    lp_classified,
    lp_local,
    thm_components,
    thm_diameter_bound,
    thm_euler_trail,
    thm_eulerian,
    thm_girth,
    thm_hamiltonian,
    thm_pancyclic,
)

__all__ = [
    "Classification",
    "ConstructionTrace",
    "FieldStats",
    "HamStatus",
    "LcRule",
    "LocalStructure",
    "Strategy",
    "blowup_lift",
    "classify",
    "construct_hamiltonian",
    "cycles_all_lengths",
    "fiber",
    "field_of_order",
    "field_stats",
    "layer_compose",
    "coset_schedule",
    "inverse_pairs",
    "is_z2_plus_field",
    "k_z2_z2_cycle",
    "lc_classified",
    "lc_closed_form",
    "lc_closed_form_ordered",
    "lc_local",
    "lc_rule",
    "local_structure",
    "lp_classified",
    "lp_local",
    "thm_components",
    "thm_diameter_bound",
    "thm_euler_trail",
    "thm_eulerian",
    "thm_girth",
    "thm_hamiltonian",
    "thm_pancyclic",
    "two_field_cycle",
]
