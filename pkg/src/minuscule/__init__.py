"""Exact curve-class and component combinatorics for minuscule Schubert varieties."""

from .bott_samelson import BottSamelsonData, alpha_sequence, build
from .components import (
    ComponentSet,
    EffectiveClass,
    Partition,
    component_count,
    ne_set,
    partition_data,
    partition_hole_count,
    partition_to_word,
    picard_rank_open_orbit,
)
from .errors import AuditBudgetError, InvariantViolation
from .root_system import RootSystem, build_root_system, classify_minuscule
from .weyl import (
    act_on,
    act_on_weight,
    enumerate_minuscule_cosets,
    is_minimal_rep,
    is_reduced,
    length,
    longest_element,
    minimal_coset_rep,
    minuscule_parabolic,
    reduced_words,
    weyl_involution,
)

__all__ = [
    "AuditBudgetError",
    "BottSamelsonData",
    "ComponentSet",
    "EffectiveClass",
    "InvariantViolation",
    "Partition",
    "RootSystem",
    "act_on",
    "act_on_weight",
    "alpha_sequence",
    "build",
    "build_root_system",
    "classify_minuscule",
    "component_count",
    "enumerate_minuscule_cosets",
    "is_minimal_rep",
    "is_reduced",
    "length",
    "longest_element",
    "minimal_coset_rep",
    "minuscule_parabolic",
    "ne_set",
    "partition_data",
    "partition_hole_count",
    "partition_to_word",
    "picard_rank_open_orbit",
    "reduced_words",
    "weyl_involution",
]
