"""Kernelization for trivially perfect graph editing, completion and
deletion, with an exact branching solver and a seeded instance generator."""

from .combs import (
    Comb,
    PrecedenceRelation,
    build_precedence,
    enumerate_critical_combs,
    prune_precedence,
    validate_comb,
)
from .generate import GenParams, SplitMix64, perturb, plant_comb, random_tp_graph
from .graph import (
    EditSet,
    Graph,
    Partition,
    apply_edits,
    closed_neighborhood,
    connected_components,
    critical_clique_partition,
    induced_subgraph,
    is_module,
    is_nested_family,
    open_neighborhood,
)
from .recognition import (
    UCD,
    NotTriviallyPerfectError,
    Obstruction,
    check_clique_decomposition,
    compute_ucd,
    find_obstruction,
    is_trivially_perfect,
    realize_ucd,
    tp_max_independent_set,
)
from .rules import (
    VARIANTS,
    Instance,
    ReductionStep,
    ReductionTrace,
    find_tp_module_candidates,
    kernelize,
    rule_comb_shaft,
    rule_comb_teeth,
    rule_tp_components,
    rule_tp_module_independent_set,
    rule_truncate_critical_cliques,
)
from .solver import Solution, enumerate_editions, solve, verify_edit

__all__ = [
    "Comb",
    "EditSet",
    "GenParams",
    "Graph",
    "Instance",
    "NotTriviallyPerfectError",
    "Obstruction",
    "Partition",
    "PrecedenceRelation",
    "ReductionStep",
    "ReductionTrace",
    "Solution",
    "SplitMix64",
    "UCD",
    "VARIANTS",
    "apply_edits",
    "build_precedence",
    "check_clique_decomposition",
    "closed_neighborhood",
    "compute_ucd",
    "connected_components",
    "critical_clique_partition",
    "enumerate_critical_combs",
    "enumerate_editions",
    "find_obstruction",
    "find_tp_module_candidates",
    "induced_subgraph",
    "is_module",
    "is_nested_family",
    "is_trivially_perfect",
    "kernelize",
    "open_neighborhood",
    "perturb",
    "plant_comb",
    "prune_precedence",
    "random_tp_graph",
    "realize_ucd",
    "rule_comb_shaft",
    "rule_comb_teeth",
    "rule_tp_components",
    "rule_tp_module_independent_set",
    "rule_truncate_critical_cliques",
    "solve",
    "tp_max_independent_set",
    "validate_comb",
    "verify_edit",
]
