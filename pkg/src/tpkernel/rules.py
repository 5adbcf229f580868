"""The five reduction rules and the fixpoint kernelization driver.

Rules are pure: each takes an instance and returns either None (not
applicable) or a reduced instance paired with a trace step.  The driver
applies them cheapest-first, restarting from the first rule after every
change, until none applies.  No rule ever touches the budget; the same
driver serves editing, completion and deletion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .combs import enumerate_critical_combs
from .graph import Edge, Graph, VertexSet, connected_components, critical_clique_partition, induced_subgraph, norm_edge
from .modular import tp_module_candidates
from .recognition import is_trivially_perfect, tp_max_independent_set

VARIANTS = ("editing", "completion", "deletion")


@dataclass(frozen=True)
class Instance:
    """A graph, a non-negative edit budget and the problem variant."""

    graph: Graph
    budget: int
    variant: str

    def __post_init__(self) -> None:
        if self.budget < 0:
            raise ValueError("budget must be non-negative")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")


@dataclass(frozen=True)
class ReductionStep:
    rule: int
    removed: tuple[int, ...]
    added_edges: tuple[Edge, ...]
    note: str

    def __post_init__(self) -> None:
        if self.added_edges and self.rule != 5:
            raise ValueError("only rule 5 may add edges")


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...] = field(default=())

    def rule_counts(self) -> dict[int, int]:
        counts = {r: 0 for r in range(1, 6)}
        for s in self.steps:
            counts[s.rule] += 1
        return counts


RuleResult = Optional[tuple[Instance, ReductionStep]]


def _drop(inst: Instance, removed: list[int], rule: int, note: str) -> tuple[Instance, ReductionStep]:
    removed_t = tuple(sorted(removed))
    g2 = inst.graph.without_vertices(set(removed_t))
    step = ReductionStep(rule, removed_t, (), note)
    return Instance(g2, inst.budget, inst.variant), step


def rule_tp_components(inst: Instance) -> RuleResult:
    """Rule 1: delete every connected component that is trivially perfect."""
    g = inst.graph
    doomed: list[int] = []
    hit = 0
    for comp in connected_components(g):
        if is_trivially_perfect(induced_subgraph(g, comp)):
            doomed.extend(comp)
            hit += 1
    if not doomed:
        return None
    return _drop(inst, doomed, 1, f"removed {hit} trivially perfect component(s)")


def rule_truncate_critical_cliques(inst: Instance) -> RuleResult:
    """Rule 2: shrink every critical clique to at most budget+1 vertices,
    keeping the lowest identifiers."""
    g = inst.graph
    limit = inst.budget + 1
    doomed: list[int] = []
    hit = 0
    for cls in critical_clique_partition(g).classes:
        if len(cls) > limit:
            doomed.extend(sorted(cls)[limit:])
            hit += 1
    if not doomed:
        return None
    return _drop(inst, doomed, 2, f"truncated {hit} critical clique(s) to {limit} vertices")


def find_tp_module_candidates(g: Graph) -> list[VertexSet]:
    """Modules with trivially perfect induced subgraphs: decomposition
    nodes plus, per parallel node, the union of its trivially perfect
    children.  Soundness of rule 3 never rests on completeness here; every
    candidate is a verified module."""
    return tp_module_candidates(g)


def rule_tp_module_independent_set(inst: Instance) -> RuleResult:
    """Rule 3: a trivially perfect module whose maximum independent set has
    at least 2k+5 vertices keeps exactly that independent set."""
    g = inst.graph
    need = 2 * inst.budget + 5
    candidates = [m for m in find_tp_module_candidates(g) if len(m) >= need]
    candidates.sort(key=lambda m: (-len(m), min(m)))
    for m in candidates:
        sub = induced_subgraph(g, m)
        ind = tp_max_independent_set(sub)
        if len(ind) < need:
            continue
        doomed = m - ind
        if not doomed:
            continue
        return _drop(
            inst,
            sorted(doomed),
            3,
            f"module of {len(m)} kept as independent set of {len(ind)}",
        )
    return None


def rule_comb_shaft(inst: Instance) -> RuleResult:
    """Rule 4: cut critical combs down to their first 2k+2 positions."""
    g = inst.graph
    cutoff = 2 * inst.budget + 2
    for comb in enumerate_critical_combs(g):
        if comb.length <= cutoff:
            continue
        doomed: set[int] = set()
        for i in range(cutoff, comb.length):
            doomed |= comb.shaft[i] | comb.teeth[i]
        return _drop(
            inst,
            sorted(doomed),
            4,
            f"comb of length {comb.length} truncated to {cutoff} positions",
        )
    return None


def rule_comb_teeth(inst: Instance) -> RuleResult:
    """Rule 5: in a critical comb with enough teeth mass below, replace
    every tooth above the window by a clique of at most k+1 vertices with
    the same neighborhood.

    The window is fixed by taking the last position a whose tail holds at
    least 2k+1 tooth vertices, then the last position b below a whose
    stretch up to a holds at least 2k+1 more: that choice maximizes the
    replaced prefix.  Kept vertices are the lowest identifiers; missing
    internal edges are filled (the outside neighborhood is already uniform
    because teeth are modules).
    """
    g = inst.graph
    k = inst.budget
    need = 2 * k + 1
    keep_cap = k + 1
    for comb in enumerate_critical_combs(g):
        sizes = [len(t) for t in comb.teeth]
        a = None
        acc = 0
        for idx in range(comb.length - 1, -1, -1):
            acc += sizes[idx]
            if acc >= need:
                a = idx
                break
        if a is None:
            continue
        b = None
        acc = 0
        for idx in range(a - 1, -1, -1):
            acc += sizes[idx]
            if acc >= need:
                b = idx
                break
        if b is None:
            continue
        removed: list[int] = []
        added: list[Edge] = []
        for i in range(b):
            tooth = sorted(comb.teeth[i])
            kept = tooth[:keep_cap]
            removed.extend(tooth[keep_cap:])
            for x_pos, u in enumerate(kept):
                for v in kept[x_pos + 1:]:
                    if not g.has_edge(u, v):
                        added.append(norm_edge(u, v))
        if not removed and not added:
            continue
        g2 = g.without_vertices(set(removed)).with_edges_added(added)
        step = ReductionStep(
            5,
            tuple(sorted(removed)),
            tuple(sorted(added)),
            f"replaced {b} tooth/teeth by cliques of at most {keep_cap}",
        )
        return Instance(g2, inst.budget, inst.variant), step
    return None


_RULES = (
    rule_tp_components,
    rule_truncate_critical_cliques,
    rule_tp_module_independent_set,
    rule_comb_shaft,
    rule_comb_teeth,
)


def kernelize(inst: Instance) -> tuple[Instance, ReductionTrace]:
    """Apply rules 1..5 to fixpoint, restarting after every change.

    Terminates because every step either deletes a vertex or only fills
    edges inside teeth, which cannot be undone by later steps.
    """
    steps: list[ReductionStep] = []
    cur = inst
    while True:
        for rule in _RULES:
            res = rule(cur)
            if res is not None:
                cur, step = res
                steps.append(step)
                break
        else:
            break
    return cur, ReductionTrace(tuple(steps))
