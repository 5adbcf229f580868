"""Bounded-search-tree exact solver and edit verification.

The solver finds an obstruction and branches on its vertex pairs with the
variant-legal toggle, recursing with one unit less budget.  Iterating the
budget upward from zero makes the first witness minimum-sized, and sorted
branch order keeps it deterministic.  This is the correctness oracle for
the kernel rules; it is meant for desk-scale instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb as binomial
from typing import Optional

from .graph import EditSet, Edge, Graph, apply_edits, norm_edge
from .recognition import Obstruction, find_obstruction, is_trivially_perfect
from .rules import Instance, VARIANTS

_MEMO_MAX_VERTICES = 14
_ENUM_BUDGET = 2_000_000


@dataclass(frozen=True)
class Solution:
    edits: EditSet
    size: int

    def __post_init__(self) -> None:
        if self.size != self.edits.size:
            raise ValueError("solution size must equal the number of edit pairs")


def _obstruction_pairs(ob: Obstruction) -> list[Edge]:
    return sorted(norm_edge(u, v) for u, v in itertools.combinations(ob.witnesses, 2))


def _toggle(g: Graph, pair: Edge) -> Graph:
    u, v = pair
    adj = dict(g.adjacency)
    if g.has_edge(u, v):
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
    else:
        adj[u] = adj[u] | {v}
        adj[v] = adj[v] | {u}
    return Graph._from_adj(adj)


def _search(
    g: Graph,
    budget: int,
    variant: str,
    touched: frozenset[Edge],
    memo: Optional[dict[frozenset[Edge], int]],
) -> Optional[frozenset[Edge]]:
    ob = find_obstruction(g)
    if ob is None:
        return frozenset()
    if budget == 0:
        return None
    key = None
    if memo is not None:
        key = g.edge_set
        if memo.get(key, 0) >= budget:
            return None
    for pair in _obstruction_pairs(ob):
        if pair in touched:
            continue
        present = g.has_edge(*pair)
        if variant == "completion" and present:
            continue
        if variant == "deletion" and not present:
            continue
        sub = _search(_toggle(g, pair), budget - 1, variant, touched | {pair}, memo)
        if sub is not None:
            return sub | {pair}
    if memo is not None and key is not None:
        memo[key] = budget
    return None


def solve(inst: Instance) -> Optional[Solution]:
    """Minimum-size witness within the budget, or None.

    The witness is found by running the bounded search with budgets
    0, 1, ..., k and returning the first success.
    """
    g = inst.graph
    memo: Optional[dict[frozenset[Edge], int]] = {} if g.n <= _MEMO_MAX_VERTICES else None
    edge_set = g.edge_set
    for budget in range(inst.budget + 1):
        pairs = _search(g, budget, inst.variant, frozenset(), memo)
        if pairs is None:
            continue
        adds = frozenset(p for p in pairs if p not in edge_set)
        deletes = frozenset(p for p in pairs if p in edge_set)
        edits = EditSet(adds=adds, deletes=deletes)
        return Solution(edits, edits.size)
    return None


def verify_edit(g: Graph, f: EditSet, variant: str, k: int) -> bool:
    """True iff `f` fits the budget, respects the variant against `g`,
    and its application yields a trivially perfect graph."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    known = set(g.adjacency)
    for u, v in f.pairs:
        if u not in known or v not in known:
            raise ValueError(f"edit pair ({u}, {v}) has an endpoint outside the graph")
    if f.size > k:
        return False
    edge_set = g.edge_set
    if any(p in edge_set for p in f.adds):
        return False
    if any(p not in edge_set for p in f.deletes):
        return False
    if variant == "completion" and f.deletes:
        return False
    if variant == "deletion" and f.adds:
        return False
    return is_trivially_perfect(apply_edits(g, f))


def _candidate_pairs(g: Graph, variant: str) -> list[Edge]:
    allpairs = itertools.combinations(g.vertices, 2)
    if variant == "editing":
        return [norm_edge(u, v) for u, v in allpairs]
    edge_set = g.edge_set
    if variant == "completion":
        return [norm_edge(u, v) for u, v in allpairs if norm_edge(u, v) not in edge_set]
    return sorted(edge_set)


def enumerate_editions(g: Graph, k: int, variant: str) -> list[EditSet]:
    """Every variant-legal edit set of size at most k whose application is
    trivially perfect, by exhaustive subsets of the candidate pairs.

    Guarded by total workload rather than raw vertex count so that small-k
    checks on mid-size fixtures stay possible; anything past the guard is
    an input error.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if k < 0:
        raise ValueError("budget must be non-negative")
    candidates = _candidate_pairs(g, variant)
    workload = sum(binomial(len(candidates), i) for i in range(min(k, len(candidates)) + 1))
    if workload > _ENUM_BUDGET:
        raise ValueError(
            f"exhaustive enumeration of {workload} subsets exceeds the guard ({_ENUM_BUDGET})"
        )
    edge_set = g.edge_set
    out: list[EditSet] = []
    for size in range(min(k, len(candidates)) + 1):
        for chosen in itertools.combinations(candidates, size):
            edits = EditSet(
                adds=frozenset(p for p in chosen if p not in edge_set),
                deletes=frozenset(p for p in chosen if p in edge_set),
            )
            if is_trivially_perfect(apply_edits(g, edits)):
                out.append(edits)
    return out
