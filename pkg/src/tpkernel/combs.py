"""Combs: clique shafts with module teeth, and their enumeration.

A comb is a pair (C, R) where C is a clique split into critical cliques
C_1..C_l and R splits into l non-empty, pairwise non-adjacent trivially
perfect modules R_1..R_l, with nested adjacency between shaft and teeth
and two attachment sets: one seeing the whole comb, one seeing the shaft
only (the latter non-empty).  Enumeration builds a precedence relation
over critical cliques, prunes it to a forest, and materializes one comb
candidate per forest chain; survivors are the inclusion-maximal validated
combs whose closure is not a trivially perfect module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    critical_clique_partition,
    induced_subgraph,
    is_module,
    open_neighborhood,
)
from .recognition import is_trivially_perfect


@dataclass(frozen=True)
class Comb:
    """Ordered shaft and teeth partitions plus the two attachment sets.

    ``attach_all`` is adjacent to every comb vertex, ``attach_shaft`` to
    the shaft only.
    """

    shaft: tuple[VertexSet, ...]
    teeth: tuple[VertexSet, ...]
    attach_all: VertexSet
    attach_shaft: VertexSet

    @property
    def length(self) -> int:
        return len(self.shaft)

    @property
    def shaft_union(self) -> VertexSet:
        return frozenset().union(*self.shaft)

    @property
    def teeth_union(self) -> VertexSet:
        return frozenset().union(*self.teeth)

    @property
    def span(self) -> VertexSet:
        return self.shaft_union | self.teeth_union

    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Deduplication key: the sorted pair (shaft union, teeth union)."""
        return (tuple(sorted(self.shaft_union)), tuple(sorted(self.teeth_union)))


@dataclass(frozen=True)
class PrecedenceRelation:
    """Ordered pairs (parent, child) over critical-clique indices."""

    pairs: frozenset[tuple[int, int]]

    def predecessors(self, node: int) -> tuple[int, ...]:
        return tuple(sorted(p for p, c in self.pairs if c == node))


def validate_comb(g: Graph, shaft: Sequence[VertexSet], teeth: Sequence[VertexSet]) -> Optional[Comb]:
    """Check the comb conditions; None signals "not a comb".

    The attachment sets are derived, not supplied: the all-seeing set is
    the teeth's outside neighborhood minus the shaft, the shaft-only set
    is what remains of the shaft's neighborhood.
    """
    classes = set(critical_clique_partition(g).classes)
    return _validate(g, shaft, teeth, classes)


def _validate(
    g: Graph,
    shaft: Sequence[VertexSet],
    teeth: Sequence[VertexSet],
    crit_classes: set[VertexSet],
) -> Optional[Comb]:
    l = len(shaft)
    if l < 1 or len(teeth) != l:
        return None
    shaft = tuple(frozenset(s) for s in shaft)
    teeth = tuple(frozenset(t) for t in teeth)
    c_all: frozenset[int] = frozenset().union(*shaft)
    r_all: frozenset[int] = frozenset().union(*teeth)
    if len(c_all) != sum(len(s) for s in shaft) or len(r_all) != sum(len(t) for t in teeth):
        return None
    if c_all & r_all or not (c_all | r_all) <= g.vertex_set:
        return None
    for s in shaft:
        if s not in crit_classes:
            return None
    for v in c_all:
        if not (c_all - {v}) <= g.neighbors(v):
            return None
    tooth_hoods = []
    for t in teeth:
        if not t:
            return None
        if not is_module(g, t):
            return None
        if not is_trivially_perfect(induced_subgraph(g, t)):
            return None
        tooth_hoods.append(open_neighborhood(g, t))
    for i, hood in enumerate(tooth_hoods):
        if hood & (r_all - teeth[i]):
            return None  # teeth must be pairwise non-adjacent

    span = c_all | r_all
    attach_all = open_neighborhood(g, r_all) - c_all
    attach_shaft = open_neighborhood(g, c_all) - r_all - attach_all
    if not attach_shaft:
        return None
    outside_shaft = attach_all | attach_shaft
    for x in c_all:
        if g.neighbors(x) - span != outside_shaft:
            return None
    for y in r_all:
        if g.neighbors(y) - span != attach_all:
            return None

    suffix: frozenset[int] = frozenset()
    suffixes = [frozenset()] * l
    for i in range(l - 1, -1, -1):
        suffix = suffix | teeth[i]
        suffixes[i] = suffix
    prefix: frozenset[int] = frozenset()
    for i in range(l):
        prefix = prefix | shaft[i]
        if open_neighborhood(g, shaft[i]) & r_all != suffixes[i]:
            return None
        if tooth_hoods[i] & c_all != prefix:
            return None

    # follows from the conditions above; kept as a defensive assertion
    if not is_trivially_perfect(induced_subgraph(g, span)):
        return None
    return Comb(shaft, teeth, attach_all, attach_shaft)


def _precedence_pairs(g: Graph, cliques: tuple[VertexSet, ...]):
    """Yield (parent, child) index pairs of the raw precedence relation.

    (C', C'') qualifies when N[C''] is strictly inside N[C'], the leftover
    N[C']-minus-N[C''] is a trivially perfect module, and its neighborhood
    is strictly inside N(C'').  Superset candidates come from an inverted
    vertex-to-clique index so only containment pairs are ever examined.
    """
    closed = [closed_neighborhood(g, c) for c in cliques]
    opens = [closed[i] - cliques[i] for i in range(len(cliques))]
    containing: dict[int, set[int]] = {}
    for j, hood in enumerate(closed):
        for v in hood:
            containing.setdefault(v, set()).add(j)
    for i in range(len(cliques)):
        members = sorted(closed[i], key=lambda v: len(containing[v]))
        supers = set(containing[members[0]])
        for v in members[1:]:
            if len(supers) <= 1:
                break
            supers &= containing[v]
        supers.discard(i)
        # distinct critical cliques have distinct closed neighborhoods,
        # so containment here is automatically strict
        for j in sorted(supers):
            leftover = closed[j] - closed[i]
            if not leftover:
                continue
            if not open_neighborhood(g, leftover) < opens[i]:
                continue
            if not is_module(g, leftover):
                continue
            if not is_trivially_perfect(induced_subgraph(g, leftover)):
                continue
            yield (j, i)


def build_precedence(g: Graph) -> PrecedenceRelation:
    """Raw precedence relation over the critical-clique partition indices."""
    cliques = critical_clique_partition(g).classes
    return PrecedenceRelation(frozenset(_precedence_pairs(g, cliques)))


def prune_precedence(rel: PrecedenceRelation) -> PrecedenceRelation:
    """Drop every incoming pair of nodes that have two or more predecessors."""
    indeg: dict[int, int] = {}
    for _, child in rel.pairs:
        indeg[child] = indeg.get(child, 0) + 1
    ambiguous = {c for c, d in indeg.items() if d >= 2}
    return PrecedenceRelation(frozenset(p for p in rel.pairs if p[1] not in ambiguous))


def _qualifying_union(g: Graph, x: VertexSet, want_hood: VertexSet) -> frozenset[int]:
    """Union of components of G[x] that are TP modules with the wanted neighborhood."""
    out: set[int] = set()
    seen: set[int] = set()
    for start in sorted(x):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if w in x and w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        if open_neighborhood(g, comp) != want_hood:
            continue
        if not is_module(g, comp):
            continue
        if is_trivially_perfect(induced_subgraph(g, comp)):
            out |= comp
    return frozenset(out)


def _chain_candidate(
    g: Graph,
    cliques: tuple[VertexSet, ...],
    closed: list[VertexSet],
    opens: list[VertexSet],
    chain: Sequence[int],
    crit_classes: set[VertexSet],
) -> Optional[Comb]:
    """Materialize and validate the comb candidate of one forest chain."""
    l = len(chain)
    shaft = [cliques[i] for i in chain]
    if l == 1:
        x = opens[chain[0]]
        want = cliques[chain[0]]
        teeth: list[VertexSet] = []
    else:
        teeth = [closed[a] - closed[b] for a, b in zip(chain, chain[1:])]
        hood_prev = open_neighborhood(g, teeth[-1])
        x = opens[chain[-1]] - hood_prev
        want = cliques[chain[-1]] | hood_prev
    last = _qualifying_union(g, x, want)
    if not last:
        return None
    teeth.append(last)
    return _validate(g, shaft, teeth, crit_classes)


def enumerate_critical_combs(g: Graph) -> list[Comb]:
    """All critical combs of the graph (possibly plus other maximal combs).

    Every chain of the pruned precedence forest (all contiguous sub-chains,
    including single nodes) yields one candidate: the first l-1 teeth are
    forced as closed-neighborhood differences of consecutive shaft cliques
    and the last tooth collects the qualifying components hanging below.
    Candidates are validated, deduplicated, restricted to inclusion-wise
    maximal ones, and filtered so the span plus shaft-attachment is never
    a trivially perfect module.  The result is canonically ordered.
    """
    cliques = critical_clique_partition(g).classes
    crit_classes = set(cliques)
    closed = [closed_neighborhood(g, c) for c in cliques]
    opens = [closed[i] - cliques[i] for i in range(len(cliques))]
    pruned = prune_precedence(PrecedenceRelation(frozenset(_precedence_pairs(g, cliques))))
    parent: dict[int, int] = {child: par for par, child in pruned.pairs}

    found: dict[tuple, Comb] = {}
    for bottom in range(len(cliques)):
        up = [bottom]
        cur = bottom
        while cur in parent:
            cur = parent[cur]
            up.append(cur)
        for top in range(len(up)):
            chain = list(reversed(up[: top + 1]))
            comb = _chain_candidate(g, cliques, closed, opens, chain, crit_classes)
            if comb is not None:
                found.setdefault(comb.key(), comb)

    combs = list(found.values())
    maximal = []
    for c in combs:
        dominated = False
        for o in combs:
            if o is c:
                continue
            if (
                c.shaft_union <= o.shaft_union
                and c.teeth_union <= o.teeth_union
                and (c.shaft_union != o.shaft_union or c.teeth_union != o.teeth_union)
            ):
                dominated = True
                break
        if not dominated:
            maximal.append(c)

    critical = []
    for c in maximal:
        closure = c.span | c.attach_shaft
        if is_module(g, closure) and is_trivially_perfect(induced_subgraph(g, closure)):
            continue
        critical.append(c)
    critical.sort(key=Comb.key)
    return critical
