"""Trivially perfect recognition, obstruction certificates and the
universal clique decomposition (UCD).

A graph is trivially perfect exactly when it has no induced four-vertex
path or cycle.  Recognition works by iterated peeling: split into
connected components, strip each component's universal vertices, recurse.
A component that stalls with no universal vertex witnesses failure, and
the peeling itself yields the UCD, a rooted forest of universal-clique
bags that is unique up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Optional

from .graph import (
    Graph,
    VertexSet,
    critical_clique_partition,
    induced_subgraph,
    is_nested_family,
    open_neighborhood,
)


@dataclass(frozen=True)
class Obstruction:
    """An induced P4 or C4, witnesses listed in path or cycle order."""

    kind: str  # "P4" or "C4"
    witnesses: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if self.kind not in ("P4", "C4"):
            raise ValueError(f"unknown obstruction kind {self.kind!r}")
        if len(set(self.witnesses)) != 4:
            raise ValueError("an obstruction needs four distinct witnesses")


class NotTriviallyPerfectError(ValueError):
    """Raised when an operation requires a trivially perfect input."""

    def __init__(self, obstruction: Obstruction):
        self.obstruction = obstruction
        w = " ".join(str(v) for v in obstruction.witnesses)
        super().__init__(f"graph is not trivially perfect: induced {obstruction.kind} on {w}")


@dataclass(frozen=True)
class UCD:
    """Rooted forest of disjoint non-empty bags, nodes in pre-order.

    ``parents[i]`` is the parent node id (strictly smaller than ``i``) or
    None for roots.  Two graph vertices are adjacent in the realized graph
    iff they share a bag or their bags are in ancestor-descendant relation.
    """

    parents: tuple[Optional[int], ...]
    bags: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        if len(self.parents) != len(self.bags):
            raise ValueError("parents and bags must have the same length")
        total = 0
        for i, (p, bag) in enumerate(zip(self.parents, self.bags)):
            if p is not None and not (0 <= p < i):
                raise ValueError(f"node {i} has invalid parent {p}; nodes must be in pre-order")
            if not bag:
                raise ValueError(f"bag of node {i} is empty")
            total += len(bag)
        if self.bags and total != len(frozenset().union(*self.bags)):
            raise ValueError("bags must be pairwise disjoint")

    @property
    def node_count(self) -> int:
        return len(self.bags)

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parents) if p is None)

    def children(self, i: int) -> tuple[int, ...]:
        return tuple(j for j, p in enumerate(self.parents) if p == i)

    @property
    def children_map(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {i: [] for i in range(self.node_count)}
        for j, p in enumerate(self.parents):
            if p is not None:
                out[p].append(j)
        return out

    @property
    def leaves(self) -> tuple[int, ...]:
        nonleaf = {p for p in self.parents if p is not None}
        return tuple(i for i in range(self.node_count) if i not in nonleaf)

    def vertex_set(self) -> VertexSet:
        return frozenset().union(*self.bags) if self.bags else frozenset()


def _subcomponents(adj: dict[int, frozenset[int]]) -> list[frozenset[int]]:
    """Connected components of a restricted adjacency map, by smallest member."""
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def _peel(g: Graph, build_nodes: bool):
    """Shared peeling core.

    Returns ``(rawnodes, stalled)`` where rawnodes is a list of
    ``(bag, raw parent id)`` (empty unless build_nodes) and stalled is the
    first component, in depth-first smallest-vertex order, that has no
    universal vertex — or None when the graph is trivially perfect.
    """
    full = g.adjacency
    rawnodes: list[tuple[frozenset[int], Optional[int]]] = []
    stack: list[tuple[dict[int, frozenset[int]], Optional[int]]] = []
    for comp in reversed(_subcomponents(dict(full))):
        stack.append(({v: full[v] for v in comp}, None))
    while stack:
        sub, parent = stack.pop()
        size = len(sub)
        bag = frozenset(v for v, nb in sub.items() if len(nb) == size - 1)
        if not bag:
            return rawnodes, frozenset(sub)
        nid: Optional[int] = None
        if build_nodes:
            nid = len(rawnodes)
            rawnodes.append((bag, parent))
        rest = {v: sub[v] - bag for v in sub if v not in bag}
        if rest:
            for comp in reversed(_subcomponents(rest)):
                stack.append(({v: rest[v] for v in comp}, nid))
    return rawnodes, None


def is_trivially_perfect(g: Graph) -> bool:
    """Peeling recognition: True iff no component ever stalls."""
    return _peel(g, build_nodes=False)[1] is None


def _canonical_path(a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    return (a, b, c, d) if a < d else (d, c, b, a)


def _canonical_cycle(cyc: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    orders = []
    for seq in (cyc, tuple(reversed(cyc))):
        for r in range(4):
            orders.append(tuple(seq[(r + i) % 4] for i in range(4)))
    return min(orders)


def _obstruction_in(g: Graph, comp: frozenset[int]) -> Obstruction:
    """Extract a certificate from a component with no universal vertex.

    A connected graph is trivially perfect iff every edge joins vertices
    with inclusion-comparable closed neighborhoods; the first incomparable
    edge in ascending order yields an induced P4 or C4 directly.
    """
    for u in sorted(comp):
        nu = g.closed(u)
        for v in sorted(g.neighbors(u) & comp):
            if v <= u:
                continue
            nv = g.closed(v)
            only_u = nu - nv
            if not only_u:
                continue
            only_v = nv - nu
            if not only_v:
                continue
            x = min(only_u)
            y = min(only_v)
            if g.has_edge(x, y):
                return Obstruction("C4", _canonical_cycle((u, x, y, v)))
            return Obstruction("P4", _canonical_path(x, u, v, y))
    raise AssertionError("stalled component without incomparable edge")


def find_obstruction(g: Graph) -> Optional[Obstruction]:
    """An induced P4/C4 certificate, or None when the graph is trivially perfect."""
    _, stalled = _peel(g, build_nodes=False)
    if stalled is None:
        return None
    return _obstruction_in(g, stalled)


def compute_ucd(g: Graph) -> UCD:
    """Universal clique decomposition of a trivially perfect graph.

    Roots correspond to connected components; each bag is the full set of
    universal vertices of its subtree's induced subgraph.  Children (and
    roots) are ordered by the smallest vertex in their subtree and nodes
    are numbered in pre-order, which makes the result deterministic.
    """
    rawnodes, stalled = _peel(g, build_nodes=True)
    if stalled is not None:
        raise NotTriviallyPerfectError(_obstruction_in(g, stalled))
    if not rawnodes:
        return UCD((), ())
    children: dict[Optional[int], list[int]] = {}
    for i, (_, parent) in enumerate(rawnodes):
        children.setdefault(parent, []).append(i)
    subtree_min = [0] * len(rawnodes)
    for i in range(len(rawnodes) - 1, -1, -1):
        m = min(rawnodes[i][0])
        for c in children.get(i, ()):
            m = min(m, subtree_min[c])
        subtree_min[i] = m
    parents: list[Optional[int]] = []
    bags: list[frozenset[int]] = []
    stack = [(raw, None) for raw in sorted(children.get(None, ()), key=lambda r: subtree_min[r], reverse=True)]
    while stack:
        raw, parent = stack.pop()
        nid = len(bags)
        parents.append(parent)
        bags.append(rawnodes[raw][0])
        for c in sorted(children.get(raw, ()), key=lambda r: subtree_min[r], reverse=True):
            stack.append((c, nid))
    return UCD(tuple(parents), tuple(bags))


def realize_ucd(d: UCD) -> Graph:
    """Inverse construction: vertices are the bag union, adjacency means
    same bag or strict ancestor-descendant bags."""
    adj: dict[int, set[int]] = {v: set() for bag in d.bags for v in bag}
    children = d.children_map
    stack: list[tuple[int, tuple[int, ...]]] = [(r, ()) for r in reversed(d.roots)]
    while stack:
        node, anc = stack.pop()
        bag = sorted(d.bags[node])
        for i, u in enumerate(bag):
            for v in bag[i + 1:]:
                adj[u].add(v)
                adj[v].add(u)
            for a in anc:
                adj[u].add(a)
                adj[a].add(u)
        here = anc + tuple(bag)
        for c in reversed(children[node]):
            stack.append((c, here))
    return Graph._from_adj({v: frozenset(nb) for v, nb in adj.items()})


def tp_max_independent_set(g: Graph) -> VertexSet:
    """Lowest-identifier vertex of each UCD leaf bag.

    A maximum antichain of the decomposition forest is its leaf set, so
    one representative per leaf bag is a maximum independent set.
    """
    d = compute_ucd(g)
    return frozenset(min(d.bags[i]) for i in d.leaves)


def _is_clique(g: Graph, s: AbstractSet[int]) -> bool:
    return all(g.neighbors(v) >= (frozenset(s) - {v}) for v in s)


def check_clique_decomposition(g: Graph, s: AbstractSet[int]) -> bool:
    """Maximal-clique characterization check.

    With S a maximal clique and K_1..K_r the components of G minus S, the
    graph is trivially perfect iff (i) every G[S union K_i] is trivially
    perfect, (ii) the component neighborhoods form a nested family, and
    (iii) every component is fully adjacent to its neighborhood in S.
    """
    ss = frozenset(s)
    unknown = ss - set(g.adjacency)
    if unknown:
        raise ValueError(f"unknown vertices in clique: {sorted(unknown)}")
    if not ss and g.n > 0:
        raise ValueError("the empty set is not a maximal clique of a non-empty graph")
    if not _is_clique(g, ss):
        raise ValueError("the given set is not a clique")
    for v in g.vertices:
        if v not in ss and g.neighbors(v) >= ss:
            raise ValueError("the given clique is not maximal")

    rest = g.without_vertices(ss)
    comps = _subcomponents(dict(rest.adjacency))
    hoods = []
    for comp in comps:
        if not is_trivially_perfect(induced_subgraph(g, ss | comp)):
            return False
        hood = open_neighborhood(g, comp)
        hoods.append(hood)
        # full adjacency: every component vertex sees the whole neighborhood
        for v in comp:
            if not hood <= g.neighbors(v):
                return False
    return is_nested_family(hoods)


def ucd_bags_are_critical_cliques(g: Graph, d: UCD) -> bool:
    """Cross-check helper: every bag is a critical clique of the graph."""
    classes = set(critical_clique_partition(g).classes)
    return all(bag in classes for bag in d.bags)


def ucd_to_lines(d: UCD, offset: int = 0) -> list[str]:
    """Text form, one line per node in pre-order; vertex ids shifted by offset."""
    out = []
    for i, (p, bag) in enumerate(zip(d.parents, d.bags)):
        pid = "-" if p is None else str(p)
        vs = ",".join(str(v + offset) for v in sorted(bag))
        out.append(f"node {i} parent {pid} bag {vs}")
    return out
