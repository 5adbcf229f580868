"""Labeled undirected simple graphs and the set machinery built on them.

Vertices are non-negative integers and stay stable under deletion: removing
a vertex never renumbers the survivors, so traces and tests can name them
unambiguously.  All values are immutable once constructed and safe to share
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import AbstractSet, Iterable, Iterator, Mapping, Sequence

VertexSet = frozenset[int]
Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Return the pair in (low, high) order."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph over integer vertex identifiers.

    Invariants enforced on construction: adjacency is symmetric, there are
    no self-loops, and every edge endpoint is a known vertex.
    """

    __slots__ = ("_adj", "_vertices", "_edge_count", "_closed", "_edge_set")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Edge] = ()):
        vs = sorted(set(vertices))
        for v in vs:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex identifiers must be non-negative integers, got {v!r}")
        known = set(vs)
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if u not in known or v not in known:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[int, frozenset[int]] = {v: frozenset(nb) for v, nb in adj.items()}
        self._vertices: tuple[int, ...] = tuple(vs)
        self._edge_count = sum(len(nb) for nb in self._adj.values()) // 2
        self._closed: dict[int, frozenset[int]] = {}
        self._edge_set: frozenset[Edge] | None = None

    @classmethod
    def _from_adj(cls, adj: dict[int, frozenset[int]]) -> "Graph":
        """Trusted constructor: `adj` must already be a valid symmetric map."""
        g = object.__new__(cls)
        g._adj = adj
        g._vertices = tuple(sorted(adj))
        g._edge_count = sum(len(nb) for nb in adj.values()) // 2
        g._closed = {}
        g._edge_set = None
        return g

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> VertexSet:
        return frozenset(self._vertices)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._edge_count

    @property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v}") from None

    def closed(self, v: int) -> frozenset[int]:
        """Closed neighborhood of a single vertex, cached."""
        got = self._closed.get(v)
        if got is None:
            got = self.neighbors(v) | {v}
            self._closed[v] = got
        return got

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, frozenset())

    def edges(self) -> Iterator[Edge]:
        """All edges as (low, high) pairs in ascending lexicographic order."""
        for u in self._vertices:
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    @property
    def edge_set(self) -> frozenset[Edge]:
        if self._edge_set is None:
            self._edge_set = frozenset((u, v) for u in self._adj for v in self._adj[u] if u < v)
        return self._edge_set

    def without_vertices(self, drop: AbstractSet[int]) -> "Graph":
        """Copy of the graph with `drop` removed; survivors keep their ids."""
        adj = {v: nb - drop for v, nb in self._adj.items() if v not in drop}
        return Graph._from_adj({v: frozenset(nb) for v, nb in adj.items()})

    def with_edges_added(self, pairs: Iterable[Edge]) -> "Graph":
        added: dict[int, set[int]] = {}
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if u not in self._adj or v not in self._adj:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            added.setdefault(u, set()).add(v)
            added.setdefault(v, set()).add(u)
        if not added:
            return self
        adj = dict(self._adj)
        for v, extra in added.items():
            adj[v] = adj[v] | extra
        return Graph._from_adj(adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty classes covering a universe."""

    classes: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        total = 0
        for c in self.classes:
            if not c:
                raise ValueError("partition classes must be non-empty")
            total += len(c)
        if total != len(self.universe):
            raise ValueError("partition classes must be pairwise disjoint")

    @property
    def universe(self) -> VertexSet:
        return frozenset().union(*self.classes) if self.classes else frozenset()

    def class_of(self, v: int) -> VertexSet:
        for c in self.classes:
            if v in c:
                return c
        raise ValueError(f"vertex {v} not covered by the partition")

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class EditSet:
    """Unordered vertex pairs tagged add or delete.

    Pairs are normalized to (low, high); a pair may carry only one tag.
    Application is symmetric difference, so the tags describe intent
    relative to a reference graph and `verify_edit` checks they match it.
    """

    adds: frozenset[Edge] = field(default=frozenset())
    deletes: frozenset[Edge] = field(default=frozenset())

    def __post_init__(self) -> None:
        for u, v in self.adds | self.deletes:
            if u >= v:
                raise ValueError(f"pair ({u}, {v}) is not in (low, high) order")
        if self.adds & self.deletes:
            raise ValueError("a pair may not be tagged both add and delete")

    @property
    def pairs(self) -> frozenset[Edge]:
        return self.adds | self.deletes

    @property
    def size(self) -> int:
        return len(self.adds) + len(self.deletes)

    def __len__(self) -> int:
        return self.size

    def touches(self, vs: AbstractSet[int]) -> bool:
        return any(u in vs or v in vs for u, v in self.pairs)


def induced_subgraph(g: Graph, s: AbstractSet[int]) -> Graph:
    """Subgraph on `s` with identifiers preserved."""
    sub = frozenset(s)
    unknown = sub - set(g.adjacency)
    if unknown:
        raise ValueError(f"unknown vertices in induced subgraph request: {sorted(unknown)}")
    return Graph._from_adj({v: g.neighbors(v) & sub for v in sub})


def is_module(g: Graph, m: AbstractSet[int]) -> bool:
    """True iff all members of `m` have identical neighborhoods outside `m`."""
    ms = frozenset(m)
    if not ms:
        raise ValueError("the empty set is not a module")
    unknown = ms - set(g.adjacency)
    if unknown:
        raise ValueError(f"unknown vertices in module test: {sorted(unknown)}")
    it = iter(ms)
    ref = g.neighbors(next(it)) - ms
    return all(g.neighbors(v) - ms == ref for v in it)


def critical_clique_partition(g: Graph) -> Partition:
    """Group vertices by closed neighborhood: maximal true-twin classes.

    Classes are ordered by smallest member.
    """
    groups: dict[frozenset[int], list[int]] = {}
    for v in g.vertices:
        groups.setdefault(g.closed(v), []).append(v)
    classes = sorted((frozenset(vs) for vs in groups.values()), key=min)
    return Partition(tuple(classes))


def is_nested_family(sets: Sequence[AbstractSet[int]]) -> bool:
    """True iff every pair of sets is comparable under inclusion."""
    ordered = sorted((frozenset(s) for s in sets), key=len)
    for small, big in zip(ordered, ordered[1:]):
        if not small <= big:
            return False
    return True


def apply_edits(g: Graph, f: EditSet) -> Graph:
    """Symmetric difference of the edge set with the pairs of `f`.

    Toggling is involutive: applying the same edit set twice returns the
    original graph regardless of how the pairs are tagged.
    """
    known = set(g.adjacency)
    delta: dict[int, set[int]] = {}
    for u, v in f.pairs:
        if u not in known or v not in known:
            raise ValueError(f"edit pair ({u}, {v}) has an endpoint outside the graph")
        delta.setdefault(u, set()).add(v)
        delta.setdefault(v, set()).add(u)
    if not delta:
        return g
    adj = dict(g.adjacency)
    for v, flip in delta.items():
        adj[v] = adj[v] ^ flip
    return Graph._from_adj(adj)


def connected_components(g: Graph) -> list[VertexSet]:
    """Maximal connected vertex sets, listed in order of smallest member."""
    seen: set[int] = set()
    out: list[VertexSet] = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def closed_neighborhood(g: Graph, s: AbstractSet[int]) -> frozenset[int]:
    """Union of closed neighborhoods over the set."""
    out: set[int] = set(s)
    for v in s:
        out |= g.neighbors(v)
    return frozenset(out)


def open_neighborhood(g: Graph, s: AbstractSet[int]) -> frozenset[int]:
    """Closed neighborhood of the set minus the set itself."""
    return closed_neighborhood(g, s) - frozenset(s)
