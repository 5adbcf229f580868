"""Module discovery by recursive decomposition.

The recursion splits disconnected graphs into components, join-decomposable
graphs into co-components, and everything else by partition refinement
around a pivot vertex (the classes are the maximal modules avoiding the
pivot).  Each node of the recursion is a genuine module; whether its
induced subgraph is trivially perfect falls out of the node kinds without
any extra recognition pass:

  * leaf: trivially perfect, clique;
  * parallel: trivially perfect iff all children are; never a clique;
  * series: a join is trivially perfect iff at most one part has a
    non-edge and all parts are trivially perfect;
  * refinement (connected and co-connected): contains an induced P4,
    hence never trivially perfect.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, VertexSet


def _components_of(adj: dict[int, frozenset[int]]) -> list[frozenset[int]]:
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


def _co_components_of(adj: dict[int, frozenset[int]]) -> list[frozenset[int]]:
    """Connected components of the complement, without materializing it.

    Universal vertices are split off first (each is its own co-component),
    which keeps the generic complement search on the small leftover part.
    """
    size = len(adj)
    universal = [v for v, nb in adj.items() if len(nb) == size - 1]
    out = [frozenset((v,)) for v in universal]
    rest = {v: nb for v, nb in adj.items() if len(nb) < size - 1}
    unseen = set(rest)
    while unseen:
        start = min(unseen)
        unseen.discard(start)
        comp = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            strangers = unseen - rest[v]
            if strangers:
                unseen -= strangers
                comp |= strangers
                queue.extend(strangers)
        out.append(frozenset(comp))
    out.sort(key=min)
    return out


def _pivot_refinement(adj: dict[int, frozenset[int]]) -> list[frozenset[int]]:
    """Coarsest partition separating the smallest vertex whose classes are
    all modules of the (connected, co-connected) subgraph."""
    pivot = min(adj)
    hood = adj[pivot]
    classes: list[set[int]] = [{pivot}]
    if hood:
        classes.append(set(hood))
    rest = set(adj) - hood - {pivot}
    if rest:
        classes.append(rest)
    changed = True
    while changed:
        changed = False
        for splitter in sorted(adj):
            nb = adj[splitter]
            refined: list[set[int]] = []
            for cl in classes:
                if splitter in cl or len(cl) == 1:
                    refined.append(cl)
                    continue
                inside = cl & nb
                if inside and len(inside) < len(cl):
                    refined.append(inside)
                    refined.append(cl - inside)
                    changed = True
                else:
                    refined.append(cl)
            classes = refined
    return sorted((frozenset(cl) for cl in classes), key=min)


def module_nodes(g: Graph) -> list[tuple[VertexSet, bool]]:
    """All decomposition-node vertex sets with their induced-TP flag.

    Also contains, for each parallel node, the union of its trivially
    perfect children.  Deterministic order, duplicates removed.
    """
    if g.n == 0:
        return []
    out: list[tuple[VertexSet, bool]] = []
    recorded: set[VertexSet] = set()

    def record(vs: VertexSet, tp: bool) -> None:
        if vs not in recorded:
            recorded.add(vs)
            out.append((vs, tp))

    # (tp, clique) per processed vertex set
    results: dict[VertexSet, tuple[bool, bool]] = {}
    full = dict(g.adjacency)
    root = g.vertex_set
    stack: list[tuple[str, VertexSet, dict[int, frozenset[int]], str, list[VertexSet]]] = [
        ("enter", root, full, "", [])
    ]
    while stack:
        phase, vs, adj, kind, children = stack.pop()
        if phase == "exit":
            tps = [results[c][0] for c in children]
            cliques = [results[c][1] for c in children]
            if kind == "parallel":
                tp = all(tps)
                clique = False
                tp_union = [c for c, child_tp in zip(children, tps) if child_tp]
                if tp_union:
                    record(frozenset().union(*tp_union), True)
            elif kind == "series":
                clique = all(cliques)
                tp = all(tps) and sum(1 for c in cliques if not c) <= 1
            else:
                tp = False
                clique = False
            results[vs] = (tp, clique)
            record(vs, tp)
            continue
        if vs in results:
            continue
        if len(vs) == 1:
            results[vs] = (True, True)
            record(vs, True)
            continue
        comps = _components_of(adj)
        if len(comps) > 1:
            kind = "parallel"
            parts = comps
        else:
            cocomps = _co_components_of(adj)
            if len(cocomps) > 1:
                kind = "series"
                parts = cocomps
            else:
                kind = "refinement"
                parts = _pivot_refinement(adj)
        stack.append(("exit", vs, adj, kind, list(parts)))
        for part in reversed(parts):
            sub = {v: adj[v] & part for v in part}
            stack.append(("enter", part, sub, "", []))
    return out


def tp_module_candidates(g: Graph) -> list[VertexSet]:
    """Vertex sets of decomposition nodes (plus parallel unions) whose
    induced subgraphs are trivially perfect."""
    return [vs for vs, tp in module_nodes(g) if tp]
