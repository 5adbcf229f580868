"""Independent brute-force oracles.

Everything here avoids the library's recognition/enumeration code paths on
purpose: values asserted in tests are computed by exhaustive scans over
small structures.
"""

from __future__ import annotations

import itertools

from tpkernel import (
    Comb,
    Graph,
    SplitMix64,
    closed_neighborhood,
    connected_components,
    critical_clique_partition,
    induced_subgraph,
    validate_comb,
)


def quad_is_obstruction(g: Graph, quad: tuple[int, int, int, int]) -> bool:
    """True iff the four vertices induce a P4 or a C4."""
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(4), 2)
        if g.has_edge(quad[i], quad[j])
    ]
    if len(edges) == 3:
        deg = [0, 0, 0, 0]
        for i, j in edges:
            deg[i] += 1
            deg[j] += 1
        return sorted(deg) == [1, 1, 2, 2]  # path, not star or triangle
    if len(edges) == 4:
        deg = [0, 0, 0, 0]
        for i, j in edges:
            deg[i] += 1
            deg[j] += 1
        return deg == [2, 2, 2, 2]  # cycle
    return False


def brute_is_tp(g: Graph) -> bool:
    """Recognition by scanning every 4-subset."""
    return not any(
        quad_is_obstruction(g, quad) for quad in itertools.combinations(g.vertices, 4)
    )


def brute_max_independent_set_size(g: Graph) -> int:
    best = 0
    vs = g.vertices
    for size in range(len(vs), 0, -1):
        if size <= best:
            break
        for sub in itertools.combinations(vs, size):
            if not any(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                return size
    return best


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques by subset scan; fine for n <= 10."""
    vs = g.vertices
    cliques = [
        frozenset(sub)
        for size in range(1, len(vs) + 1)
        for sub in itertools.combinations(vs, size)
        if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2))
    ]
    return [c for c in cliques if not any(c < d for d in cliques)]


def obstruction_witnesses_ok(g: Graph, kind: str, witnesses: tuple[int, ...]) -> bool:
    """The witnesses induce exactly a path (P4) or cycle (C4) in the given order."""
    if len(set(witnesses)) != 4:
        return False
    a, b, c, d = witnesses
    want = {(a, b), (b, c), (c, d)} | ({(d, a)} if kind == "C4" else set())
    norm_want = {tuple(sorted(e)) for e in want}
    return all(
        g.has_edge(i, j) == ((i, j) in norm_want)
        for i, j in itertools.combinations(sorted(witnesses), 2)
    )


def random_graph(rng: SplitMix64, n: int, percent: int) -> Graph:
    """Graph on n vertices with each pair present with the given percentage."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.randrange(100) < percent
    ]
    return Graph(range(n), edges)


def comb_extends(g: Graph, comb: Comb, cap: int = 14) -> bool:
    """Brute-force one-step extension search.

    Tries growing the comb by one critical clique on the shaft (with teeth
    re-derived from closed-neighborhood differences) and/or by unioning
    free components into the last tooth, validating every candidate.  Unit
    components are taken both with and without the all-seeing attachment
    set so extensions that keep it outside are not missed.
    """
    cliques = critical_clique_partition(g).classes
    span = comb.span
    shaft_options: list[list[frozenset[int]]] = [list(comb.shaft)]
    for clique in cliques:
        if clique & span:
            continue
        shaft_options.append(list(comb.shaft) + [clique])
    for option in shaft_options:
        closeds = {c: closed_neighborhood(g, c) for c in option}
        order = sorted(option, key=lambda c: (-len(closeds[c]), min(c)))
        if any(not closeds[order[i + 1]] < closeds[order[i]] for i in range(len(order) - 1)):
            continue
        diffs = [closeds[order[i]] - closeds[order[i + 1]] for i in range(len(order) - 1)]
        taken: frozenset[int] = frozenset().union(*(frozenset(c) for c in order))
        for d in diffs:
            taken |= d
        base_last = comb.teeth_union - frozenset().union(frozenset(), *diffs)
        free = g.vertex_set - taken - comb.teeth_union
        units: set[frozenset[int]] = set()
        if free:
            units.update(connected_components(induced_subgraph(g, free)))
            without_vp = free - comb.attach_all
            if without_vp != free and without_vp:
                units.update(connected_components(induced_subgraph(g, without_vp)))
        unit_list = sorted(units, key=min)
        assert len(unit_list) <= cap, "extension oracle fixture too large"
        for bits in range(1 << len(unit_list)):
            extra: frozenset[int] = frozenset()
            for i in range(len(unit_list)):
                if bits & (1 << i):
                    extra |= unit_list[i]
            last = base_last | extra
            if not last:
                continue
            cand = validate_comb(g, order, diffs + [last])
            if cand is None:
                continue
            if not (comb.shaft_union <= cand.shaft_union and comb.teeth_union <= cand.teeth_union):
                continue
            if comb.shaft_union != cand.shaft_union or comb.teeth_union != cand.teeth_union:
                return True
    return False
