import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tpkernel import Graph


def build_comb_fixture(l, tooth_sizes, with_c4=True):
    """Hand-rolled comb fixture, independent of the library generator.

    Identifiers: shaft 0..l-1, teeth blocks next (independent sets), then
    f (sees shaft only), p (sees shaft and teeth), and optionally a C4
    p-q-s-t.  Shaft i is adjacent to tooth j iff j >= i.  Returns the
    graph together with the planted shaft and teeth partitions.
    """
    shaft = list(range(l))
    teeth = []
    nxt = l
    for size in tooth_sizes:
        teeth.append(list(range(nxt, nxt + size)))
        nxt += size
    f = nxt
    p = nxt + 1
    nxt += 2
    edges = [(i, j) for i in shaft for j in shaft if i < j]
    for i in shaft:
        for j, tooth in enumerate(teeth):
            if j >= i:
                edges += [(i, v) for v in tooth]
    edges += [(i, f) for i in shaft]
    edges += [(i, p) for i in shaft]
    edges += [(p, v) for tooth in teeth for v in tooth]
    if with_c4:
        q, s, t = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [(p, q), (q, s), (s, t), (p, t)]
    g = Graph(range(nxt), edges)
    return g, [frozenset([c]) for c in shaft], [frozenset(t) for t in teeth]


@pytest.fixture
def comb3p():
    return build_comb_fixture(3, [1, 1, 1])


@pytest.fixture
def comb5p():
    return build_comb_fixture(5, [1, 1, 1, 1, 1])


def path_graph(n):
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves):
    return Graph(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])
