"""Seeded generation: random trivially perfect graphs, planted
perturbations, and planted comb fixtures.

All randomness flows through SplitMix64, a named 64-bit generator with a
fixed state update, so corpora are byte-reproducible across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import EditSet, Edge, Graph, apply_edits, norm_edge
from .recognition import UCD, is_trivially_perfect, realize_ucd

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: state advances by 0x9E3779B97F4A7C15, output is the
    standard xor-shift-multiply finalizer.  Draws below use plain modulo;
    the bias is irrelevant at these ranges and the rule is fixed so equal
    seeds give equal corpora everywhere."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.randrange(hi - lo + 1)

    def choice(self, seq: Sequence):
        return seq[self.randrange(len(seq))]

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.randrange(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


@dataclass(frozen=True)
class GenParams:
    """Shape bounds for a random universal clique decomposition."""

    n: int
    min_fanout: int = 2
    max_fanout: int = 4
    min_bag: int = 1
    max_bag: int = 3
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if self.min_fanout < 2:
            raise ValueError("internal decomposition nodes need fanout at least 2")
        if self.max_fanout < self.min_fanout:
            raise ValueError("max_fanout below min_fanout")
        if self.min_bag < 1 or self.max_bag < self.min_bag:
            raise ValueError("bag size bounds must satisfy 1 <= min <= max")


def _draw_bag_size(rng: SplitMix64, lo: int, hi: int) -> int:
    # bounded geometric: grow past the minimum with probability one half
    size = lo
    while size < hi and rng.randrange(2) == 1:
        size += 1
    return size


def _composition(rng: SplitMix64, total: int, parts: int) -> list[int]:
    """Random composition of `total` into `parts` positive integers."""
    cuts: set[int] = set()
    while len(cuts) < parts - 1:
        cuts.add(1 + rng.randrange(total - 1))
    edges = [0] + sorted(cuts) + [total]
    return [b - a for a, b in zip(edges, edges[1:])]


def random_tp_graph(p: GenParams) -> Graph:
    """Random trivially perfect graph on exactly n vertices.

    Draws a rooted forest by recursive budget splitting with fanout at
    least two, sizes bags by a bounded geometric draw, and realizes the
    decomposition.  Deterministic per (params, seed).
    """
    rng = SplitMix64(p.seed)
    roots = min(p.n, rng.randint(1, p.max_fanout))
    budgets = _composition(rng, p.n, roots) if roots > 1 else [p.n]
    parents: list[Optional[int]] = []
    bags: list[frozenset[int]] = []
    next_vertex = 0
    queue: list[tuple[int, Optional[int]]] = [(b, None) for b in budgets]
    head = 0
    while head < len(queue):
        budget, parent = queue[head]
        head += 1
        size = min(budget, _draw_bag_size(rng, p.min_bag, p.max_bag))
        rest = budget - size
        if rest == 1:
            size += 1
            rest = 0
        node = len(bags)
        bag = size
        if rest > 0:
            # rest >= 2 here, so the clamped fanout stays >= 2
            fanout = min(rng.randint(p.min_fanout, p.max_fanout), rest)
            for share in _composition(rng, rest, fanout):
                queue.append((share, node))
        parents.append(parent)
        bags.append(frozenset(range(next_vertex, next_vertex + bag)))
        next_vertex += bag
    return realize_ucd(UCD(tuple(parents), tuple(bags)))


def _sample_pairs(rng: SplitMix64, vertices: tuple[int, ...], count: int, want_edge: Optional[bool], g: Graph) -> set[Edge]:
    """Draw `count` distinct pairs; want_edge filters by current adjacency
    (None accepts any pair)."""
    n = len(vertices)
    total = n * (n - 1) // 2
    chosen: set[Edge] = set()
    if count == 0:
        return chosen
    if want_edge is True:
        candidates = sorted(g.edge_set)
        if count > len(candidates):
            raise ValueError("not enough qualifying pairs to perturb")
        while len(chosen) < count:
            chosen.add(candidates[rng.randrange(len(candidates))])
        return chosen
    available = total if want_edge is None else total - g.m
    if count > available:
        raise ValueError("not enough qualifying pairs to perturb")
    if want_edge is False and (available <= 4 * count or total <= 200_000):
        # non-edges are scarce (or the graph is small): enumerate them
        candidates = [
            norm_edge(u, v)
            for i, u in enumerate(vertices)
            for v in vertices[i + 1:]
            if not g.has_edge(u, v)
        ]
        while len(chosen) < count:
            chosen.add(candidates[rng.randrange(len(candidates))])
        return chosen
    while len(chosen) < count:
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        pair = norm_edge(vertices[i], vertices[j])
        if want_edge is False and g.has_edge(*pair):
            continue
        chosen.add(pair)
    return chosen


def perturb(g: Graph, r: int, variant: str, seed: int) -> tuple[Graph, EditSet]:
    """Apply r random variant-inverse toggles to a trivially perfect graph.

    Editing perturbs arbitrary pairs; a completion instance arises by
    deleting r edges (the repair adds them back); a deletion instance by
    adding r non-edges.  Returns the perturbed graph and the planted
    repair, so (perturbed, k=r) is a yes-instance of the variant.
    """
    if r < 0:
        raise ValueError("perturbation count must be non-negative")
    if variant not in ("editing", "completion", "deletion"):
        raise ValueError(f"unknown variant {variant!r}")
    if not is_trivially_perfect(g):
        raise ValueError("perturb expects a trivially perfect graph")
    rng = SplitMix64(seed)
    vertices = g.vertices
    if variant == "editing":
        pairs = _sample_pairs(rng, vertices, r, None, g)
        edge_set = g.edge_set
        toggles = EditSet(
            adds=frozenset(p for p in pairs if p not in edge_set),
            deletes=frozenset(p for p in pairs if p in edge_set),
        )
        perturbed = apply_edits(g, toggles)
        repair = EditSet(adds=toggles.deletes, deletes=toggles.adds)
        return perturbed, repair
    if variant == "completion":
        if g.m < r:
            raise ValueError("not enough edges to delete for a completion instance")
        pairs = _sample_pairs(rng, vertices, r, True, g)
        perturbed = apply_edits(g, EditSet(deletes=frozenset(pairs)))
        return perturbed, EditSet(adds=frozenset(pairs))
    nonedges = len(vertices) * (len(vertices) - 1) // 2 - g.m
    if nonedges < r:
        raise ValueError("not enough non-edges to add for a deletion instance")
    pairs = _sample_pairs(rng, vertices, r, False, g)
    perturbed = apply_edits(g, EditSet(adds=frozenset(pairs)))
    return perturbed, EditSet(deletes=frozenset(pairs))


def plant_comb(l: int, tooth_sizes: Sequence[int], k_context: int = 1, seed: int = 0) -> Graph:
    """Comb fixture with a known critical-comb decomposition.

    Layout (identifiers in order): shaft singletons 0..l-1, then the teeth
    as independent modules of the given sizes, one shaft-only attachment
    vertex, one all-seeing attachment vertex carrying an external C4, and,
    for non-zero seeds, a small decoy blob hanging off the C4.  Shaft
    vertex i is adjacent to tooth j exactly when j >= i.
    """
    if l < 2:
        raise ValueError("a planted comb needs length at least 2")
    if len(tooth_sizes) != l:
        raise ValueError("need one tooth size per shaft position")
    if any(s < 1 for s in tooth_sizes):
        raise ValueError("tooth sizes must be positive")
    if k_context < 0:
        raise ValueError("context budget must be non-negative")
    shaft = list(range(l))
    teeth: list[list[int]] = []
    nxt = l
    for size in tooth_sizes:
        teeth.append(list(range(nxt, nxt + size)))
        nxt += size
    f = nxt
    p = nxt + 1
    q, s, t = nxt + 2, nxt + 3, nxt + 4
    nxt += 5
    edges: list[Edge] = []
    for i in shaft:
        for j in shaft:
            if i < j:
                edges.append((i, j))
    for i in shaft:
        for j, tooth in enumerate(teeth):
            if j >= i:
                edges.extend(norm_edge(i, v) for v in tooth)
    edges.extend(norm_edge(f, i) for i in shaft)
    for i in shaft:
        edges.append(norm_edge(p, i))
    for tooth in teeth:
        edges.extend(norm_edge(p, v) for v in tooth)
    edges.extend([norm_edge(p, q), norm_edge(q, s), norm_edge(s, t), norm_edge(t, p)])

    rng = SplitMix64(seed)
    # seed 0 is the bare fixture; other seeds hang a decoy blob off the C4
    # for corpus diversity, larger context budgets allowing larger blobs
    decoys = rng.randrange(min(7, 3 + k_context)) if seed != 0 else 0
    if decoys > 0:
        blob = random_tp_graph(GenParams(n=decoys, seed=rng.next_u64()))
        offset = nxt
        for u, v in blob.edges():
            edges.append((u + offset, v + offset))
        for v in blob.vertices:
            edges.append(norm_edge(s, v + offset))
        nxt += decoys
    return Graph(range(nxt), edges)
