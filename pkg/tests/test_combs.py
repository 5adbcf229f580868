import pytest

from conftest import build_comb_fixture, complete_graph, path_graph, star_graph
from oracles import comb_extends, random_graph
from tpkernel import (
    PrecedenceRelation,
    SplitMix64,
    build_precedence,
    closed_neighborhood,
    critical_clique_partition,
    enumerate_critical_combs,
    induced_subgraph,
    is_trivially_perfect,
    open_neighborhood,
    prune_precedence,
    validate_comb,
)


def test_validate_accepts_planted(comb3p):
    g, shaft, teeth = comb3p
    comb = validate_comb(g, shaft, teeth)
    assert comb is not None
    assert comb.attach_all == {7}   # the all-seeing vertex
    assert comb.attach_shaft == {6}  # the shaft-only vertex
    assert is_trivially_perfect(induced_subgraph(g, comb.span))


def test_validate_rejects_reversed_shaft(comb3p):
    g, shaft, teeth = comb3p
    assert validate_comb(g, list(reversed(shaft)), list(reversed(teeth))) is None


def test_validate_rejects_p4_split():
    g = path_graph(4)
    assert validate_comb(g, [frozenset({1})], [frozenset({0})]) is None


def test_validate_rejects_shape_mismatch(comb3p):
    g, shaft, teeth = comb3p
    assert validate_comb(g, shaft, teeth[:2]) is None
    assert validate_comb(g, [], []) is None


def test_precedence_on_planted_comb(comb3p):
    g, _, _ = comb3p
    cliques = critical_clique_partition(g).classes
    idx = {min(c): i for i, c in enumerate(cliques)}
    rel = build_precedence(g)
    assert (idx[0], idx[1]) in rel.pairs  # first shaft clique precedes the second
    assert (idx[1], idx[2]) in rel.pairs


def test_precedence_empty_on_clique():
    assert build_precedence(complete_graph(5)).pairs == frozenset()


def test_precedence_empty_on_star():
    # the candidate tooth of (center, leaf) has the same open neighborhood
    # as the leaf itself, so the strict-subset test fails
    assert build_precedence(star_graph(3)).pairs == frozenset()


def test_prune_drops_all_on_two_predecessors():
    rel = PrecedenceRelation(frozenset({(0, 2), (1, 2)}))
    assert prune_precedence(rel).pairs == frozenset()


def test_prune_keeps_chains():
    rel = PrecedenceRelation(frozenset({(0, 1), (1, 2)}))
    assert prune_precedence(rel) == rel


def test_prune_empty():
    assert prune_precedence(PrecedenceRelation(frozenset())).pairs == frozenset()


def test_enumerate_recovers_planted(comb3p):
    g, shaft, teeth = comb3p
    combs = enumerate_critical_combs(g)
    assert any(c.shaft == tuple(shaft) and c.teeth == tuple(teeth) for c in combs)


def test_enumerate_empty_on_clique():
    assert enumerate_critical_combs(complete_graph(6)) == []


def test_enumerate_longer_fixture(comb5p):
    g, shaft, teeth = comb5p
    combs = enumerate_critical_combs(g)
    assert any(c.shaft == tuple(shaft) and c.teeth == tuple(teeth) for c in combs)


def test_enumerate_mixed_tooth_sizes():
    g, shaft, teeth = build_comb_fixture(4, [3, 1, 2, 1])
    combs = enumerate_critical_combs(g)
    assert any(c.shaft == tuple(shaft) and c.teeth == tuple(teeth) for c in combs)


def test_emitted_combs_validate_and_nest(comb5p):
    g, _, _ = comb5p
    for comb in enumerate_critical_combs(g):
        assert validate_comb(g, comb.shaft, comb.teeth) is not None
        closeds = [closed_neighborhood(g, c) for c in comb.shaft]
        for big, small in zip(closeds, closeds[1:]):
            assert small < big
        hoods = [open_neighborhood(g, t) for t in comb.teeth]
        for small, big in zip(hoods, hoods[1:]):
            assert small < big


def test_emitted_combs_not_extendable(comb3p, comb5p):
    for g, _, _ in (comb3p, comb5p, build_comb_fixture(3, [2, 1, 3])):
        for comb in enumerate_critical_combs(g):
            assert not comb_extends(g, comb)


def test_enumerate_on_random_graphs_validates_and_is_maximal():
    rng = SplitMix64(5)
    for _ in range(120):
        g = random_graph(rng, 9, 35)
        combs = enumerate_critical_combs(g)
        for comb in combs:
            assert validate_comb(g, comb.shaft, comb.teeth) is not None
            assert not comb_extends(g, comb)


def test_enumerate_deterministic(comb5p):
    g, _, _ = comb5p
    assert enumerate_critical_combs(g) == enumerate_critical_combs(g)
