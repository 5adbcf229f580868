import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, cycle_graph, path_graph, star_graph
from oracles import (
    brute_is_tp,
    brute_max_independent_set_size,
    maximal_cliques,
    obstruction_witnesses_ok,
    random_graph,
)
from tpkernel import (
    UCD,
    Graph,
    NotTriviallyPerfectError,
    SplitMix64,
    check_clique_decomposition,
    compute_ucd,
    critical_clique_partition,
    find_obstruction,
    induced_subgraph,
    is_trivially_perfect,
    realize_ucd,
    tp_max_independent_set,
)
from tpkernel.recognition import ucd_to_lines


def test_p4_is_not_tp():
    assert not is_trivially_perfect(path_graph(4))


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_cliques_are_tp(n):
    assert is_trivially_perfect(complete_graph(n))


def test_recognition_agrees_with_brute_force():
    rng = SplitMix64(42)
    for _ in range(300):
        g = random_graph(rng, 8, 35)
        assert is_trivially_perfect(g) == brute_is_tp(g)


def test_find_obstruction_c4():
    ob = find_obstruction(cycle_graph(4))
    assert ob.kind == "C4"
    assert ob.witnesses == (0, 1, 2, 3)


def test_find_obstruction_absent_on_k4():
    assert find_obstruction(complete_graph(4)) is None


def test_find_obstruction_witnesses_verified():
    # P4 with a pendant on an inner vertex
    g = Graph(range(5), [(0, 1), (1, 2), (2, 3), (1, 4)])
    ob = find_obstruction(g)
    assert ob is not None and ob.kind == "P4"
    assert obstruction_witnesses_ok(g, ob.kind, ob.witnesses)


def test_find_obstruction_random_certified():
    rng = SplitMix64(7)
    for _ in range(300):
        g = random_graph(rng, 9, 30)
        ob = find_obstruction(g)
        assert (ob is None) == brute_is_tp(g)
        if ob is not None:
            assert obstruction_witnesses_ok(g, ob.kind, ob.witnesses)


def test_compute_ucd_star():
    d = compute_ucd(star_graph(3))
    assert d.bags[0] == {0}
    assert d.parents == (None, 0, 0, 0)
    assert sorted(d.bags[1:]) == [frozenset({1}), frozenset({2}), frozenset({3})]


def test_compute_ucd_clique_single_bag():
    d = compute_ucd(complete_graph(5))
    assert d.bags == (frozenset(range(5)),)


def test_compute_ucd_forest_roots():
    g = Graph(range(4), [(0, 1), (2, 3)])
    d = compute_ucd(g)
    assert d.parents == (None, None)
    assert d.bags == (frozenset({0, 1}), frozenset({2, 3}))


def test_compute_ucd_rejects_with_certificate():
    with pytest.raises(NotTriviallyPerfectError) as err:
        compute_ucd(cycle_graph(4))
    assert err.value.obstruction.kind == "C4"


def test_realize_single_bag():
    assert realize_ucd(UCD((None,), (frozenset({0, 1}),))) == complete_graph(2)


def test_realize_star():
    d = UCD((None, 0, 0), (frozenset({0}), frozenset({1}), frozenset({2})))
    assert realize_ucd(d) == star_graph(2)


def test_malformed_ucd_rejected():
    with pytest.raises(ValueError):
        UCD((None, 2), (frozenset({0}), frozenset({1})))  # forward parent
    with pytest.raises(ValueError):
        UCD((None,), (frozenset(),))  # empty bag
    with pytest.raises(ValueError):
        UCD((None, 0), (frozenset({0}), frozenset({0})))  # overlapping bags


def test_ucd_roundtrip_random():
    from tpkernel import GenParams, random_tp_graph

    for seed in range(60):
        g = random_tp_graph(GenParams(n=50, seed=seed))
        d = compute_ucd(g)
        assert realize_ucd(d) == g
        for i in range(d.node_count):
            kids = d.children(i)
            assert not kids or len(kids) >= 2
        # bags are critical cliques
        classes = set(critical_clique_partition(g).classes)
        assert all(bag in classes for bag in d.bags)


def test_tp_mis_star():
    assert tp_max_independent_set(star_graph(3)) == {1, 2, 3}


def test_tp_mis_clique():
    assert len(tp_max_independent_set(complete_graph(6))) == 1


def test_tp_mis_matches_brute_force():
    from tpkernel import GenParams, random_tp_graph

    for seed in range(40):
        g = random_tp_graph(GenParams(n=10, seed=seed))
        ind = tp_max_independent_set(g)
        for u in ind:
            assert not (g.neighbors(u) & ind)
        assert len(ind) == brute_max_independent_set_size(g)
        assert len(ind) == len(compute_ucd(g).leaves)


def test_tp_mis_requires_tp():
    with pytest.raises(NotTriviallyPerfectError):
        tp_max_independent_set(cycle_graph(4))


def test_check_clique_decomposition_triangle():
    g = complete_graph(3)
    assert check_clique_decomposition(g, {0, 1, 2})


def test_check_clique_decomposition_p4_middle():
    g = path_graph(4)
    assert not check_clique_decomposition(g, {1, 2})
    assert not is_trivially_perfect(g)


def test_check_clique_decomposition_rejects_non_maximal():
    with pytest.raises(ValueError):
        check_clique_decomposition(complete_graph(3), {0, 1})
    with pytest.raises(ValueError):
        check_clique_decomposition(path_graph(3), {0, 2})


def test_check_clique_decomposition_equals_recognition():
    rng = SplitMix64(11)
    for _ in range(120):
        g = random_graph(rng, 7, 40)
        want = is_trivially_perfect(g)
        for s in maximal_cliques(g):
            assert check_clique_decomposition(g, s) == want


def test_ucd_serialization_preorder():
    lines = ucd_to_lines(compute_ucd(star_graph(2)), offset=1)
    assert lines == ["node 0 parent - bag 1", "node 1 parent 0 bag 2", "node 2 parent 0 bag 3"]


# --- properties -------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_recognition_matches_brute_on_random_n7(seed):
    g = random_graph(SplitMix64(seed), 7, 45)
    assert is_trivially_perfect(g) == brute_is_tp(g)
