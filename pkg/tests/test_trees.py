import random

import pytest

import oracle
from accudom import solver
from accudom.corona import corona_k1
from accudom.generators import connected_graphs, enumerate_trees, random_connected_graph, random_tree
from accudom.graph import Graph, GraphError, components_after_removal, complete_bipartite, cycle, leaf_and_support_sets, path, private_neighborhood
from accudom.trees import (
    NotATreeError,
    find_witness_partition,
    is_corona_graph,
    support_respecting_gamma_set,
    tree_gamma_a_equals_gamma,
    tree_min_dominating_set,
)


def test_corona_recognition_examples():
    assert is_corona_graph(path(2))
    assert is_corona_graph(path(4))
    assert not is_corona_graph(path(6))
    assert not is_corona_graph(complete_bipartite(1, 3))
    assert is_corona_graph(corona_k1(cycle(5)))
    with pytest.raises(GraphError):
        is_corona_graph(Graph(2, (0, 0)))


def test_corona_recognition_matches_search():
    corpus = [T for n in range(2, 8) for T in enumerate_trees(n)]
    corpus += [G for n in range(2, 6) for G in connected_graphs(n)]
    rng = random.Random(5)
    corpus += [corona_k1(random_connected_graph(rng.randint(1, 6), rng)) for _ in range(40)]
    for G in corpus:
        assert is_corona_graph(G) == oracle.is_corona(G.n, oracle.edge_set(G))


def test_tree_recogniser_examples():
    assert tree_gamma_a_equals_gamma(path(7))
    assert not tree_gamma_a_equals_gamma(path(4))
    assert not tree_gamma_a_equals_gamma(path(2))
    with pytest.raises(NotATreeError):
        tree_gamma_a_equals_gamma(cycle(4))
    with pytest.raises(NotATreeError):
        tree_gamma_a_equals_gamma(path(1))


def test_greedy_tree_domination():
    rng = random.Random(8)
    for _ in range(200):
        T = random_tree(rng.randint(1, 12), rng)
        D = tree_min_dominating_set(T)
        assert solver.is_dominating(T, T.vertex_set([v for v in range(T.n) if D >> v & 1]))
        assert D.bit_count() == solver.gamma(T).value


def _support_respecting(T, D):
    _, S = leaf_and_support_sets(T)
    if not set(S) <= set(D):
        return False
    return all(not T.adj[v] & D.mask or len(private_neighborhood(T, v, D)) >= 2 for v in D if v not in S)


def test_support_respecting_set_examples():
    assert support_respecting_gamma_set(path(6)).to_list() == [1, 4]
    D = support_respecting_gamma_set(path(7))
    assert len(D) == 3 and {1, 5} <= set(D) and _support_respecting(path(7), D)
    with pytest.raises(NotATreeError):
        support_respecting_gamma_set(path(2))


def test_support_respecting_set_all_small_trees():
    for n in range(3, 8):
        for T in enumerate_trees(n):
            D = support_respecting_gamma_set(T)
            assert len(D) == oracle.gamma(T.n, oracle.edge_set(T))
            assert solver.is_dominating(T, D) and _support_respecting(T, D)


def test_witness_examples():
    w = find_witness_partition(path(7))
    assert w.dominating_set.to_list() == [1, 3, 5] and w.components_after_removal == 4
    assert w.to_json(path(7)) == {"tree": "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6", "D": [1, 3, 5], "kappa": 4, "mode": "brute_force"}
    assert find_witness_partition(path(4)) is None
    assert find_witness_partition(path(4), "constructive") is None
    with pytest.raises(ValueError):
        find_witness_partition(path(5), "guess")


def _check_witness(T, w):
    E = oracle.edge_set(T)
    D = w.dominating_set.to_list()
    assert len(D) == oracle.gamma(T.n, E) and oracle.dominates(T.n, E, D)
    assert w.components_after_removal == oracle.components(T.n, E, D) > len(D)


@pytest.mark.parametrize("mode", ["brute_force", "constructive"])
def test_witnesses_against_definitions(mode):
    corpus = [T for n in range(2, 8) for T in enumerate_trees(n)][::7]
    rng = random.Random(6)
    corpus += [random_tree(rng.randint(8, 12), rng) for _ in range(40)]
    for T in corpus:
        w = find_witness_partition(T, mode)
        if oracle.is_corona(T.n, oracle.edge_set(T)):
            assert w is None
        else:
            assert w is not None and w.mode == mode
            _check_witness(T, w)


def test_constructive_mode_on_larger_trees():
    rng = random.Random(12)
    for _ in range(100):
        T = random_tree(rng.randint(12, 40), rng)
        w = find_witness_partition(T, "constructive")
        if w is not None:
            D = w.dominating_set
            assert len(D) == tree_min_dominating_set(T).bit_count()
            assert components_after_removal(T, D.mask) > len(D)


def test_corona_tree_complements_are_gamma_sets():
    # in a corona graph the complement of every gamma-set is again one
    for T in enumerate_trees(6):
        if not is_corona_graph(T):
            continue
        sets = {d.mask for d in solver.min_dominating_sets(T)}
        assert all(T.full & ~d in sets for d in sets)
