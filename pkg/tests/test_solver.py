import random

import pytest

import oracle
from accudom import solver
from accudom.generators import all_graphs, random_graph
from accudom.graph import Graph, GraphError, complete, complete_bipartite, cycle, disjoint_union, path

METHODS = ["table", "search"]
STAR = complete_bipartite(1, 3)  # centre 0


def _small_corpus():
    graphs = [G for n in range(1, 5) for G in all_graphs(n)]
    rng = random.Random(11)
    graphs += [random_graph(rng.randint(5, 9), rng.uniform(0.1, 0.8), rng) for _ in range(120)]
    return graphs


CORPUS = _small_corpus()


@pytest.mark.parametrize("method", METHODS)
def test_values_match_definitions(method):
    for G in CORPUS:
        E = oracle.edge_set(G)
        assert solver.gamma(G, method=method).value == oracle.gamma(G.n, E)
        assert solver.gamma_a(G, method=method).value == oracle.gamma_a(G.n, E)


@pytest.mark.parametrize("method", METHODS)
def test_enumerations_match_definitions(method):
    for G in CORPUS[::3]:
        E = oracle.edge_set(G)
        assert [d.to_list() for d in solver.min_dominating_sets(G, method)] == sorted(
            oracle.min_dominating_sets(G.n, E), key=lambda s: sum(1 << v for v in s)
        )
        assert [d.to_list() for d in solver.min_accurate_dominating_sets(G, method)] == sorted(
            oracle.min_accurate_sets(G.n, E), key=lambda s: sum(1 << v for v in s)
        )


def test_witness_is_smallest_optimal_set_in_both_engines():
    for G in CORPUS[::4]:
        for fn, sets in ((solver.gamma, solver.min_dominating_sets), (solver.gamma_a, solver.min_accurate_dominating_sets)):
            first = next(iter(sets(G))).mask
            assert fn(G, method="table").witness.mask == first
            assert fn(G, method="search").witness.mask == first


def test_accuracy_test_matches_definition():
    rng = random.Random(2)
    for G in CORPUS[::5]:
        E = oracle.edge_set(G)
        for _ in range(6):
            D = [v for v in range(G.n) if rng.random() < 0.5]
            want = oracle.accurate(G.n, E, D)
            for method in METHODS:
                assert solver.is_accurate_dominating(G, D, method) == want


def test_restricted_gamma_matches_definition():
    rng = random.Random(4)
    for G in CORPUS[::5]:
        E = oracle.edge_set(G)
        allowed = [v for v in range(G.n) if rng.random() < 0.7]
        best = next((k for k in range(len(allowed) + 1) if oracle.dominating_sets_of_size(G.n, E, k, allowed)), None)
        for method in METHODS:
            res = solver.gamma(G, allowed, method)
            assert (res and res.value) == best or (res is None and best is None)
            if res is not None:
                assert set(res.witness) <= set(allowed)


def test_examples():
    assert solver.is_dominating(cycle(4), [0, 2])
    assert solver.gamma(path(4)).value == 2
    res = solver.gamma(path(3), [0, 2])
    assert res.value == 2 and res.witness.to_list() == [0, 2]
    assert solver.gamma(path(3), []) is None
    assert [d.to_list() for d in solver.min_dominating_sets(path(3))] == [[1]]
    assert [d.to_list() for d in solver.min_dominating_sets(path(4))] == [[0, 2], [1, 2], [0, 3], [1, 3]]
    assert solver.is_accurate_dominating(STAR, [0])
    assert not solver.is_accurate_dominating(path(4), [1, 2])
    assert not solver.is_accurate_dominating(path(4), [0])
    assert solver.gamma_a(path(4)).value == 3
    assert solver.gamma_a(complete(6)).value == 4
    assert solver.gamma_a(cycle(5)).value == 3
    assert [d.to_list() for d in solver.min_accurate_dominating_sets(STAR)] == [[0]]
    assert [d.to_list() for d in solver.min_accurate_dominating_sets(complete(2))] == [[0, 1]]
    assert [d.to_list() for d in solver.min_accurate_dominating_sets(complete(3))] == [[0, 1], [0, 2], [1, 2]]


def test_intersection_check_examples():
    k2 = solver.check_hitting_gamma_set(complete(2))
    assert not k2.equality and k2.hitting_set is None and k2.consistent
    star = solver.check_hitting_gamma_set(STAR)
    assert star.equality and star.hitting_set.to_list() == [0]
    assert not solver.check_hitting_gamma_set(path(4)).equality


def test_whole_vertex_set_is_accurate():
    # only V itself is accurate in K_2; in 2K_2 any 3-set is, its complement being too small
    assert solver.gamma_a(complete(2)).value == 2
    G = disjoint_union(complete(2), complete(2))
    assert solver.gamma_a(G).value == 3 == oracle.gamma_a(4, oracle.edge_set(G))


def test_empty_graph():
    G = Graph(0, ())
    assert solver.gamma(G).value == 0 and solver.gamma_a(G).value == 0


def test_cap(monkeypatch):
    with pytest.raises(solver.CapExceededError):
        solver.gamma(path(65))
    monkeypatch.setenv(solver.CAP_ENV, "8")
    assert solver.solver_cap() == 8
    with pytest.raises(solver.CapExceededError):
        solver.gamma_a(path(9))
    monkeypatch.setenv(solver.CAP_ENV, "500")
    assert solver.solver_cap() == 64
    monkeypatch.setenv(solver.CAP_ENV, "junk")
    assert solver.solver_cap() == 64


def test_table_refuses_large_graphs():
    with pytest.raises(GraphError):
        solver.gamma(path(solver.TABLE_LIMIT + 1), method="table")
    with pytest.raises(ValueError):
        solver.gamma(path(3), method="magic")


def test_large_instances_agree_between_engines():
    rng = random.Random(9)
    for _ in range(5):
        G = random_graph(18, 0.25, rng)
        assert solver.gamma(G, method="table") == solver.gamma(G, method="search")
        assert solver.gamma_a(G, method="table") == solver.gamma_a(G, method="search")


def test_result_record():
    rec = solver.result_record(path(4))
    assert rec == {"n": 4, "gamma": 2, "gamma_witness": [0, 2], "gamma_a": 3, "gamma_a_witness": [0, 1, 2]}
