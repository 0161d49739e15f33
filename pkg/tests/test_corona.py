import json
import random
from pathlib import Path

import pytest

from accudom import solver
from accudom.corona import (
    GraphFamily,
    NeighborhoodPartition,
    corona_k1,
    f_corona,
    load_construction_spec,
    natural_iso_check,
    p_corona,
    pcorona_to_corona_k1_map,
    pcorona_to_s2_map,
    s2_subdivision,
)
from accudom.generators import random_graph, random_partition
from accudom.graph import Graph, GraphError, complete, cycle, is_cycle, path
from accudom.io import write_edge_list

DATA = Path(__file__).parent / "data"

FIG1_PCORONA_EDGES = "10 10\n0 4\n1 5\n1 6\n2 7\n2 8\n3 9\n4 5\n4 7\n6 7\n8 9"
FIG1_PCORONA_LABELS = [
    "(v,1)", "(u,1)", "(w,1)", "(z,1)",
    "(v,{u,w})", "(u,{v})", "(u,{w})", "(w,{v,u})", "(w,{z})", "(z,{w})",
]
FIG1_FCORONA_EDGES = [
    (0, 1), (0, 2), (0, 4), (1, 2), (1, 5), (1, 6), (1, 7),
    (2, 3), (2, 8), (3, 9), (3, 10), (5, 6), (9, 10),
]


def fig1(name):
    return load_construction_spec((DATA / name).read_text())


def test_fig1_partition_corona_bit_exact():
    H = p_corona(fig1("fig1_pcorona.json").partition)
    assert write_edge_list(H) == FIG1_PCORONA_EDGES
    assert [H.label_text(v) for v in range(H.n)] == FIG1_PCORONA_LABELS


def test_fig1_family_corona():
    spec = fig1("fig1_fcorona.json")
    H = f_corona(spec.family)
    assert (H.n, H.m) == (11, 13)
    assert H.edges() == FIG1_FCORONA_EDGES
    assert H.label_text(5) == "(u,x0)" and H.label_text(10) == "(z,x1)"
    assert solver.gamma(H).value == 4 and solver.gamma_a(H).value == 4


def test_fig1_corona_k1():
    H = corona_k1(fig1("fig1_pcorona.json").base)
    assert (H.n, H.m) == (8, 8)
    assert H.label_text(0) == "(v,0)" and H.label_text(4) == "(v,1)"


def test_small_coronas():
    assert corona_k1(Graph(1, (0,))).adj == path(2).adj
    H = corona_k1(complete(3))
    assert (H.n, H.m) == (6, 6)
    K = f_corona(GraphFamily.uniform(Graph(1, (0,)), path(2)))
    assert K.edges() == complete(3).edges()
    with pytest.raises(GraphError):
        corona_k1(Graph(0, ()))
    with pytest.raises(GraphError):
        GraphFamily(path(2), (path(1),))


def test_s2_examples():
    P = s2_subdivision(path(2))
    assert P.n == 4 and sorted(P.degree(v) for v in range(4)) == [1, 1, 2, 2]
    assert P.label_text(2) == "(0,01)" and P.label_text(3) == "(1,01)"
    C = s2_subdivision(cycle(4))
    assert C.n == 12 and is_cycle(C)


def test_partition_validation():
    G = path(3)
    with pytest.raises(GraphError):
        NeighborhoodPartition(G, [[[1]], [[0]], [[1]]])  # misses 2 in N(1)
    with pytest.raises(GraphError):
        NeighborhoodPartition(G, [[[1]], [[0, 2], [2]], [[1]]])  # overlap
    with pytest.raises(GraphError):
        NeighborhoodPartition(G, [[[2]], [[0, 2]], [[1]]])  # not a neighbour
    with pytest.raises(GraphError):
        NeighborhoodPartition(G, [[[1]], [[0, 2], []], [[1]]])
    assert NeighborhoodPartition(G, [[[1]], [[2], [0]], [[1]]]).blocks[1] == ((0,), (2,))


def _random_cases(count, seed, no_isolated=False):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        G = random_graph(rng.randint(1, 7), rng.uniform(0.2, 0.9), rng)
        if no_isolated and any(nb == 0 for nb in G.adj):
            continue
        out.append((G, rng))
    return out


def test_count_formulas():
    for G, rng in _random_cases(60, 1):
        part = NeighborhoodPartition(G, [random_partition(G.neighbors(v), rng) for v in range(G.n)])
        H = p_corona(part)
        blocks = sum(part.sizes())
        assert (H.n, H.m) == (G.n + blocks, blocks + G.m)
        members = tuple(random_graph(rng.randint(1, 3), 0.5, rng) for _ in range(G.n))
        F = f_corona(GraphFamily(G, members))
        assert F.n == G.n + sum(M.n for M in members)
        assert F.m == G.m + sum(M.m + M.n for M in members)
        S = s2_subdivision(G)
        assert (S.n, S.m) == (G.n + 2 * G.m, 3 * G.m)


def test_natural_isomorphisms():
    for G, _ in _random_cases(40, 2, no_isolated=True):
        whole = NeighborhoodPartition.whole(G)
        assert natural_iso_check(p_corona(whole), corona_k1(G), pcorona_to_corona_k1_map(whole))
        single = NeighborhoodPartition.singletons(G)
        assert natural_iso_check(p_corona(single), s2_subdivision(G), pcorona_to_s2_map(single))


def test_whole_map_needs_one_block_per_vertex():
    G = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(GraphError):
        pcorona_to_corona_k1_map(NeighborhoodPartition.whole(G))
    with pytest.raises(GraphError):
        pcorona_to_s2_map(NeighborhoodPartition(path(3), [[[1]], [[0, 2]], [[1]]]))


def test_iso_check_rejects_wrong_maps():
    G = path(3)
    assert not natural_iso_check(G, G, [1, 0, 2])
    with pytest.raises(GraphError):
        natural_iso_check(G, G, [0, 0, 1])


def test_spec_loader_variants():
    doc = {"base": "3 2\n0 1\n1 2", "partition": "singletons"}
    assert load_construction_spec(doc).partition == NeighborhoodPartition.singletons(path(3))
    doc["partition"] = "whole"
    assert load_construction_spec(json.dumps(doc)).partition == NeighborhoodPartition.whole(path(3))
    doc["partition"] = {"0": [[1]], "1": [[0], [2]], "2": [[1]]}
    assert load_construction_spec(doc).partition.sizes() == [1, 2, 1]


@pytest.mark.parametrize(
    "doc",
    [
        {},
        {"base": "2 1\n0 1", "partition": "halves"},
        {"base": "2 1\n0 1", "partition": {"0": [[1]]}},
        {"base": "2 1\n0 1", "partition": {"0": [[1]], "7": [[0]]}},
        {"base": "2 1\n0 1", "labels": ["a", "b"], "partition": {"a": [["c"]], "b": [["a"]]}},
        {"base": "2 1\n0 1", "family": {"0": "1 0"}},
    ],
)
def test_spec_loader_errors(doc):
    with pytest.raises(GraphError):
        load_construction_spec(doc)
