"""Theorem-checking harness: closed forms and characterisations vs exact search.

Each theorem id maps to a checker that generates a deterministic corpus
(exhaustive where small, seeded sampling otherwise), evaluates the claim on
every instance with the exact solver, and records violations verbatim.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Callable, Optional

from . import solver
from .corona import (
    GraphFamily,
    NeighborhoodPartition,
    corona_k1,
    f_corona,
    natural_iso_check,
    p_corona,
    pcorona_to_s2_map,
    s2_subdivision,
)
from .formulas import f_corona_predict, gamma_a_closed, gamma_closed, p_corona_predict, s2_predict
from .generators import (
    TREE_CAP,
    connected_graphs,
    enumerate_trees,
    random_connected_graph,
    random_graph,
    random_partition,
    random_tree,
)
from .graph import (
    Graph,
    complete,
    complete_bipartite,
    components,
    components_after_removal,
    cycle,
    disjoint_union,
    induced_subgraph,
    is_connected,
    is_cycle,
    iter_bits,
    leaf_and_support_sets,
    path,
    private_neighborhood,
    VertexSet,
)
from .io import write_edge_list
from .trees import find_witness_partition, is_corona_graph, support_respecting_gamma_set, tree_gamma_a_equals_gamma

MEMBER_MAX = 3


class UnknownTheoremError(KeyError):
    pass


@dataclass(frozen=True)
class RunConfig:
    """What to check and how big a corpus to build.

    ``max_n`` bounds the order of generated base graphs, ``exhaustive_n`` the
    order up to which a family is enumerated exhaustively, ``samples`` the
    number of seeded random instances. ``None`` picks the theorem default.
    """

    theorem_id: str
    max_n: Optional[int] = None
    exhaustive_n: Optional[int] = None
    samples: Optional[int] = None
    seed: int = 0
    output: Optional[str] = None

    def resolved(self) -> "RunConfig":
        try:
            defaults = THEOREMS[self.theorem_id].defaults
        except KeyError:
            raise UnknownTheoremError(self.theorem_id) from None
        cfg = replace(
            self,
            max_n=defaults["max_n"] if self.max_n is None else self.max_n,
            exhaustive_n=defaults.get("exhaustive_n", 0) if self.exhaustive_n is None else self.exhaustive_n,
            samples=defaults.get("samples", 0) if self.samples is None else self.samples,
        )
        cap = solver.solver_cap()
        if cfg.max_n < 0 or cfg.exhaustive_n < 0 or cfg.samples < 0:
            raise ValueError("size limits must be nonnegative")
        if cfg.max_n > cap or cfg.exhaustive_n > cap:
            raise solver.CapExceededError(f"size limit exceeds solver cap {cap}")
        return cfg


@dataclass
class VerificationReport:
    theorem_id: str
    instances_tested: int
    failures: list[dict]
    elapsed_ms: int
    seed: int
    observations: list[tuple[int, int, int]] = field(default_factory=list, repr=False, compare=False)

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_json(self, timing: bool = True) -> dict:
        out: dict[str, Any] = {
            "theorem_id": self.theorem_id,
            "instances_tested": self.instances_tested,
            "failures": self.failures,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        out["seed"] = self.seed
        return out

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2)


class _Run:
    def __init__(self, cfg: RunConfig) -> None:
        self.cfg = cfg
        self.rng = random.Random(cfg.seed)
        self.count = 0
        self.failures: list[dict] = []
        self.observations: list[tuple[int, int, int]] = []

    def check(self, instance: str, expected: Any, actual: Any) -> None:
        self.count += 1
        if expected != actual:
            self.failures.append({"instance": instance, "expected": expected, "actual": actual})

    def solve(self, G: Graph) -> tuple[int, int]:
        g = solver.gamma(G).value
        a = solver.gamma_a(G).value
        self.observations.append((G.n, g, a))
        return g, a


def _el(G: Graph) -> str:
    return write_edge_list(G)


def _partition_doc(part: NeighborhoodPartition) -> str:
    doc = {
        "base": _el(part.base),
        "partition": {str(v): [list(A) for A in blocks] for v, blocks in enumerate(part.blocks)},
    }
    return json.dumps(doc, sort_keys=True)


def _family_doc(fam: GraphFamily) -> str:
    doc = {"base": _el(fam.base), "family": {str(v): _el(F) for v, F in enumerate(fam.members)}}
    return json.dumps(doc, sort_keys=True)


# ---------------------------------------------------------------------------
# closed forms for the standard families
# ---------------------------------------------------------------------------


def _family_check(run: _Run, G: Graph, g_expected: int, a_expected: int) -> None:
    g, a = run.solve(G)
    run.check(_el(G), {"gamma": g_expected, "gamma_a": a_expected}, {"gamma": g, "gamma_a": a})


def _obs_complete(run: _Run) -> None:
    N = run.cfg.max_n
    for n in range(1, N + 1):
        _family_check(run, complete(n), gamma_closed("complete", n), gamma_a_closed("complete", n))
    for n in range(1, N // 2 + 1):
        _family_check(
            run,
            complete_bipartite(n, n),
            gamma_closed("complete_bipartite", n, n),
            gamma_a_closed("complete_bipartite_equal", n),
        )


def _obs_bipartite(run: _Run) -> None:
    N = run.cfg.max_n
    for n in range(2, N + 1):
        for m in range(1, n):
            _family_check(
                run,
                complete_bipartite(m, n),
                gamma_closed("complete_bipartite", m, n),
                gamma_a_closed("complete_bipartite_unequal", m, n),
            )


def _obs_cycle(run: _Run) -> None:
    for n in range(3, run.cfg.max_n + 1):
        _family_check(run, cycle(n), gamma_closed("cycle", n), gamma_a_closed("cycle", n))


def _obs_path(run: _Run) -> None:
    for n in range(1, run.cfg.max_n + 1):
        _family_check(run, path(n), gamma_closed("path", n), gamma_a_closed("path", n))


def _paths_equality(run: _Run) -> None:
    for n in range(1, run.cfg.max_n + 1):
        g, a = run.solve(path(n))
        third = -(-n // 3)
        expected = {"equal": n not in (2, 4), "gamma_a": third + (n in (2, 4))}
        run.check(_el(path(n)), expected, {"equal": a == g == third, "gamma_a": a})


# ---------------------------------------------------------------------------
# general graphs
# ---------------------------------------------------------------------------


def _random_graphs(run: _Run, max_n: int) -> list[Graph]:
    out = []
    for _ in range(run.cfg.samples):
        n = run.rng.randint(1, max_n)
        out.append(random_graph(n, run.rng.uniform(0.1, 0.9), run.rng))
    return out


def _intersection(run: _Run) -> None:
    corpus = [G for n in range(1, run.cfg.exhaustive_n + 1) for G in connected_graphs(n)]
    corpus += _random_graphs(run, run.cfg.max_n)
    for G in corpus:
        res = solver.check_hitting_gamma_set(G)
        run.observations.append((G.n, solver.gamma(G).value, solver.gamma_a(G).value))
        hit = res.hitting_set
        actual = {
            "equality": res.equality,
            "hitting_set": res.hitting_set is not None,
            "hitting_set_accurate": hit is None or solver.is_accurate_dominating(G, hit),
        }
        expected = {"equality": res.equality, "hitting_set": res.equality, "hitting_set_accurate": True}
        run.check(_el(G), expected, actual)


def _corona_bases(run: _Run) -> list[Graph]:
    return [random_connected_graph(run.rng.randint(1, run.cfg.max_n), run.rng) for _ in range(run.cfg.samples)]


def _corona_strict(run: _Run) -> None:
    for G in _corona_bases(run):
        H = corona_k1(G)
        g, a = run.solve(H)
        run.check(_el(G), {"corona": True, "gamma_a_exceeds_gamma": True}, {"corona": is_corona_graph(H), "gamma_a_exceeds_gamma": a > g})


def _corona_k1_values(run: _Run) -> None:
    for G in _corona_bases(run):
        g, a = run.solve(corona_k1(G))
        run.check(_el(G), {"gamma": G.n, "gamma_a": G.n + 1}, {"gamma": g, "gamma_a": a})


def check_disconnected_rule(G: Graph) -> bool:
    """Whether ``gamma_a(G) = gamma(G)`` iff some component has equality."""
    whole = solver.gamma_a(G).value == solver.gamma(G).value
    parts = []
    for comp in components(G):
        H, _ = induced_subgraph(G, VertexSet(G.n, comp))
        parts.append(solver.gamma_a(H).value == solver.gamma(H).value)
    return whole == any(parts)


def _disconnected(run: _Run) -> None:
    corpus = [
        disjoint_union(complete(2), complete(1)),
        disjoint_union(complete(2), complete(2)),
        disjoint_union(path(4), path(3)),
    ]
    for _ in range(run.cfg.samples):
        parts = []
        budget = run.cfg.max_n
        for _ in range(run.rng.randint(2, 3)):
            if budget < 1:
                break
            k = run.rng.randint(1, min(4, budget))
            budget -= k
            parts.append(random_connected_graph(k, run.rng, run.rng.uniform(0.0, 0.7)))
        corpus.append(disjoint_union(*parts))
    for G in corpus:
        run.solve(G)
        run.check(_el(G), True, check_disconnected_rule(G))


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------


def _support_sets(run: _Run) -> None:
    for n in range(3, run.cfg.max_n + 1):
        for T in enumerate_trees(n):
            D = support_respecting_gamma_set(T)
            _, supports = leaf_and_support_sets(T)
            ok_second = all(
                not T.adj[v] & D.mask or len(private_neighborhood(T, v, D)) >= 2
                for v in iter_bits(D.mask & ~supports.mask)
            )
            actual = {
                "size": len(D),
                "dominating": solver.is_dominating(T, D),
                "supports_inside": supports.mask & ~D.mask == 0,
                "private_condition": ok_second,
            }
            g, _ = run.solve(T)
            expected = {"size": g, "dominating": True, "supports_inside": True, "private_condition": True}
            run.check(_el(T), expected, actual)


def _witness_ok(T: Graph, w, g: int) -> bool:
    D = w.dominating_set
    return (
        len(D) == g
        and solver.is_dominating(T, D)
        and w.components_after_removal == components_after_removal(T, D.mask)
        and w.components_after_removal > len(D)
    )


def _tree_statements(T: Graph) -> tuple[dict, dict, tuple[int, int, int]]:
    corona = is_corona_graph(T)
    g = solver.gamma(T).value
    a = solver.gamma_a(T).value
    sets = [d.mask for d in solver.min_dominating_sets(T)]
    split = any(components_after_removal(T, d) > d.bit_count() for d in sets)
    hitting = solver.hitting_gamma_set(sets) is not None
    brute = find_witness_partition(T, "brute_force")
    built = find_witness_partition(T, "constructive")
    actual = {
        "not_corona": not corona,
        "split_set": split,
        "equality": a == g,
        "hitting_set": hitting,
        "recogniser": tree_gamma_a_equals_gamma(T),
        "brute_witness": brute is not None and _witness_ok(T, brute, g),
        "constructive_witness": built is not None and _witness_ok(T, built, g),
    }
    expected = dict.fromkeys(actual, not corona)
    return expected, actual, (T.n, g, a)


def tree_corpus(config: RunConfig) -> list[Graph]:
    """Trees checked for thm2.4: all labeled trees of order 2..exhaustive_n,
    then ``samples`` seeded random trees with orders cycling above that."""
    cfg = replace(config, theorem_id="thm2.4").resolved()
    rng = random.Random(cfg.seed)
    corpus = [T for n in range(2, cfg.exhaustive_n + 1) for T in enumerate_trees(n)]
    orders = list(range(cfg.exhaustive_n + 1, cfg.max_n + 1)) or [cfg.max_n]
    for i in range(cfg.samples):
        corpus.append(random_tree(orders[i % len(orders)], rng))
    return corpus


def _trees(run: _Run) -> None:
    for T in tree_corpus(run.cfg):
        expected, actual, seen = _tree_statements(T)
        run.observations.append(seen)
        run.check(_el(T), expected, actual)


# ---------------------------------------------------------------------------
# coronas
# ---------------------------------------------------------------------------


def _family_corona(run: _Run) -> None:
    for _ in range(run.cfg.samples):
        G = random_graph(run.rng.randint(1, run.cfg.max_n), 0.5, run.rng)
        members = tuple(random_graph(run.rng.randint(1, MEMBER_MAX), 0.5, run.rng) for _ in range(G.n))
        fam = GraphFamily(G, members)
        H = f_corona(fam)
        member_gamma = [solver.gamma(F).value for F in members]
        g, a = run.solve(H)
        n = G.n
        g_pred, a_pred = f_corona_predict(fam, member_gamma)
        actual = {
            "order": H.n,
            "size": H.m,
            "gamma": g,
            "equality": a == n,
            "within_bounds": n <= a <= n + min(F.n for F in members),
            "prediction_holds": g_pred.admits(g) and a_pred.admits(a),
        }
        expected = {
            "order": n + sum(F.n for F in members),
            "size": G.m + sum(F.m + F.n for F in members),
            "gamma": n,
            "equality": any(x > 1 for x in member_gamma),
            "within_bounds": True,
            "prediction_holds": True,
        }
        run.check(_family_doc(fam), expected, actual)


def _partition_facts(run: _Run, part: NeighborhoodPartition, kind: str) -> None:
    G = part.base
    H = p_corona(part)
    g, a = run.solve(H)
    sizes = part.sizes()
    g_pred, general = p_corona_predict(part, "general")
    actual: dict[str, Any] = {
        "order": H.n,
        "size": H.m,
        "gamma": g,
        "lower_bound": a >= G.n,
        "upper_bound": general.admits(a),
        "centre_degrees": [H.degree(v) for v in range(G.n)],
    }
    expected: dict[str, Any] = {
        "order": G.n + sum(sizes),
        "size": sum(sizes) + G.m,
        "gamma": g_pred.value,
        "lower_bound": True,
        "upper_bound": True,
        "centre_degrees": sizes,
    }
    if kind != "general":
        _, exact = p_corona_predict(part, kind)
        actual["gamma_a"] = a
        expected["gamma_a"] = exact.value
    run.check(_partition_doc(part), expected, actual)


def _random_part(G: Graph, rng: random.Random) -> NeighborhoodPartition:
    return NeighborhoodPartition(G, [random_partition(G.neighbors(v), rng) for v in range(G.n)])


def _partition_general(run: _Run) -> None:
    for G in _random_graphs(run, run.cfg.max_n):
        _partition_facts(run, _random_part(G, run.rng), "general")


def _partition_trees(run: _Run) -> None:
    for _ in range(run.cfg.samples):
        T = random_tree(run.rng.randint(1, run.cfg.max_n), run.rng)
        _partition_facts(run, _random_part(T, run.rng), "tree")


def _partition_cycles(run: _Run) -> None:
    for n in range(3, run.cfg.max_n + 1):
        C = cycle(n)
        for split in itertools.product((False, True), repeat=n):
            blocks = [[[u] for u in C.neighbors(v)] if split[v] else [C.neighbors(v)] for v in range(n)]
            _partition_facts(run, NeighborhoodPartition(C, blocks), "cycle")


def _unicyclic(n: int) -> list[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for chosen in itertools.combinations(pairs, n):
        G = Graph.from_edges(n, chosen)
        if is_connected(G) and not is_cycle(G):
            out.append(G)
    return out


def _dense(n: int) -> list[Graph]:
    return [G for G in connected_graphs(n) if G.m > G.n]


def _random_unicyclic(n: int, rng: random.Random) -> Graph:
    while True:
        T = random_tree(n, rng)
        u, v = rng.sample(range(n), 2)
        if T.has_edge(u, v):
            continue
        G = Graph.from_edges(n, T.edges() + [(min(u, v), max(u, v))])
        if not is_cycle(G):
            return G


def _subdivision(run: _Run) -> None:
    N, E = run.cfg.max_n, run.cfg.exhaustive_n
    corpus = [cycle(n) for n in range(3, N + 1)]
    corpus += [T for n in range(1, min(N, TREE_CAP) + 1) for T in enumerate_trees(n)]
    for n in range(3, min(E, N) + 1):
        corpus += _unicyclic(n)
    orders = list(range(max(E + 1, 4), N + 1))
    for i in range(run.cfg.samples if orders else 0):
        corpus.append(_random_unicyclic(orders[i % len(orders)], run.rng))
    for n in range(4, min(E, N) + 1):
        corpus += _dense(n)
    for G in corpus:
        S = s2_subdivision(G)
        g, a = run.solve(S)
        part = NeighborhoodPartition.singletons(G)
        actual = {
            "values": [g, a],
            "order": S.n,
            "size": S.m,
            "matches_partition_corona": natural_iso_check(p_corona(part), S, pcorona_to_s2_map(part)),
        }
        expected = {"values": list(s2_predict(G)), "order": G.n + 2 * G.m, "size": 3 * G.m, "matches_partition_corona": True}
        run.check(_el(G), expected, actual)


# ---------------------------------------------------------------------------
# registry and entry point
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Theorem:
    checker: Callable[[_Run], None]
    defaults: dict
    summary: str


THEOREMS: dict[str, _Theorem] = {
    "obs1.1": _Theorem(_obs_complete, {"max_n": 10}, "gamma_a(K_n) and gamma_a(K_{n,n})"),
    "obs1.2": _Theorem(_obs_bipartite, {"max_n": 6}, "gamma_a(K_{m,n}) for n > m"),
    "obs1.3": _Theorem(_obs_cycle, {"max_n": 12}, "gamma_a(C_n)"),
    "obs1.4": _Theorem(_obs_path, {"max_n": 12}, "gamma_a(P_n)"),
    "cor2.5": _Theorem(_paths_equality, {"max_n": 12}, "paths with gamma_a = gamma"),
    "lem2.1": _Theorem(
        _intersection, {"max_n": 9, "exhaustive_n": 5, "samples": 500}, "equality iff a gamma-set meets all gamma-sets"
    ),
    "lem2.2": _Theorem(_corona_strict, {"max_n": 5, "samples": 100}, "corona graphs have gamma_a > gamma"),
    "cor3.2": _Theorem(_corona_k1_values, {"max_n": 5, "samples": 100}, "gamma_a(G o K1) = n + 1"),
    "lem2.3": _Theorem(_support_sets, {"max_n": 7}, "support-respecting gamma-sets of trees"),
    "thm2.4": _Theorem(
        _trees, {"max_n": 11, "exhaustive_n": 8, "samples": 500}, "four-way tree characterisation and witnesses"
    ),
    "thm3.1": _Theorem(_family_corona, {"max_n": 5, "samples": 200}, "family coronas"),
    "thm3.3": _Theorem(_partition_general, {"max_n": 6, "samples": 100}, "partition corona bounds"),
    "cor3.5": _Theorem(_partition_trees, {"max_n": 6, "samples": 100}, "partition coronas of trees"),
    "cor3.6": _Theorem(_partition_cycles, {"max_n": 6}, "partition coronas of cycles"),
    "thm3.4": _Theorem(_subdivision, {"max_n": 6, "exhaustive_n": 5, "samples": 200}, "2-subdivided graphs"),
    "disconnected": _Theorem(_disconnected, {"max_n": 9, "samples": 200}, "equality via components"),
}


def run_check(config: RunConfig) -> VerificationReport:
    cfg = config.resolved()
    run = _Run(cfg)
    start = time.perf_counter()
    THEOREMS[cfg.theorem_id].checker(run)
    elapsed = int((time.perf_counter() - start) * 1000)
    failures = sorted(run.failures, key=lambda f: f["instance"])
    report = VerificationReport(cfg.theorem_id, run.count, failures, elapsed, cfg.seed, run.observations)
    if cfg.output:
        Path(cfg.output).write_text(report.dumps() + "\n")
    return report


__all__ = [
    "RunConfig",
    "VerificationReport",
    "THEOREMS",
    "UnknownTheoremError",
    "check_disconnected_rule",
    "run_check",
    "tree_corpus",
]
