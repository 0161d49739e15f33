"""Corona recognition and the tree characterisation of gamma_a = gamma.

For a tree ``T`` of order at least two the following are equivalent: ``T``
is not a corona graph; some minimum dominating set ``D`` leaves more than
``|D|`` components when removed; ``gamma_a(T) = gamma(T)``; some minimum
dominating set meets every other one. This module decides the first
statement directly and builds the witness ``D`` of the second one, either by
scanning all minimum dominating sets or by a recursive split of the tree.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    components_after_removal,
    induced_subgraph,
    is_connected,
    is_tree,
    iter_bits,
    leaf_and_support_sets,
)
from .io import write_edge_list
from . import solver


class NotATreeError(GraphError):
    pass


def _require_tree(T: Graph, min_order: int) -> None:
    if not is_tree(T):
        raise NotATreeError("input is not a tree")
    if T.n < min_order:
        raise NotATreeError(f"tree must have at least {min_order} vertices, got {T.n}")


def is_corona_graph(G: Graph) -> bool:
    """Whether ``G = F o K1`` for some connected ``F``.

    A connected graph is a corona exactly when its leaves form half of the
    vertices and every other vertex has exactly one leaf neighbour: removing
    the leaves then leaves a connected ``F``.
    """
    if G.n == 0 or not is_connected(G):
        raise GraphError("corona recognition needs a nonempty connected graph")
    if G.n == 2:
        return True
    if G.n % 2:
        return False
    leaves, _ = leaf_and_support_sets(G)
    if len(leaves) != G.n // 2:
        return False
    lm = leaves.mask
    for v in iter_bits(G.full & ~lm):
        if (G.adj[v] & lm).bit_count() != 1:
            return False
    return True


def tree_gamma_a_equals_gamma(T: Graph) -> bool:
    _require_tree(T, 2)
    return not is_corona_graph(T)


def tree_min_dominating_set(T: Graph) -> int:
    """A minimum dominating set of a tree (or forest) by the leaves-up greedy.

    Processes vertices in reverse BFS order; an undominated vertex pulls its
    parent (or itself, at a root) into the set.
    """
    parent = [-1] * T.n
    order: list[int] = []
    seen = 0
    for root in range(T.n):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in iter_bits(T.adj[v] & ~seen):
                seen |= 1 << u
                parent[u] = v
                queue.append(u)
    D = dominated = 0
    for v in reversed(order):
        if not dominated >> v & 1:
            p = v if parent[v] < 0 else parent[v]
            D |= 1 << p
            dominated |= T.adj[p] | (1 << p)
    return D


def _private(T: Graph, x: int, D: int) -> int:
    others = 0
    for y in iter_bits(D & ~(1 << x)):
        others |= T.adj[y] | (1 << y)
    return (T.adj[x] | (1 << x)) & ~others


def _support_respecting(T: Graph, D: int) -> int:
    """Apply the two exchange rules until neither fires.

    A leaf in ``D`` is replaced by its support vertex; a non-support ``v`` in
    ``D`` with a neighbour in ``D`` and a single private neighbour ``u`` is
    replaced by ``u``. Each exchange keeps ``D`` minimum dominating and raises
    (supports in D, components of T[D]) lexicographically, so this ends.
    """
    leaves, supports = leaf_and_support_sets(T)
    lm, sm = leaves.mask, supports.mask
    changed = True
    while changed:
        changed = False
        for v in iter_bits(D):
            if lm >> v & 1 and not sm >> v & 1:
                D = D & ~(1 << v) | T.adj[v]
                changed = True
                break
            if sm >> v & 1 or not T.adj[v] & D:
                continue
            pn = _private(T, v, D)
            if pn.bit_count() == 1:
                D = D & ~(1 << v) | pn
                changed = True
                break
    return D


def support_respecting_gamma_set(T: Graph) -> VertexSet:
    """A minimum dominating set containing every support vertex in which each
    other member either has no neighbour in the set or at least two private
    neighbours."""
    _require_tree(T, 3)
    return VertexSet(T.n, _support_respecting(T, tree_min_dominating_set(T)))


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeWitness:
    dominating_set: VertexSet
    components_after_removal: int
    mode: str

    def to_json(self, T: Graph) -> dict:
        return {
            "tree": write_edge_list(T),
            "D": self.dominating_set.to_list(),
            "kappa": self.components_after_removal,
            "mode": self.mode,
        }


class WitnessConstructionError(RuntimeError):
    """The recursive construction produced a set violating its guarantees."""


def _lift(mask: int, old: list[int]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << old[i]
    return out


def _component_with(G: Graph, start: int, removed: int) -> int:
    alive = G.full & ~removed
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & alive & ~comp
        comp |= frontier
    return comp


def _normalise(T: Graph, D: int) -> int:
    """Swap leaves of ``D`` for their supports; never lowers kappa(T - D)."""
    leaves, _ = leaf_and_support_sets(T)
    if T.n <= 2:
        return D
    for v in iter_bits(D & leaves.mask):
        D = D & ~(1 << v) | T.adj[v]
    return D


def _split_part(T: Graph) -> int:
    """Witness for a piece of a split: supports if corona, else recurse."""
    if is_corona_graph(T):
        return leaf_and_support_sets(T)[1].mask
    return _normalise(T, _construct(T))


def _split_at(T: Graph, v: int, vp: int, start: int) -> int:
    """Cut ``T`` at the pendant edge ``v vp`` and glue the two witnesses."""
    side = _component_with(T, start, (1 << v) | (1 << vp))
    both = (1 << v) | (1 << vp)
    T1, old1 = induced_subgraph(T, VertexSet(T.n, side | both))
    T2, old2 = induced_subgraph(T, VertexSet(T.n, T.full & ~side))
    return _lift(_split_part(T1), old1) | _lift(_split_part(T2), old2)


def _construct(T: Graph) -> int:
    """Minimum dominating ``D`` with kappa(T - D) > |D| for a non-corona tree."""
    n = T.n
    if n <= 4:
        # the non-corona trees of order 3 and 4 are the stars K_{1,2}, K_{1,3}
        return 1 << max(range(n), key=lambda v: T.adj[v].bit_count())
    leaves, supports = leaf_and_support_sets(T)
    lm, sm = leaves.mask, supports.mask
    big = [v for v in iter_bits(sm) if T.adj[v].bit_count() >= 3]
    if big:
        v = big[0]
        vp = (T.adj[v] & lm & -(T.adj[v] & lm)).bit_length() - 1
        rest = T.adj[v] & ~(1 << vp)
        start = (rest & -rest).bit_length() - 1
        return _split_at(T, v, vp, start)
    D = _support_respecting(T, tree_min_dominating_set(T))
    extra = D & ~sm
    if not extra:
        return D
    v = (extra & -extra).bit_length() - 1
    outside = T.adj[v] & ~D
    v1 = (outside & -outside).bit_length() - 1
    # attach an auxiliary pendant vp to v, split there, then drop vp
    vp = n
    R = Graph(n + 1, tuple(nb | ((1 << vp) if u == v else 0) for u, nb in enumerate(T.adj)) + (1 << v,))
    return _split_at(R, v, vp, v1) & T.full


def _brute_witness(T: Graph) -> Optional[int]:
    for D in solver.min_dominating_sets(T):
        if components_after_removal(T, D.mask) > len(D):
            return D.mask
    return None


def find_witness_partition(T: Graph, mode: str = "brute_force") -> Optional[TreeWitness]:
    """A minimum dominating set ``D`` with kappa(T - D) > |D|, or None.

    ``brute_force`` scans every minimum dominating set in ascending bitmask
    order. ``constructive`` builds ``D`` by recursively splitting ``T`` at a
    pendant edge. Both return None exactly for corona trees.
    """
    _require_tree(T, 2)
    if mode == "brute_force":
        D = _brute_witness(T)
    elif mode == "constructive":
        if is_corona_graph(T):
            return None
        D = _construct(T)
        kappa = components_after_removal(T, D)
        if (
            not solver.is_dominating(T, VertexSet(T.n, D))
            or D.bit_count() != tree_min_dominating_set(T).bit_count()
            or kappa <= D.bit_count()
        ):
            raise WitnessConstructionError(f"construction failed on {write_edge_list(T)!r}")
    else:
        raise ValueError(f"unknown witness mode {mode!r}")
    if D is None:
        return None
    return TreeWitness(VertexSet(T.n, D), components_after_removal(T, D), mode)
