"""Instance generators: labeled trees, seeded random graphs and families."""
from __future__ import annotations

import heapq
import itertools
import random
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .graph import Graph, GraphError, is_connected, iter_bits

TREE_CAP = 12


def prufer_to_tree(seq: Sequence[int], n: int) -> Graph:
    """Decode a Prüfer sequence of length ``n - 2`` into a labeled tree."""
    if len(seq) != n - 2:
        raise GraphError(f"Prüfer sequence for n={n} needs length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = leaves
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, once each (``n**(n-2)`` of them)."""
    if not 1 <= n <= TREE_CAP:
        raise GraphError(f"tree enumeration supports 1 <= n <= {TREE_CAP}, got {n}")
    if n == 1:
        yield Graph(1, (0,))
        return
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq, n)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)], n)


def random_graph(n: int, edge_prob: Union[float, Fraction], seed: Union[int, random.Random]) -> Graph:
    """G(n, p): each unordered pair included independently, deterministic per seed."""
    if not 0 <= edge_prob <= 1:
        raise GraphError("edge probability must lie in [0, 1]")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    p = float(edge_prob)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, rng: random.Random, edge_prob: float = 0.5) -> Graph:
    """A random spanning tree plus independent extra edges."""
    T = random_tree(n, rng)
    adj = list(T.adj)
    for i in range(n):
        for j in range(i + 1, n):
            if not adj[i] >> j & 1 and rng.random() < edge_prob:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, by edge subset."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[k] for k in iter_bits(bits)])


def connected_graphs(n: int) -> Iterator[Graph]:
    for G in all_graphs(n):
        if is_connected(G):
            yield G


def random_partition(items: Sequence[int], rng: random.Random) -> list[list[int]]:
    """Uniform-ish random set partition via a random restricted growth string."""
    blocks: list[list[int]] = []
    for x in items:
        k = rng.randrange(len(blocks) + 1)
        if k == len(blocks):
            blocks.append([x])
        else:
            blocks[k].append(x)
    return blocks
