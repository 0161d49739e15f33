"""Definition-level reference implementations, deliberately naive.

Nothing here touches the package's bitmask code: graphs are
(n, set-of-frozenset-edges) pairs and every quantity is found by trying all
subsets straight from the definitions.
"""
from itertools import combinations


def nbrs(n, edges):
    out = {v: set() for v in range(n)}
    for e in edges:
        a, b = tuple(e)
        out[a].add(b)
        out[b].add(a)
    return out


def dominates(n, edges, D):
    N = nbrs(n, edges)
    D = set(D)
    return all(v in D or N[v] & D for v in range(n))


def dominating_sets_of_size(n, edges, k, pool=None):
    pool = range(n) if pool is None else sorted(pool)
    return [set(c) for c in combinations(pool, k) if dominates(n, edges, c)]


def gamma(n, edges):
    for k in range(n + 1):
        if dominating_sets_of_size(n, edges, k):
            return k


def accurate(n, edges, D):
    """D dominates and no |D|-subset of V - D dominates."""
    D = set(D)
    if not dominates(n, edges, D):
        return False
    rest = set(range(n)) - D
    return not dominating_sets_of_size(n, edges, len(D), rest)


def gamma_a(n, edges):
    for k in range(n + 1):
        for c in combinations(range(n), k):
            if accurate(n, edges, c):
                return k


def min_dominating_sets(n, edges):
    return [sorted(s) for s in dominating_sets_of_size(n, edges, gamma(n, edges))]


def min_accurate_sets(n, edges):
    k = gamma_a(n, edges)
    return [list(c) for c in combinations(range(n), k) if accurate(n, edges, c)]


def components(n, edges, removed=()):
    removed = set(removed)
    N = nbrs(n, edges)
    seen, count = set(), 0
    for s in range(n):
        if s in removed or s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in N[v] - removed - seen:
                seen.add(u)
                stack.append(u)
    return count


def is_corona(n, edges):
    """Search for a pendant set L with a perfect matching L -> V - L of
    pendant edges and V - L inducing a connected graph."""
    if n % 2:
        return False
    N = nbrs(n, edges)
    for L in combinations(range(n), n // 2):
        L = set(L)
        core = set(range(n)) - L
        if any(len(N[x]) != 1 or N[x] <= L for x in L):
            continue
        if {next(iter(N[x])) for x in L} != core:
            continue
        inner = [e for e in edges if set(e) <= core]
        relabel = {v: i for i, v in enumerate(sorted(core))}
        if components(len(core), [frozenset(relabel[v] for v in e) for e in inner]) == 1:
            return True
    return False


def edge_set(G):
    return {frozenset(e) for e in G.edges()}
