"""Exact domination and accurate domination numbers.

Two exact engines sit behind the public functions:

``table``
    For graphs of order at most :data:`TABLE_LIMIT`. Builds, with numpy, the
    domination flag of every vertex subset and then the subset-minimum
    ``best[S]`` = smallest dominating set contained in ``S``. Every query
    (restricted gamma, accuracy of a set, gamma_a) is then a lookup.

``search``
    Bitmask branch and bound for orders up to the solver cap. The value
    comes from branching on an undominated vertex; witnesses and
    enumerations come from an include/exclude search over vertices in
    descending index order, which visits sets in ascending bitmask order.

Both engines return identical witnesses: the dominating set with the
smallest bitmask among those of optimal size.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional

import numpy as np

from .graph import Graph, GraphError, VertexLike, VertexSet, as_mask, iter_bits

MAX_CAP = 64
TABLE_LIMIT = 20
CAP_ENV = "ACCUDOM_SOLVER_CAP"


class CapExceededError(GraphError):
    """Graph too large for exhaustive search."""


def solver_cap() -> int:
    """Largest order accepted by the solver; ``ACCUDOM_SOLVER_CAP`` may lower it."""
    raw = os.environ.get(CAP_ENV)
    if not raw:
        return MAX_CAP
    try:
        value = int(raw)
    except ValueError:
        return MAX_CAP
    return max(1, min(MAX_CAP, value))


def _check_cap(G: Graph) -> None:
    cap = solver_cap()
    if G.n > cap:
        raise CapExceededError(f"graph of order {G.n} exceeds solver cap {cap}")


@dataclass(frozen=True)
class DominationResult:
    value: int
    witness: VertexSet
    exhausted: bool = True

    def __post_init__(self) -> None:
        if len(self.witness) != self.value:
            raise GraphError("witness size differs from value")


def _pick_method(G: Graph, method: str) -> str:
    if method == "auto":
        return "table" if G.n <= TABLE_LIMIT else "search"
    if method not in ("table", "search"):
        raise ValueError(f"unknown method {method!r}")
    if method == "table" and G.n > TABLE_LIMIT:
        raise CapExceededError(f"table method limited to order {TABLE_LIMIT}")
    return method


# ---------------------------------------------------------------------------
# table engine
# ---------------------------------------------------------------------------

_UNREACHABLE = 127


@lru_cache(maxsize=None)
def _popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        pc[1 << b : 2 << b] = pc[: 1 << b] + 1
    return pc


@lru_cache(maxsize=4)
def _arange(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


class _Table:
    """Per-graph subset tables; see the module docstring."""

    def __init__(self, closed: tuple[int, ...]) -> None:
        n = len(closed)
        self.n = n
        size = 1 << n
        cover = np.zeros(size, dtype=np.int64)
        for b, c in enumerate(closed):
            np.bitwise_or(cover[: 1 << b], c, out=cover[1 << b : 2 << b])
        self.pc = _popcounts(n)
        self.dom = cover == size - 1
        best = np.where(self.dom, self.pc, np.int8(_UNREACHABLE))
        for b in range(n):
            view = best.reshape(-1, 2, 1 << b)
            np.minimum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])
        self.best = best
        self._acc: Optional[np.ndarray] = None

    @property
    def accurate(self) -> np.ndarray:
        if self._acc is None:
            pc = self.pc
            comp_pc = pc[::-1]
            comp_best = self.best[::-1]
            self._acc = self.dom & ((comp_pc < pc) | (comp_best > pc))
        return self._acc

    def first_of_size(self, flags: np.ndarray, k: int, allowed: int) -> int:
        sel = flags & (self.pc == k)
        if allowed != (1 << self.n) - 1:
            sel &= (_arange(self.n) & ~allowed) == 0
        return int(np.flatnonzero(sel)[0])

    def all_of_size(self, flags: np.ndarray, k: int) -> list[int]:
        return [int(x) for x in np.flatnonzero(flags & (self.pc == k))]


@lru_cache(maxsize=16)
def _table_for(adj: tuple[int, ...]) -> _Table:
    return _Table(tuple(nb | (1 << v) for v, nb in enumerate(adj)))


def _table(G: Graph) -> _Table:
    return _table_for(G.adj)


# ---------------------------------------------------------------------------
# search engine
# ---------------------------------------------------------------------------


def _bb_min(closed: tuple[int, ...], n: int, allowed: int, limit: int) -> Optional[tuple[int, int]]:
    """Smallest dominating set inside ``allowed`` with fewer than ``limit`` vertices.

    Returns ``(size, mask)`` or ``None`` when no such set exists.
    """
    full = (1 << n) - 1
    cand = [closed[v] & allowed for v in range(n)]
    if any(c == 0 for c in cand):
        return None
    cover = {u: closed[u] for u in iter_bits(allowed)}
    maxcov = max(c.bit_count() for c in cover.values())
    best_size = limit
    best_mask = -1

    # greedy seed
    dom = 0
    chosen = 0
    while dom != full:
        u = max(cover, key=lambda w: ((cover[w] & ~dom).bit_count(), -w))
        chosen |= 1 << u
        dom |= cover[u]
    if chosen.bit_count() < best_size:
        best_size = chosen.bit_count()
        best_mask = chosen

    def rec(dom: int, chosen: int, count: int) -> None:
        nonlocal best_size, best_mask
        undom = full & ~dom
        if not undom:
            if count < best_size:
                best_size, best_mask = count, chosen
            return
        k = undom.bit_count()
        if count + -(-k // maxcov) >= best_size:
            return
        # branch on the undominated vertex with the fewest candidates
        pick = -1
        fewest = n + 1
        for v in iter_bits(undom):
            c = cand[v].bit_count()
            if c < fewest:
                fewest, pick = c, v
                if c == 1:
                    break
        options = sorted(iter_bits(cand[pick]), key=lambda w: -(cover[w] & undom).bit_count())
        for w in options:
            rec(dom | cover[w], chosen | (1 << w), count + 1)
            if count + 1 >= best_size:
                return

    rec(0, 0, 0)
    if best_mask < 0:
        return None
    return best_size, best_mask


def _ordered_search(
    closed: tuple[int, ...], n: int, allowed: int, k: int, visit: Callable[[int], bool]
) -> None:
    """Call ``visit`` on every dominating ``k``-subset of ``allowed`` in ascending mask order.

    Stops as soon as ``visit`` returns True.
    """
    full = (1 << n) - 1
    reach = [0] * (n + 1)
    avail = [0] * (n + 1)
    maxcov = [1] * (n + 1)
    for i in range(n):
        on = allowed >> i & 1
        reach[i + 1] = reach[i] | (closed[i] if on else 0)
        avail[i + 1] = avail[i] + on
        maxcov[i + 1] = max(maxcov[i], closed[i].bit_count() if on else 0)

    def rec(i: int, chosen: int, dom: int, count: int) -> bool:
        need = k - count
        undom = full & ~dom
        if need == 0:
            return not undom and visit(chosen)
        if avail[i] < need or undom & ~reach[i]:
            return False
        if undom and -(-undom.bit_count() // maxcov[i]) > need:
            return False
        v = i - 1
        while not allowed >> v & 1:
            v -= 1
        if rec(v, chosen, dom, count):
            return True
        return rec(v, chosen | (1 << v), dom | closed[v], count + 1)

    rec(n, 0, 0, 0)


def _ordered_first(closed: tuple[int, ...], n: int, allowed: int, k: int) -> Optional[int]:
    found: list[int] = []

    def visit(mask: int) -> bool:
        found.append(mask)
        return True

    _ordered_search(closed, n, allowed, k, visit)
    return found[0] if found else None


def _ordered_all(closed: tuple[int, ...], n: int, allowed: int, k: int) -> list[int]:
    found: list[int] = []
    _ordered_search(closed, n, allowed, k, lambda m: found.append(m) or False)
    return found


def _search_accurate(closed: tuple[int, ...], n: int, D: int) -> bool:
    k = D.bit_count()
    rest = ((1 << n) - 1) & ~D
    if rest.bit_count() < k:
        return True
    return _bb_min(closed, n, rest, k + 1) is None


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def is_dominating(G: Graph, D: VertexLike) -> bool:
    dm = as_mask(G, D)
    covered = dm
    for v in iter_bits(dm):
        covered |= G.adj[v]
    return covered == G.full


def gamma(G: Graph, allowed: VertexLike | None = None, method: str = "auto") -> Optional[DominationResult]:
    """Minimum dominating set of ``G`` using only vertices of ``allowed``.

    Returns ``None`` when some vertex has no allowed vertex in its closed
    neighbourhood. The witness is the optimal set with the smallest bitmask.
    """
    _check_cap(G)
    method = _pick_method(G, method)
    am = G.full if allowed is None else as_mask(G, allowed)
    closed = G.closed_masks()
    if any(not c & am for c in closed):
        return None
    if G.n == 0:
        return DominationResult(0, VertexSet(0, 0))
    if method == "table":
        t = _table(G)
        k = int(t.best[am])
        mask = t.first_of_size(t.dom, k, am)
    else:
        found = _bb_min(closed, G.n, am, G.n + 1)
        assert found is not None
        k = found[0]
        mask = _ordered_first(closed, G.n, am, k)
        assert mask is not None
    return DominationResult(k, VertexSet(G.n, mask))


def min_dominating_sets(G: Graph, method: str = "auto") -> Iterator[VertexSet]:
    """Every minimum dominating set, in ascending bitmask order."""
    _check_cap(G)
    method = _pick_method(G, method)
    if G.n == 0:
        yield VertexSet(0, 0)
        return
    if method == "table":
        t = _table(G)
        masks = t.all_of_size(t.dom, int(t.best[G.full]))
    else:
        k = gamma(G, method="search").value
        masks = _ordered_all(G.closed_masks(), G.n, G.full, k)
    for m in masks:
        yield VertexSet(G.n, m)


def is_accurate_dominating(G: Graph, D: VertexLike, method: str = "auto") -> bool:
    """Dominating, and no ``|D|``-subset of the complement dominates.

    A dominating subset of the complement with at most ``|D|`` vertices can be
    padded to exactly ``|D|`` whenever the complement is large enough, so the
    test reduces to a restricted domination number.
    """
    _check_cap(G)
    method = _pick_method(G, method)
    dm = as_mask(G, D)
    if not is_dominating(G, VertexSet(G.n, dm)):
        return False
    if method == "table":
        return bool(_table(G).accurate[dm])
    return _search_accurate(G.closed_masks(), G.n, dm)


def gamma_a(G: Graph, method: str = "auto") -> DominationResult:
    """Accurate domination number with its smallest-bitmask witness.

    The whole vertex set is always accurate, so a result always exists.
    """
    _check_cap(G)
    method = _pick_method(G, method)
    if G.n == 0:
        return DominationResult(0, VertexSet(0, 0))
    if method == "table":
        t = _table(G)
        acc = t.accurate
        k = int(t.pc[acc].min())
        return DominationResult(k, VertexSet(G.n, t.first_of_size(acc, k, G.full)))
    closed = G.closed_masks()
    n = G.n
    found: list[int] = []

    def visit(mask: int) -> bool:
        if _search_accurate(closed, n, mask):
            found.append(mask)
            return True
        return False

    k = gamma(G, method="search").value
    while not found:
        _ordered_search(closed, n, G.full, k, visit)
        if not found:
            k += 1
    return DominationResult(k, VertexSet(n, found[0]))


def min_accurate_dominating_sets(G: Graph, method: str = "auto") -> Iterator[VertexSet]:
    """Every accurate dominating set of size gamma_a, ascending bitmask order."""
    _check_cap(G)
    method = _pick_method(G, method)
    if G.n == 0:
        yield VertexSet(0, 0)
        return
    if method == "table":
        t = _table(G)
        acc = t.accurate
        masks = t.all_of_size(acc, int(t.pc[acc].min()))
    else:
        closed = G.closed_masks()
        k = gamma_a(G, method="search").value
        masks = []

        def collect(mask: int) -> bool:
            if _search_accurate(closed, G.n, mask):
                masks.append(mask)
            return False  # keep going

        _ordered_search(closed, G.n, G.full, k, collect)
    for m in masks:
        yield VertexSet(G.n, m)


@dataclass(frozen=True)
class HittingSetCheck:
    equality: bool
    hitting_set: Optional[VertexSet]

    @property
    def consistent(self) -> bool:
        """The biconditional: equality holds iff a hitting gamma-set exists."""
        return self.equality == (self.hitting_set is not None)


def hitting_gamma_set(sets: list[int]) -> Optional[int]:
    """First set (ascending) that meets every set in ``sets``."""
    for d in sets:
        if all(d & e for e in sets):
            return d
    return None


def check_hitting_gamma_set(G: Graph, method: str = "auto") -> HittingSetCheck:
    g = gamma(G, method=method).value
    ga = gamma_a(G, method=method).value
    sets = [s.mask for s in min_dominating_sets(G, method=method)]
    hit = hitting_gamma_set(sets)
    return HittingSetCheck(ga == g, None if hit is None else VertexSet(G.n, hit))


# name used by the command-line contract and the theorem-id registry
check_lemma_2_1 = check_hitting_gamma_set


def result_record(G: Graph, method: str = "auto") -> dict:
    """JSON-ready record of both numbers and their witnesses."""
    g = gamma(G, method=method)
    a = gamma_a(G, method=method)
    return {
        "n": G.n,
        "gamma": g.value,
        "gamma_witness": g.witness.to_list(),
        "gamma_a": a.value,
        "gamma_a_witness": a.witness.to_list(),
    }
