"""Immutable simple graphs on dense 0-based vertex indices.

Adjacency is stored as one bitmask per vertex, so vertex subsets are plain
Python ints throughout the package. :class:`VertexSet` wraps such a mask
together with the order of its host graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union


class GraphError(ValueError):
    """Invalid graph data or an operation applied outside its domain."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# vertex labels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Plain:
    """A bare vertex name."""

    id: Union[int, str]

    def render(self) -> str:
        return str(self.id)


@dataclass(frozen=True)
class Member:
    """Second coordinate naming a vertex ``x`` of a member graph ``F_v``."""

    label: "Label"

    def render(self) -> str:
        return "x" + self.label.render()


@dataclass(frozen=True)
class Block:
    """Second coordinate naming one block of a neighbourhood partition.

    ``members`` holds the labels of the block's vertices, ordered by vertex
    index in the base graph.
    """

    members: tuple

    def render(self) -> str:
        return "{" + ",".join(m.render() for m in self.members) + "}"


@dataclass(frozen=True)
class EdgeName:
    """Second coordinate naming an edge ``vu``; endpoints in index order."""

    ends: tuple

    def render(self) -> str:
        return "".join(e.render() for e in self.ends)


@dataclass(frozen=True)
class Tagged:
    """Pair label ``(base, tag)`` used by the corona constructions."""

    base: "Label"
    tag: Union[int, Member, Block, EdgeName]

    def render(self) -> str:
        tag = self.tag if isinstance(self.tag, int) else self.tag.render()
        return f"({self.base.render()},{tag})"


Label = Union[Plain, Tagged]


# ---------------------------------------------------------------------------
# vertex sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices ``0..host_size-1`` of a fixed host graph."""

    host_size: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.host_size < 0:
            raise GraphError("host_size must be nonnegative")
        if self.mask < 0 or self.mask >> self.host_size:
            raise GraphError(f"members outside 0..{self.host_size - 1}")

    @classmethod
    def of(cls, host_size: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < host_size:
                raise GraphError(f"vertex {v} outside 0..{host_size - 1}")
            mask |= 1 << v
        return cls(host_size, mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.host_size and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._same_host(other)
        return VertexSet(self.host_size, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._same_host(other)
        return VertexSet(self.host_size, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._same_host(other)
        return VertexSet(self.host_size, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.host_size, ((1 << self.host_size) - 1) & ~self.mask)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.mask))

    def _same_host(self, other: "VertexSet") -> None:
        if self.host_size != other.host_size:
            raise GraphError("vertex sets belong to different hosts")

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


VertexLike = Union[VertexSet, Iterable[int]]


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``adj[v]`` is the bitmask of the open neighbourhood of ``v``. Labels are
    metadata for rendering only; they never take part in adjacency.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[Label, ...] | None = field(default=None, compare=True)

    def __post_init__(self) -> None:
        if self.n != len(self.adj):
            raise GraphError("adjacency length differs from vertex count")
        for v, nb in enumerate(self.adj):
            if nb < 0 or nb >> self.n:
                raise GraphError(f"neighbour of {v} out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("labels must cover every vertex")
            texts = [lab.render() for lab in self.labels]
            if len(set(texts)) != self.n:
                raise GraphError("vertex labels are not distinct")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Iterable[Label] | None = None
    ) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), None if labels is None else tuple(labels))

    def with_labels(self, labels: Iterable[Label] | None) -> "Graph":
        return Graph(self.n, self.adj, None if labels is None else tuple(labels))

    # -- basic queries -----------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[self._check(v)].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[self._check(v)]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[self._check(u)] >> self._check(v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def closed_masks(self) -> tuple[int, ...]:
        return tuple(nb | (1 << v) for v, nb in enumerate(self.adj))

    def label_text(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v].render()

    def label_of(self, v: int) -> Label:
        return Plain(v) if self.labels is None else self.labels[v]

    def vertex_set(self, members: VertexLike) -> VertexSet:
        if isinstance(members, VertexSet):
            if members.host_size != self.n:
                raise GraphError(
                    f"vertex set host size {members.host_size} differs from graph order {self.n}"
                )
            return members
        return VertexSet.of(self.n, members)

    def _check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"invalid vertex {v!r} for graph of order {self.n}")
        return v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def as_mask(G: Graph, members: VertexLike) -> int:
    return G.vertex_set(members).mask


# ---------------------------------------------------------------------------
# neighbourhoods and structure
# ---------------------------------------------------------------------------


def open_neighborhood(G: Graph, v: int) -> VertexSet:
    return VertexSet(G.n, G.adj[G._check(v)])


def closed_neighborhood(G: Graph, v: int) -> VertexSet:
    return VertexSet(G.n, G.adj[G._check(v)] | (1 << v))


def private_neighborhood(G: Graph, x: int, X: VertexLike) -> VertexSet:
    """Vertices whose closed neighbourhood meets ``X`` exactly in ``{x}``."""
    xm = as_mask(G, X)
    G._check(x)
    if not xm >> x & 1:
        raise GraphError(f"vertex {x} is not a member of X")
    others = 0
    for y in iter_bits(xm & ~(1 << x)):
        others |= G.adj[y] | (1 << y)
    return VertexSet(G.n, (G.adj[x] | (1 << x)) & ~others)


def leaf_and_support_sets(G: Graph) -> tuple[VertexSet, VertexSet]:
    leaves = 0
    for v, nb in enumerate(G.adj):
        if nb.bit_count() == 1:
            leaves |= 1 << v
    supports = 0
    for v in iter_bits(leaves):
        supports |= G.adj[v]
    return VertexSet(G.n, leaves), VertexSet(G.n, supports)


def induced_subgraph(G: Graph, keep: VertexLike) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep`` and the list mapping new index -> old index."""
    km = as_mask(G, keep)
    old = list(iter_bits(km))
    new_of = {o: i for i, o in enumerate(old)}
    adj = []
    for o in old:
        nb = 0
        for u in iter_bits(G.adj[o] & km):
            nb |= 1 << new_of[u]
        adj.append(nb)
    labels = None if G.labels is None else tuple(G.labels[o] for o in old)
    return Graph(len(old), tuple(adj), labels), old


def delete_vertices(G: Graph, S: VertexLike) -> tuple[Graph, list[int]]:
    """``G - S`` with survivors renumbered in index order.

    Returns the new graph and the list mapping each new index to its old one.
    """
    return induced_subgraph(G, VertexSet(G.n, G.full & ~as_mask(G, S)))


def components(G: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by their lowest vertex."""
    seen = 0
    out = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def component_count(G: Graph) -> int:
    return len(components(G))


def components_after_removal(G: Graph, removed: int) -> int:
    """kappa(G - S) for ``S`` given as a mask, without rebuilding the graph."""
    alive = G.full & ~removed
    count = 0
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & alive & ~comp
            comp |= frontier
        alive &= ~comp
        count += 1
    return count


def is_connected(G: Graph) -> bool:
    return G.n > 0 and component_count(G) == 1


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def is_cycle(G: Graph) -> bool:
    return G.n >= 3 and all(nb.bit_count() == 2 for nb in G.adj) and is_connected(G)


def universal_vertices(G: Graph) -> VertexSet:
    full = G.full
    mask = 0
    for v, nb in enumerate(G.adj):
        if nb | (1 << v) == full:
            mask |= 1 << v
    return VertexSet(G.n, mask)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    for H in graphs:
        shift = len(adj)
        adj.extend(nb << shift for nb in H.adj)
    return Graph(len(adj), tuple(adj))


# ---------------------------------------------------------------------------
# standard families
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with the m-part on ``0..m-1`` and the n-part after it."""
    if m < 1 or n < 1:
        raise GraphError("complete bipartite graph needs m, n >= 1")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


_BUILDERS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
}


def build_standard(family: str, *params: int) -> Graph:
    try:
        builder, arity = _BUILDERS[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}") from None
    if len(params) != arity:
        raise GraphError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)
