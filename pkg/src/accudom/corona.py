"""Corona-type constructions with pair-labelled vertex sets.

Vertex numbering of every construction is fixed and documented here because
golden tests depend on it:

* ``corona_k1(G)``: ``(v,0)`` at index ``v``, pendant ``(v,1)`` at ``n + v``.
* ``f_corona``: ``(v,0)`` at index ``v``; then, for ``v`` in index order, the
  vertices ``(v,x)`` of ``F_v`` in the order of ``F_v``.
* ``p_corona``: centres ``(v,1)`` at index ``v``; then, for ``v`` in index
  order, the block vertices ``(v,A)`` with blocks sorted by least member.
* ``s2_subdivision``: original vertices keep their index; then, for every edge
  ``uv`` (``u < v``, edges sorted), ``(u,uv)`` followed by ``(v,uv)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .graph import (
    Block,
    EdgeName,
    Graph,
    GraphError,
    Member,
    Plain,
    Tagged,
    iter_bits,
)
from .io import parse_edge_list


@dataclass(frozen=True)
class GraphFamily:
    """Nonempty graphs ``F_v`` indexed by the vertices of ``base``."""

    base: Graph
    members: tuple[Graph, ...]

    def __post_init__(self) -> None:
        if len(self.members) != self.base.n:
            raise GraphError("family must assign a graph to every base vertex")
        for v, F in enumerate(self.members):
            if F.n < 1:
                raise GraphError(f"member graph of vertex {v} is empty")

    @classmethod
    def uniform(cls, base: Graph, F: Graph) -> "GraphFamily":
        return cls(base, tuple(F for _ in range(base.n)))


@dataclass(frozen=True)
class NeighborhoodPartition:
    """A partition of every open neighbourhood of ``base``.

    ``blocks[v]`` is a tuple of sorted vertex tuples, ordered by least member.
    Isolated vertices have the empty partition.
    """

    base: Graph
    blocks: tuple[tuple[tuple[int, ...], ...], ...]

    def __init__(self, base: Graph, blocks: Sequence[Sequence[Sequence[int]]]) -> None:
        if len(blocks) != base.n:
            raise GraphError("partition must be given for every base vertex")
        norm = []
        for v, parts in enumerate(blocks):
            seen = 0
            out = []
            for part in parts:
                part = tuple(sorted(part))
                if not part:
                    raise GraphError(f"empty block in the partition of vertex {v}")
                for u in part:
                    if not base.has_edge(v, u):
                        raise GraphError(f"block member {u} is not a neighbour of {v}")
                    if seen >> u & 1:
                        raise GraphError(f"blocks of vertex {v} overlap at {u}")
                    seen |= 1 << u
                out.append(part)
            if seen != base.adj[v]:
                raise GraphError(f"blocks of vertex {v} do not cover its neighbourhood")
            norm.append(tuple(sorted(out)))
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "blocks", tuple(norm))

    @classmethod
    def whole(cls, base: Graph) -> "NeighborhoodPartition":
        return cls(base, [[base.neighbors(v)] if base.adj[v] else [] for v in range(base.n)])

    @classmethod
    def singletons(cls, base: Graph) -> "NeighborhoodPartition":
        return cls(base, [[[u] for u in base.neighbors(v)] for v in range(base.n)])

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]


def _base_labels(G: Graph) -> list:
    return [G.label_of(v) for v in range(G.n)]


def corona_k1(G: Graph) -> Graph:
    """``G o K1``: one pendant vertex attached to every vertex."""
    if G.n < 1:
        raise GraphError("corona needs a nonempty graph")
    n = G.n
    adj = [nb | (1 << (n + v)) for v, nb in enumerate(G.adj)]
    adj.extend(1 << v for v in range(n))
    base = _base_labels(G)
    labels = [Tagged(b, 0) for b in base] + [Tagged(b, 1) for b in base]
    return Graph(2 * n, tuple(adj), tuple(labels))


def f_corona(fam: GraphFamily) -> Graph:
    G = fam.base
    adj = list(G.adj)
    base = _base_labels(G)
    labels = [Tagged(b, 0) for b in base]
    for v, F in enumerate(fam.members):
        offset = len(adj)
        block = ((1 << F.n) - 1) << offset
        adj[v] |= block
        for x, nb in enumerate(F.adj):
            adj.append(nb << offset | (1 << v))
            labels.append(Tagged(base[v], Member(F.label_of(x))))
    return Graph(len(adj), tuple(adj), tuple(labels))


def p_corona(part: NeighborhoodPartition) -> Graph:
    G = part.base
    base = _base_labels(G)
    labels = [Tagged(b, 1) for b in base]
    edges: list[tuple[int, int]] = []
    where: dict[tuple[int, int], int] = {}  # (v, u) -> index of the block of v holding u
    for v, blocks in enumerate(part.blocks):
        for A in blocks:
            idx = len(labels)
            labels.append(Tagged(base[v], Block(tuple(base[u] for u in A))))
            edges.append((v, idx))
            for u in A:
                where[v, u] = idx
    for u, v in G.edges():
        edges.append((where[u, v], where[v, u]))
    return Graph.from_edges(len(labels), edges, labels)


def s2_subdivision(G: Graph) -> Graph:
    """Replace every edge ``uv`` by the path ``u, (u,uv), (v,uv), v``."""
    base = _base_labels(G)
    labels: list = list(base)
    edges = []
    for u, v in G.edges():
        name = EdgeName((base[u], base[v]))
        a, b = len(labels), len(labels) + 1
        labels.append(Tagged(base[u], name))
        labels.append(Tagged(base[v], name))
        edges.extend([(u, a), (a, b), (b, v)])
    return Graph.from_edges(len(labels), edges, labels)


# ---------------------------------------------------------------------------
# canonical bijections
# ---------------------------------------------------------------------------


def natural_iso_check(A: Graph, B: Graph, mapping: Sequence[int]) -> bool:
    """Whether ``mapping`` (vertex ``i`` of A to ``mapping[i]`` of B) is an isomorphism."""
    if A.n != B.n or len(mapping) != A.n or sorted(mapping) != list(range(B.n)):
        raise GraphError("mapping is not a bijection between the vertex sets")
    for i in range(A.n):
        image = 0
        for j in iter_bits(A.adj[i]):
            image |= 1 << mapping[j]
        if image != B.adj[mapping[i]]:
            return False
    return True


def pcorona_to_corona_k1_map(part: NeighborhoodPartition) -> list[int]:
    """Centre ``(v,1)`` to the pendant ``(v,1)``, block ``(v,N(v))`` to ``(v,0)``.

    Whole-neighbourhood blocks only. The centres are the pendant vertices of
    the partition corona, so they cannot go to the base copy.
    """
    n = part.base.n
    mapping = [n + v for v in range(n)]
    for v, blocks in enumerate(part.blocks):
        if len(blocks) != 1:
            raise GraphError(f"vertex {v} does not have exactly one block")
        mapping.append(v)
    return mapping


def pcorona_to_s2_map(part: NeighborhoodPartition) -> list[int]:
    """``(v,1) -> v`` and ``(v,{u}) -> (v,vu)``; singleton blocks only."""
    G = part.base
    n = G.n
    slot = {}
    for k, (u, v) in enumerate(G.edges()):
        slot[u, v] = n + 2 * k
        slot[v, u] = n + 2 * k + 1
    mapping = list(range(n))
    for v, blocks in enumerate(part.blocks):
        for A in blocks:
            if len(A) != 1:
                raise GraphError(f"vertex {v} has a block that is not a singleton")
            mapping.append(slot[v, A[0]])
    return mapping


# ---------------------------------------------------------------------------
# JSON construction documents
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionSpec:
    base: Graph
    family: GraphFamily | None = None
    partition: NeighborhoodPartition | None = None


def _resolve(token: Any, names: Mapping[str, int], n: int) -> int:
    if isinstance(token, str) and token in names:
        return names[token]
    try:
        v = int(token)
    except (TypeError, ValueError):
        raise GraphError(f"unknown vertex {token!r}") from None
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range")
    return v


def load_construction_spec(doc: Mapping[str, Any] | str) -> ConstructionSpec:
    """Read ``{base, labels?, family?, partition?}``; see the README for the schema."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if "base" not in doc:
        raise GraphError("construction document needs a 'base' edge list")
    base = parse_edge_list(doc["base"])
    names: dict[str, int] = {}
    if "labels" in doc:
        labels = [Plain(str(x)) for x in doc["labels"]]
        base = base.with_labels(labels)
        names = {lab.render(): i for i, lab in enumerate(labels)}
    family = None
    if "family" in doc:
        members: list[Graph | None] = [None] * base.n
        for key, text in doc["family"].items():
            members[_resolve(key, names, base.n)] = parse_edge_list(text)
        missing = [v for v, F in enumerate(members) if F is None]
        if missing:
            raise GraphError(f"family lacks graphs for vertices {missing}")
        family = GraphFamily(base, tuple(members))  # type: ignore[arg-type]
    partition = None
    shortcut = doc.get("partition")
    if shortcut == "whole":
        partition = NeighborhoodPartition.whole(base)
    elif shortcut == "singletons":
        partition = NeighborhoodPartition.singletons(base)
    elif isinstance(shortcut, str):
        raise GraphError(f"unknown partition shortcut {shortcut!r}")
    elif shortcut is not None:
        blocks: list[list[list[int]]] = [[] for _ in range(base.n)]
        given = set()
        for key, parts in doc["partition"].items():
            v = _resolve(key, names, base.n)
            given.add(v)
            blocks[v] = [[_resolve(u, names, base.n) for u in part] for part in parts]
        for v in range(base.n):
            if v not in given and base.adj[v]:
                raise GraphError(f"partition missing for vertex {v}")
        partition = NeighborhoodPartition(base, blocks)
    return ConstructionSpec(base, family, partition)
