"""Closed-form values and bounds for gamma and gamma_a.

Every prediction carries a ``source`` tag equal to the theorem id accepted by
``accudom verify``, so a prediction can be traced to the check exercising it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from .corona import GraphFamily, NeighborhoodPartition
from .graph import Graph, GraphError, is_connected, is_cycle, is_tree, universal_vertices


@dataclass(frozen=True)
class Prediction:
    kind: str
    lower: int
    upper: int
    source: str
    value: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == "exact":
            if not (self.value == self.lower == self.upper):
                raise ValueError("exact prediction needs value == lower == upper")
        elif self.kind == "bounds":
            if self.value is not None:
                raise ValueError("bounds prediction carries no value")
        else:
            raise ValueError(f"unknown prediction kind {self.kind!r}")
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")

    @classmethod
    def exact(cls, value: int, source: str) -> "Prediction":
        return cls("exact", value, value, source, value)

    @classmethod
    def bounds(cls, lower: int, upper: int, source: str) -> "Prediction":
        return cls("bounds", lower, upper, source)

    def admits(self, x: int) -> bool:
        return self.lower <= x <= self.upper

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.value is not None:
            out["value"] = self.value
        out.update(lower=self.lower, upper=self.upper, source=self.source)
        return out


def _ceil3(n: int) -> int:
    return -(-n // 3)


def _need(ok: bool, message: str) -> None:
    if not ok:
        raise GraphError(message)


def gamma_closed(family: str, *params: int) -> int:
    if family in ("path", "cycle"):
        _need(len(params) == 1, f"{family} takes one parameter")
        (n,) = params
        _need(n >= (1 if family == "path" else 3), f"{family} order out of range: {n}")
        return _ceil3(n)
    if family == "complete":
        _need(len(params) == 1 and params[0] >= 1, "complete graph needs n >= 1")
        return 1
    if family == "complete_bipartite":
        _need(len(params) == 2 and min(params) >= 1, "complete bipartite needs m, n >= 1")
        return 1 if min(params) == 1 else 2
    raise GraphError(f"unknown family {family!r}")


def gamma_a_closed(family: str, *params: int) -> int:
    if family == "complete":
        _need(len(params) == 1 and params[0] >= 1, "complete graph needs n >= 1")
        return params[0] // 2 + 1
    if family == "complete_bipartite_equal":
        _need(len(params) == 1 and params[0] >= 1, "K_{n,n} needs n >= 1")
        return params[0] + 1
    if family == "complete_bipartite_unequal":
        _need(len(params) == 2, "K_{m,n} takes two parameters")
        m, n = params
        _need(n > m >= 1, f"unequal K_{{m,n}} needs n > m >= 1, got m={m}, n={n}")
        return m
    if family == "cycle":
        _need(len(params) == 1 and params[0] >= 3, "cycle needs n >= 3")
        n = params[0]
        return n // 3 - 3 // n + 2
    if family == "path":
        _need(len(params) == 1 and params[0] >= 1, "path needs n >= 1")
        n = params[0]
        return _ceil3(n) + (1 if n in (2, 4) else 0)
    raise GraphError(f"unknown family {family!r}")


def f_corona_predict(
    fam: GraphFamily, gamma_of_members: Union[Mapping[int, int], Sequence[int]]
) -> tuple[Prediction, Prediction]:
    """(gamma, gamma_a) predictions for the family corona of ``fam``.

    gamma_a is exact only when some member needs two or more dominators;
    otherwise only bounds are known.
    """
    n = fam.base.n
    if n == 0:
        raise GraphError("family corona needs a nonempty base graph")
    gammas = [gamma_of_members[v] for v in range(n)]
    for v, (F, g) in enumerate(zip(fam.members, gammas)):
        if not 1 <= g <= F.n or (g == 1) != bool(len(universal_vertices(F))):
            raise GraphError(f"gamma value {g} inconsistent with member graph of vertex {v}")
    g_pred = Prediction.exact(n, "thm3.1")
    if any(g > 1 for g in gammas):
        return g_pred, Prediction.exact(n, "thm3.1")
    smallest = min(F.n for F in fam.members)
    return g_pred, Prediction.bounds(n + 1, n + smallest, "thm3.1")


def p_corona_predict(part: NeighborhoodPartition, base_kind: str = "general") -> tuple[Prediction, Prediction]:
    """(gamma, gamma_a) predictions for the partition corona of ``part``.

    For ``general`` bases the upper bound needs every partition nonempty; with
    an isolated base vertex only the lower bound is claimed and the upper end
    is the trivial vertex count.
    """
    G = part.base
    n = G.n
    sizes = part.sizes()
    g_pred = Prediction.exact(n, "thm3.3")
    if base_kind == "tree":
        if not is_tree(G):
            raise GraphError("base_kind 'tree' needs a tree base")
        value = n + 1 if all(s == 1 for s in sizes) else n
        return g_pred, Prediction.exact(value, "cor3.5")
    if base_kind == "cycle":
        if not is_cycle(G):
            raise GraphError("base_kind 'cycle' needs a cycle base")
        if all(s == 1 for s in sizes):
            value = n + 1
        elif all(s == 2 for s in sizes):
            value = n + 2
        else:
            value = n
        return g_pred, Prediction.exact(value, "cor3.6")
    if base_kind != "general":
        raise GraphError(f"unknown base kind {base_kind!r}")
    if n == 0 or min(sizes) == 0:
        order = n + sum(sizes)
        return g_pred, Prediction.bounds(n, order, "thm3.3:lower-only")
    smallest_block = min(len(A) for blocks in part.blocks for A in blocks)
    return g_pred, Prediction.bounds(n, n + min(min(sizes), 1 + smallest_block), "thm3.3")


def s2_predict(G: Graph) -> tuple[int, int]:
    """(gamma, gamma_a) of the 2-subdivision of a connected graph."""
    if not is_connected(G):
        raise GraphError("2-subdivision prediction needs a connected graph")
    n = G.n
    if is_cycle(G):
        return n, n + 2
    if n == 2:
        return n, n + 1
    return n, n
