"""Figures for the CLI report paths. Rendering only, never on the check path."""
from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import Iterable, Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .graph import Graph  # noqa: E402


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def gap_figure(observations: Iterable[tuple[int, int, int]], title: str, path: str | Path) -> Path:
    """Counts of gamma_a - gamma per order n, as sized markers."""
    counts = Counter((n, a - g) for n, g, a in observations)
    fig, ax = plt.subplots(figsize=(6, 4))
    if counts:
        xs, ys = zip(*counts)
        sizes = np.array([counts[k] for k in counts], dtype=float)
        ax.scatter(xs, ys, s=20 + 180 * np.sqrt(sizes / sizes.max()), alpha=0.6, color="tab:blue")
        for (x, y), c in counts.items():
            ax.annotate(str(c), (x, y), ha="center", va="center", fontsize=7)
        ax.set_yticks(sorted({y for y in ys}))
    ax.set_xlabel("order n of solved graph")
    ax.set_ylabel(r"$\gamma_a - \gamma$")
    ax.set_title(title)
    ax.grid(alpha=0.3)
    return _save(fig, path)


def circle_layout(n: int) -> np.ndarray:
    if n == 1:
        return np.zeros((1, 2))
    t = 2 * np.pi * np.arange(n) / n
    return np.column_stack([np.cos(t), np.sin(t)])


def graph_figure(G: Graph, path: str | Path, highlight: Optional[Iterable[int]] = None, title: str = "") -> Path:
    """Draw ``G`` on a circle with its vertex labels; ``highlight`` is filled red."""
    pos = circle_layout(G.n)
    marked = set(highlight or ())
    size = max(4.0, 0.35 * G.n)
    fig, ax = plt.subplots(figsize=(size, size))
    for u, v in G.edges():
        ax.plot(*pos[[u, v]].T, color="0.5", lw=1, zorder=1)
    colors = ["tab:red" if v in marked else "white" for v in range(G.n)]
    if G.n:
        ax.scatter(pos[:, 0], pos[:, 1], s=300, c=colors, edgecolors="black", zorder=2)
    for v in range(G.n):
        ax.annotate(G.label_text(v), 1.15 * pos[v], ha="center", va="center", fontsize=7)
    ax.set_xlim(-1.4, 1.4)
    ax.set_ylim(-1.4, 1.4)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return _save(fig, path)
