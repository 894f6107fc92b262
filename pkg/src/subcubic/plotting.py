"""Figures for colorings and corpus runs.

Uses ``matplotlib.figure.Figure`` directly so nothing touches pyplot state
or needs a display.
"""

from __future__ import annotations

import math
from collections import Counter
from pathlib import Path
from typing import Iterable, Sequence

from matplotlib.figure import Figure

from .graph import Graph, bfs_distances

FILL = {0: "white", 1: "black", 2: "tab:red"}


def shell_layout(g: Graph, root: Iterable[int] = (0,)) -> dict[int, tuple[float, float]]:
    """Place vertices on concentric circles by distance from ``root``."""
    root = sorted(set(root))
    dist = bfs_distances(g, root)
    unreachable = max(dist) + 1 if dist else 0
    shells: dict[int, list[int]] = {}
    for v in range(g.n):
        shells.setdefault(dist[v] if dist[v] >= 0 else unreachable, []).append(v)
    pos = {}
    for r, verts in sorted(shells.items()):
        radius = r if root else r + 1
        if radius == 0 and len(verts) == 1:
            pos[verts[0]] = (0.0, 0.0)
            continue
        radius = max(radius, 0.5)
        for i, v in enumerate(verts):
            t = 2 * math.pi * i / len(verts) + 0.3 * r
            pos[v] = (radius * math.cos(t), radius * math.sin(t))
    return pos


def draw_coloring(
    g: Graph,
    coloring: Sequence[int],
    path: str | Path,
    root: Iterable[int] = (0,),
    title: str | None = None,
) -> Path:
    """Draw g with vertex fills from ``coloring`` (0 white, 1 black, 2 red)."""
    pos = shell_layout(g, root)
    fig = Figure(figsize=(5, 5))
    ax = fig.add_subplot()
    for u, v in g.edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color="0.45", lw=1.2, zorder=1)
    for v, (x, y) in pos.items():
        ax.scatter([x], [y], s=260, c=FILL.get(coloring[v], "tab:blue"), edgecolors="black", zorder=2)
        ax.annotate(
            str(v), (x, y), xytext=(7, 7), textcoords="offset points", fontsize=8, color="0.2"
        )
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    path = Path(path)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    return path


def draw_corpus_summary(records, path: str | Path) -> Path:
    """Stacked bars: graphs checked per vertex count, split by exact D."""
    tally: dict[int, Counter] = {}
    for rec in records:
        tally.setdefault(rec.n, Counter())[rec.D] += 1
    ns = sorted(tally)
    ds = sorted({d for c in tally.values() for d in c})
    fig = Figure(figsize=(6, 3.5))
    ax = fig.add_subplot()
    bottom = [0] * len(ns)
    for d in ds:
        heights = [tally[n][d] for n in ns]
        ax.bar([str(n) for n in ns], heights, bottom=bottom, label=f"D = {d}")
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xlabel("vertices")
    ax.set_ylabel("graphs")
    ax.legend(frameon=False)
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)
    path = Path(path)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    return path
