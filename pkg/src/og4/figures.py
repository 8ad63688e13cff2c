"""Figures for CLI reports.  matplotlib is imported on first use."""

from __future__ import annotations

import math
from pathlib import Path


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def draw_layered_digraph(out_lists, layer_of, path: Path, title: str = "") -> Path:
    """Vertices on concentric circles by layer, arcs drawn as arrows."""
    plt = _pyplot()
    layers = {}
    for v, L in enumerate(layer_of):
        layers.setdefault(L, []).append(v)
    r = len(layers)
    pos = {}
    for L, members in layers.items():
        base = 2 * math.pi * L / r
        spread = 2 * math.pi / r * 0.6
        for j, v in enumerate(members):
            ang = base + spread * (j / max(1, len(members) - 1) - 0.5)
            pos[v] = (math.cos(ang), math.sin(ang))
    fig, ax = plt.subplots(figsize=(6, 6))
    for u, nbrs in enumerate(out_lists):
        for w in nbrs:
            (x0, y0), (x1, y1) = pos[u], pos[w]
            ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                        arrowprops={"arrowstyle": "->", "lw": 0.5, "color": "0.4"})
    xs, ys = zip(*(pos[v] for v in range(len(out_lists))))
    ax.scatter(xs, ys, s=20, zorder=3)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def draw_quotient_cycle(r: int, oriented: bool, path: Path, title: str = "") -> Path:
    """The normal quotient C_r, with arrows when oriented."""
    plt = _pyplot()
    pts = [(math.cos(2 * math.pi * i / r), math.sin(2 * math.pi * i / r)) for i in range(r)]
    fig, ax = plt.subplots(figsize=(4, 4))
    for i in range(r):
        (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % r]
        style = "->" if oriented else "-"
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0), arrowprops={"arrowstyle": style, "lw": 1.5})
    ax.scatter(*zip(*pts), s=60, zorder=3)
    for i, (x, y) in enumerate(pts):
        ax.text(1.15 * x, 1.15 * y, str(i + 1), ha="center", va="center")
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def draw_block_sizes(block_sizes, path: Path, title: str = "") -> Path:
    """Bar chart of N-orbit sizes on vertices."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar(range(1, len(block_sizes) + 1), block_sizes)
    ax.set_xlabel("block")
    ax.set_ylabel("size")
    ax.set_title(title)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path
