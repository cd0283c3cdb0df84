"""Figures for the CLI report path: partition diagrams and interval charts.
Rendered with the Agg backend straight to files."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle as Box  # noqa: E402


def _draw_partition(ax, p, title=None):
    m, n = p.m, p.n
    for r in p.rectangles:
        ax.add_patch(Box((r.left - 0.4, r.top - 0.4), r.width - 0.2, r.height - 0.2,
                         fill=False, lw=1.5, ec="tab:blue"))
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            filled = (i, j) in p.S
            ax.plot(j, i, "o", ms=6, mfc="black" if filled else "white", mec="black", mew=0.8)
    ax.set_xlim(0.4, n + 0.6)
    ax.set_ylim(m + 0.6, 0.4)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    if title:
        ax.set_title(title, fontsize=8)


def plot_partition_classes(orbits, path, degrees=None) -> Path:
    """One diagram per symmetry class: boxes are the rectangles of N, filled
    dots the variables of S.  Titles give class size (and degree if known)."""
    k = len(orbits)
    cols = min(5, k) or 1
    rows = math.ceil(k / cols) or 1
    fig, axes = plt.subplots(rows, cols, figsize=(2.2 * cols, 2.2 * rows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for idx, orbit in enumerate(orbits):
        ax = axes.flat[idx]
        ax.axis("on")
        title = f"{len(orbit)}"
        if degrees is not None:
            title += f"  deg {degrees[idx]}"
        _draw_partition(ax, orbit[0], title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_sequences(seqs, path) -> Path:
    """Horizontal bars for the intervals of each prime sequence, phantom columns
    shaded."""
    seqs = list(seqs)
    if not seqs:
        raise ValueError("nothing to plot")
    n = seqs[0].n
    fig, ax = plt.subplots(figsize=(max(4, 0.5 * (n + 2)), 0.45 * len(seqs) + 1))
    for row, g in enumerate(seqs):
        for k, iv in enumerate(g.intervals):
            y = row + (0.15 if k % 2 else -0.15)
            ax.plot([iv.a, iv.b], [y, y], lw=4, solid_capstyle="butt",
                    color="tab:orange" if k % 2 else "tab:blue")
    for c in (0, n + 1):
        ax.axvspan(c - 0.5, c + 0.5, color="0.9", zorder=0)
    ax.set_yticks(range(len(seqs)))
    ax.set_yticklabels([str(g) for g in seqs], fontsize=7)
    ax.set_xticks(range(0, n + 2))
    ax.set_xlim(-0.6, n + 1.6)
    ax.invert_yaxis()
    ax.set_xlabel("column")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
