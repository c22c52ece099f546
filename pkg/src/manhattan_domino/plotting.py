"""Matplotlib figures for reports: a drawn tiling and a scaling plot.

Uses the Agg backend; figures are only ever written to files.
"""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .tiler import Orientation  # noqa: E402


def plot_tiling(sk, tiling=None, path=None, title=None):
    heights = sk.tolist()
    fig, ax = plt.subplots(figsize=(max(2.0, 0.4 * len(heights)), max(2.0, 0.4 * max(heights, default=1))))
    for col, h in enumerate(heights):
        for row in range(h):
            shade = "0.6" if (col + row) % 2 == 0 else "0.95"
            ax.add_patch(Rectangle((col, row), 1, 1, facecolor=shade, edgecolor="0.8", lw=0.5))
    if tiling is not None:
        for dom in tiling.dominoes:
            col, row = dom.anchor
            w, h = (2, 1) if dom.orient is Orientation.HORIZONTAL else (1, 2)
            ax.add_patch(Rectangle((col + 0.08, row + 0.08), w - 0.16, h - 0.16,
                                   fill=False, edgecolor="k", lw=1.2))
        for col, row in tiling.uncovered:
            ax.add_patch(Rectangle((col, row), 1, 1, facecolor="tab:red", alpha=0.8))
    ax.set_xlim(0, max(len(heights), 1))
    ax.set_ylim(0, max(max(heights, default=0), 1))
    ax.set_aspect("equal")
    ax.set_xticks(range(len(heights)))
    ax.tick_params(labelsize=7)
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    if path is not None:
        fig.savefig(path, dpi=150)
        plt.close(fig)
    return fig


def plot_scaling(rows, path=None):
    """Seconds and seconds/column against column count, log-log."""
    sizes = [r.size for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8, 3.2))
    ax1.loglog(sizes, [r.seconds for r in rows], "o-")
    ax1.set_xlabel("columns")
    ax1.set_ylabel("median seconds")
    ax2.semilogx(sizes, [r.seconds_per_column * 1e9 for r in rows], "s-")
    ax2.set_xlabel("columns")
    ax2.set_ylabel("ns per column")
    ax2.set_ylim(bottom=0)
    for ax in (ax1, ax2):
        ax.grid(True, which="both", lw=0.3)
    fig.tight_layout()
    if path is not None:
        fig.savefig(path, dpi=150)
        plt.close(fig)
    return fig
