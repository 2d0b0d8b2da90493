"""Figure rendering for probe tables and search trajectories.

Reports stay data-first; these helpers render companion PNGs next to
the delimited output when the CLI is asked to plot.
"""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["plot_probe_rows", "plot_search_result"]


def plot_probe_rows(rows, bound, path, xlabel="parameter"):
    """Ratio-vs-parameter curve with the sharpness bound overlaid."""
    xs = [row["param"] for row in rows]
    ys = [row["ratio"] for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, ys, marker="." if len(xs) < 60 else None, lw=1.2, label="ratio")
    ax.axhline(bound, color="crimson", ls="--", lw=1.0, label=f"bound = {bound:g}")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("ratio")
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_search_result(result, path):
    """Best-so-far trajectory of a search run with its bound."""
    xs = [e for e, _ in result.trajectory]
    ys = [v for _, v in result.trajectory]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.step(xs, ys, where="post", lw=1.2, label="best value")
    ax.axhline(result.bound, color="crimson", ls="--", lw=1.0, label=f"bound = {result.bound:g}")
    ax.set_xlabel("objective evaluations")
    ax.set_ylabel("objective")
    ax.set_xscale("log")
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
