"""Figures for census tables and cycle decompositions, written to files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FIGSIZE = (6.0, 3.7)


def _finish(fig, ax, path):
    ax.grid(True, which="major", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_census(reports, path):
    """Semi-log plot of the total and full-length cycle counts against k."""
    ks = [r.k for r in reports]
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.semilogy(ks, [r.equitable_count for r in reports], "k:", label="C(k, k/2)")
    ax.semilogy(ks, [r.a_k for r in reports], "o-", label="a_k (all cycles)")
    ax.semilogy(ks, [r.b_k for r in reports], "s--", mfc="none", label="b_k (length k)")
    ax.set_xlabel("k")
    ax.set_ylabel("count")
    ax.set_xticks(ks)
    ax.legend(frameon=False)
    _finish(fig, ax, path)


def plot_cycle_histogram(decomposition, path):
    hist = decomposition.length_histogram
    lengths = sorted(hist)
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.bar([str(x) for x in lengths], [hist[x] for x in lengths], color="0.35")
    if max(hist.values()) / min(hist.values()) > 100:
        ax.set_yscale("log")
    spec = decomposition.graph.spec
    ax.set_title(f"{spec.class_name}, k={spec.k}: {decomposition.total_cycles} cycles", fontsize=10)
    ax.set_xlabel("cycle length")
    ax.set_ylabel("cycles")
    _finish(fig, ax, path)
