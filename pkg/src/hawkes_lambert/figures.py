"""Matplotlib rendering of benchmark results, for PNG/PDF quick looks.

The structural chart contract (self-contained SVG with one polyline per
algorithm) lives in bench.emit_plot; this module draws the same medians with
matplotlib for anyone who wants a raster or publication-style figure next to
the CSV.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import _PALETTE, median_times


def render_runtime_figure(records, path) -> None:
    """Save a log-log median-runtime chart for the given bench records."""
    med = median_times(records)
    if not med:
        raise ValueError("no records to plot")
    ns = sorted({n for _, n in med})
    if len(ns) < 2:
        raise ValueError(f"insufficient data: need >= 2 event-count grid points, got {len(ns)}")
    algorithms = list(dict.fromkeys(alg for alg, _ in med))

    fig, ax = plt.subplots(figsize=(7.0, 4.8))
    for algorithm in algorithms:
        xs = [n for n in ns if (algorithm, n) in med]
        ys = [med[(algorithm, n)] for n in xs]
        ax.loglog(xs, ys, marker="o", markersize=3.5,
                  color=_PALETTE.get(algorithm), label=algorithm)
    ax.set_xlabel("events per trajectory")
    ax.set_ylabel("median wall time (s)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
