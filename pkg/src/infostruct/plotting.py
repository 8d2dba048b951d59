"""Bar charts of contingency tables for the ``stats`` report."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

RC = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def plot_table(table, result=None, path=None, width=6.0):
    """Grouped bar chart, one group per column and one bar per row."""
    counts = table.array()
    n_rows, n_cols = counts.shape
    x = np.arange(n_cols)
    bar = 0.8 / n_rows
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(width, width * 0.6))
        for i, label in enumerate(table.row_labels):
            ax.bar(x + (i - (n_rows - 1) / 2) * bar, counts[i], bar, label=label)
        ax.set_xticks(x)
        ax.set_xticklabels(table.col_labels)
        ax.set_ylabel("count")
        title = table.name
        if result is not None:
            title += f"  chi2={result.statistic:.3f}, df={result.degrees_of_freedom}, {result.band}"
        ax.set_title(title)
        ax.legend(frameon=False)
        fig.tight_layout()
        if path is not None:
            fig.savefig(path)
            plt.close(fig)
    return fig


def render_tables(tables, results, outdir, fmt="png"):
    os.makedirs(outdir, exist_ok=True)
    paths = []
    for name, table in tables.items():
        path = os.path.join(outdir, f"{name}.{fmt}")
        plot_table(table, results.get(name), path)
        paths.append(path)
    return paths
