"""Accuracy and feature-frequency figures."""
from __future__ import annotations

import math
import os
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .harness import AccuracyReport
from .ranking import FeatureRanks

__all__ = ["plot_accuracy_grid", "plot_feature_frequencies"]


def plot_accuracy_grid(report: AccuracyReport, out_dir: str) -> list[str]:
    """One figure per kernel: accuracy against the lower threshold, one panel
    per feature kind, bars grouped by fold count and colored by theory."""
    os.makedirs(out_dir, exist_ok=True)
    cells = [c for c in report.cells if not math.isnan(c.mean_accuracy)]
    kernels = sorted({c.config.kernel for c in cells})
    kinds = sorted({c.config.kind for c in cells})
    theories = sorted({c.config.theory for c in cells})
    written = []
    for kernel in kernels:
        fig, axes = plt.subplots(
            len(kinds), 1, figsize=(10, 3.2 * len(kinds)), squeeze=False
        )
        for row, kind in enumerate(kinds):
            ax = axes[row][0]
            selected = [
                c for c in cells
                if c.config.kernel == kernel and c.config.kind == kind
            ]
            thetas = sorted({c.config.theta1 for c in selected})
            folds = sorted({c.config.folds for c in selected})
            by_key = defaultdict(dict)
            for c in selected:
                by_key[(c.config.theta1, c.config.folds)][c.config.theory] = c
            group_width = 0.8
            bar_width = group_width / max(1, len(folds) * len(theories))
            for gi, theta in enumerate(thetas):
                for fi, k in enumerate(folds):
                    for ti, theory in enumerate(theories):
                        cell = by_key.get((theta, k), {}).get(theory)
                        if cell is None:
                            continue
                        x = gi + (fi * len(theories) + ti) * bar_width - group_width / 2
                        ax.bar(
                            x, cell.mean_accuracy, bar_width,
                            yerr=cell.std_accuracy,
                            color=f"C{ti}", alpha=0.5 + 0.5 * (fi / max(1, len(folds) - 1)),
                            label=theory if gi == 0 and fi == 0 else None,
                        )
            ax.set_xticks(range(len(thetas)))
            ax.set_xticklabels([f"{t:g}" for t in thetas])
            ax.set_ylim(0, 1.05)
            ax.set_ylabel("accuracy")
            ax.set_title(f"{kernel} kernel, {kind} features (bars per fold count {folds})")
            ax.axhline(0.5, color="gray", lw=0.5, ls="--")
            ax.legend(loc="lower right", fontsize=8)
        axes[-1][0].set_xlabel("lower threshold")
        fig.tight_layout()
        path = os.path.join(out_dir, f"accuracy_{kernel}.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written


def plot_feature_frequencies(ranks: FeatureRanks, out_dir: str, tag: str = "") -> str:
    os.makedirs(out_dir, exist_ok=True)
    fig, ax = plt.subplots(figsize=(max(6, len(ranks.column_names) * 0.22), 3.5))
    x = np.arange(1, len(ranks.column_names) + 1)
    ax.bar(x, ranks.frequencies, color="C0")
    ax.set_xlabel("feature index")
    ax.set_ylabel(f"selection frequency over {ranks.n_runs} runs")
    ax.set_xticks(x[:: max(1, len(x) // 30)])
    ax.set_title(tag or "RFECV selection frequency")
    fig.tight_layout()
    suffix = f"_{tag}" if tag else ""
    path = os.path.join(out_dir, f"feature_frequency{suffix}.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
