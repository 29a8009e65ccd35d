"""Invariant-comparison charts for pair reports. Diagrams themselves are never drawn."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .lab.recipes import ConcordancePairReport, Invariants  # noqa: E402


def _lk_grid(inv: Invariants, m: int) -> list[list[int]]:
    grid = [[0] * m for _ in range(m)]
    for (i, j), v in inv.lk:
        grid[i - 1][j - 1] = grid[j - 1][i - 1] = v
    return grid


def _m(inv: Invariants) -> int:
    return max((j for (_, j), _ in inv.lk), default=1)


def plot_report(report: ConcordancePairReport, path: str | Path) -> Path:
    """Linking matrices of both endpoints and their first non-vanishing mu-bar values, side by side."""
    path = Path(path)
    fig, axes = plt.subplots(1, 3, figsize=(11, 3.6), constrained_layout=True)
    sides = (("before", report.before_inv), ("after", report.after_inv))
    bound = max([1] + [abs(v) for _, inv in sides for _, v in inv.lk])
    for ax, (label, inv) in zip(axes, sides):
        m = _m(inv)
        grid = _lk_grid(inv, m)
        ax.imshow(grid, cmap="coolwarm", vmin=-bound, vmax=bound)
        for i in range(m):
            for j in range(m):
                if i != j:
                    ax.text(j, i, str(grid[i][j]), ha="center", va="center")
        ticks = list(range(m))
        ax.set_xticks(ticks, [str(t + 1) for t in ticks])
        ax.set_yticks(ticks, [str(t + 1) for t in ticks])
        ax.set_title(f"{label}: linking numbers")

    ax = axes[2]
    keys = sorted({I for _, inv in sides for I, _ in inv.first}, key=lambda s: (len(s), s))
    width = 0.4
    for k, (label, inv) in enumerate(sides):
        vals = dict(inv.first)
        xs = [x + (k - 0.5) * width for x in range(len(keys))]
        ax.bar(xs, [vals.get(I, 0) for I in keys], width, label=label)
    ax.set_xticks(range(len(keys)), keys)
    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_title("first non-vanishing mu-bar" if keys else "no non-vanishing mu-bar")
    ax.margins(y=0.15)
    ax.legend(loc="upper center", bbox_to_anchor=(0.5, -0.1), ncol=2, frameon=False)
    fig.suptitle(f"{report.name}  profile {report.profile_text()}  verdict {'pass' if report.passed else 'fail'}")
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return path
