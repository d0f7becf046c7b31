"""Matplotlib rendering for the figure subcommand's grid data.

Layout is inferred from the emitted long-format rows: two densely sampled
numeric axes become a heatmap, otherwise the sparser axis labels one curve
per level.  Rendering is an optional side output; the CSV stream is the
contractual artifact.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_RC = {
    "figure.figsize": (6.4, 4.2),
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 10,
    "legend.fontsize": 9,
}

_CURVE_LEVELS_MAX = 8


def _unique(values):
    return list(dict.fromkeys(values))


def _heatmap(ax, rows, xlabel, ylabel):
    xs = sorted(_unique(r[0] for r in rows))
    ys = sorted(_unique(r[1] for r in rows))
    index_x = {v: i for i, v in enumerate(xs)}
    index_y = {v: i for i, v in enumerate(ys)}
    grid = [[float("nan")] * len(xs) for _ in ys]
    for x, y, v in rows:
        grid[index_y[y]][index_x[x]] = v
    mesh = ax.pcolormesh(xs, ys, grid, shading="nearest", cmap="viridis", vmin=0.0)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    plt.colorbar(mesh, ax=ax, label="value")


def _curves(ax, rows, group_col, x_col):
    groups = _unique(r[group_col] for r in rows)
    for level in groups:
        xs = [r[x_col] for r in rows if r[group_col] == level]
        vs = [r[2] for r in rows if r[group_col] == level]
        ax.plot(xs, vs, label=str(level))
    ax.set_ylabel("value")


def render_figure(number: int, columns: list[str], rows: list[tuple], path: str) -> None:
    """Render one figure's rows to an image file."""
    if not rows:
        raise ValueError("no rows to render")
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        if len(columns) == 2:
            ax.plot([r[0] for r in rows], [r[1] for r in rows])
            ax.set_xlabel(columns[0])
            ax.set_ylabel(columns[1])
        else:
            levels_1 = _unique(r[0] for r in rows)
            levels_2 = _unique(r[1] for r in rows)
            numeric = all(isinstance(r[0], float) for r in rows) and all(
                isinstance(r[1], float) for r in rows
            )
            if numeric and len(levels_1) > _CURVE_LEVELS_MAX and len(levels_2) > _CURVE_LEVELS_MAX:
                _heatmap(ax, rows, columns[0], columns[1])
            elif len(levels_1) <= len(levels_2):
                _curves(ax, rows, group_col=0, x_col=1)
                ax.set_xlabel(columns[1])
                ax.legend(title=columns[0])
            else:
                _curves(ax, rows, group_col=1, x_col=0)
                ax.set_xlabel(columns[0])
                ax.legend(title=columns[1])
        ax.set_title(f"figure {number}")
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
