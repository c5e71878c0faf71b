"""Figure rendering for point configurations.

Renders matplotlib figures to files next to the textual outputs; never
opens a window (Agg backend), so it is safe in batch runs.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .geometry import Point, PointList


def _axes_scatter(ax, points: PointList, color: str = "tab:blue") -> None:
    xs = [float(p.x) for p in points]
    ys = [float(p.y) for p in points]
    ax.scatter(xs, ys, color=color, zorder=3)
    for idx, (x, y) in enumerate(zip(xs, ys), start=1):
        ax.annotate(str(idx), (x, y), textcoords="offset points", xytext=(4, 4))
    ax.set_aspect("equal", adjustable="datalim")
    ax.grid(True, linestyle=":", linewidth=0.5)


def _hull_order(points: PointList) -> list[Point]:
    cx = sum(p.x for p in points) / len(points)
    cy = sum(p.y for p in points) / len(points)
    import math

    return sorted(
        points, key=lambda p: math.atan2(float(p.y - cy), float(p.x - cx))
    )


def render_points(
    points: PointList,
    path,
    highlight: Optional[PointList] = None,
    title: Optional[str] = None,
) -> None:
    """Scatter plot of a configuration, optionally outlining a subset."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    _axes_scatter(ax, points)
    if highlight:
        ring = _hull_order(highlight)
        xs = [float(p.x) for p in ring] + [float(ring[0].x)]
        ys = [float(p.y) for p in ring] + [float(ring[0].y)]
        ax.plot(xs, ys, color="tab:red", linewidth=1.5, zorder=2)
        ax.fill(xs, ys, color="tab:red", alpha=0.15, zorder=1)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_before_after(
    before: PointList, after: PointList, path, title: Optional[str] = None
) -> None:
    """Side-by-side plot of a configuration and its canonical form."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 5.5))
    _axes_scatter(ax1, before)
    ax1.set_title("input")
    _axes_scatter(ax2, after, color="tab:green")
    ax2.set_title("canonical")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
