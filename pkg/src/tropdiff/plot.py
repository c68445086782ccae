"""Planar pictures of boolean series and their Newton polyhedra (m = 2)."""

from __future__ import annotations

import io
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .lattice import DimensionError, GeneratorSet, gs_enumerate_below  # noqa: E402
from .newton import staircase_vertices  # noqa: E402

TERM_COLORS = ("tab:blue", "tab:orange", "tab:green", "tab:purple", "tab:brown", "tab:olive")


def _window(sets: Sequence[GeneratorSet]) -> tuple[int, int]:
    xs = [g[0] for s in sets for g in s.generators()] or [0]
    ys = [g[1] for s in sets for g in s.generators()] or [0]
    return max(xs) + 2, max(ys) + 2


def render_svg(total: GeneratorSet, layers: Optional[Sequence[GeneratorSet]] = None,
               title: str = "") -> str:
    """SVG text showing ``total`` with its Newton boundary and vertices.

    ``layers`` (for instance the evaluated terms of a differential polynomial)
    are drawn underneath as separately coloured point clouds.
    """
    if total.dim != 2:
        raise DimensionError(f"plots need m=2, got m={total.dim}")
    layers = list(layers or [])
    W, H = _window([total, *layers])

    plt.rcParams["svg.hashsalt"] = "tropdiff"
    fig, ax = plt.subplots(figsize=(5, 5))
    for k, layer in enumerate(layers):
        pts = sorted(gs_enumerate_below(layer, (W, H)))
        if pts:
            ax.scatter([p[0] for p in pts], [p[1] for p in pts], s=70, marker="s",
                       facecolors="none", edgecolors=TERM_COLORS[k % len(TERM_COLORS)],
                       label=f"term {k + 1}")

    for g in sorted(total.cones):
        ax.add_patch(Rectangle(g, W + 1 - g[0], H + 1 - g[1], color="0.85", zorder=0))
    pts = sorted(gs_enumerate_below(total, (W, H)))
    if pts:
        ax.scatter([p[0] for p in pts], [p[1] for p in pts], s=12, color="0.3", zorder=2)

    verts = staircase_vertices(total.generators())
    if verts:
        xs = [verts[0][0]] + [v[0] for v in verts] + [W + 1]
        ys = [H + 1] + [v[1] for v in verts] + [verts[-1][1]]
        ax.plot(xs, ys, color="black", linewidth=1.2, zorder=3)
        ax.scatter([v[0] for v in verts], [v[1] for v in verts], s=60, color="tab:red",
                   zorder=4, label="vertices")

    ax.set_xlim(-0.5, W + 0.5)
    ax.set_ylim(-0.5, H + 0.5)
    ax.set_xticks(range(W + 1))
    ax.set_yticks(range(H + 1))
    ax.set_aspect("equal")
    ax.grid(True, linewidth=0.3)
    ax.set_xlabel("exponent of t1")
    ax.set_ylabel("exponent of t2")
    if title:
        ax.set_title(title)
    if layers or verts:
        ax.legend(loc="upper right", fontsize="small")

    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()
