"""Report rendering: tab-separated sequence tables plus matplotlib figures.

Figures are written straight to files (Agg backend), never shown: a
log-scale growth chart per report, a gallery of drawn partitions, and
single-partition drawings.  Vertex 0 is drawn at the left end of the
horizontal top edge with indices increasing counterclockwise, matching the
package convention.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .enumeration import enumerate_proper
from .families import SequenceSpec, count_family
from .model import ColoredPolygon, Partition

# tab10 minus the grays, enough for the color counts we draw
_VERTEX_COLORS = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22",
]


def write_sequence_tsv(path: Path | str, values: Sequence[tuple[int, int]]) -> None:
    """One "<index><TAB><value>" line per term."""
    path = Path(path)
    with path.open("w") as fh:
        for idx, val in values:
            fh.write(f"{idx}\t{val}\n")


def _vertex_positions(n: int) -> list[tuple[float, float]]:
    """Unit-circle layout with the top edge (0, n-1) horizontal on top."""
    base = math.pi / 2 + math.pi / n
    return [
        (math.cos(base + 2 * math.pi * i / n), math.sin(base + 2 * math.pi * i / n))
        for i in range(n)
    ]


def draw_partition(
    ax, p: Partition, poly: ColoredPolygon | None = None, label_vertices: bool = True
) -> None:
    """Draw one partition (boundary, chords, colored vertices) on an axes."""
    n = p.num_vertices
    pos = _vertex_positions(n)
    ring = pos + [pos[0]]
    ax.plot([q[0] for q in ring], [q[1] for q in ring], color="black", lw=1.2, zorder=1)
    for a, b in p.chords:
        ax.plot(
            [pos[a][0], pos[b][0]], [pos[a][1], pos[b][1]],
            color="steelblue", lw=1.0, zorder=1,
        )
    for i, (x, y) in enumerate(pos):
        col = "black"
        if poly is not None:
            col = _VERTEX_COLORS[(poly.colors[i] - 1) % len(_VERTEX_COLORS)]
        ax.scatter([x], [y], s=36, color=col, zorder=2)
        if label_vertices and poly is not None:
            ax.annotate(
            str(poly.colors[i]), (1.15 * x, 1.15 * y),
                ha="center", va="center", fontsize=8,
            )
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")


def save_partition_figure(
    path: Path | str, p: Partition, poly: ColoredPolygon | None = None
) -> None:
    fig, ax = plt.subplots(figsize=(3.2, 3.2))
    draw_partition(ax, p, poly)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def save_gallery(
    path: Path | str,
    items: Sequence[Partition],
    poly: ColoredPolygon | None = None,
    ncols: int = 4,
    title: str | None = None,
) -> None:
    """A grid of partition drawings in one figure."""
    count = max(len(items), 1)
    ncols = min(ncols, count)
    nrows = (count + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(2.6 * ncols, 2.6 * nrows))
    flat = [axes] if count == 1 and nrows * ncols == 1 else list(getattr(axes, "flat", [axes]))
    for ax in flat:
        ax.axis("off")
    for ax, p in zip(flat, items):
        draw_partition(ax, p, poly, label_vertices=False)
    if title:
        fig.suptitle(title)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def save_growth_figure(
    path: Path | str, series: dict[str, Sequence[tuple[int, int]]]
) -> None:
    """Log-scale growth chart of one or more count families."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for label, values in series.items():
        xs = [idx for idx, val in values if val > 0]
        ys = [float(val) for _, val in values if val > 0]
        if xs:
            ax.semilogy(xs, ys, marker="o", ms=3.5, lw=1.0, label=label)
    ax.set_xlabel("index")
    ax.set_ylabel("count (log scale)")
    ax.legend(fontsize=8)
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def save_flip_graph_figure(path: Path | str, graph, labels: bool = False) -> None:
    """Circular-layout drawing of a flip graph."""
    n = max(graph.num_nodes, 1)
    pos = [
        (math.cos(2 * math.pi * i / n + math.pi / 2), math.sin(2 * math.pi * i / n + math.pi / 2))
        for i in range(n)
    ]
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    for i, j in graph.edges():
        ax.plot([pos[i][0], pos[j][0]], [pos[i][1], pos[j][1]], color="gray", lw=1.0, zorder=1)
    ax.scatter([q[0] for q in pos[: graph.num_nodes]], [q[1] for q in pos[: graph.num_nodes]],
               s=60, color="steelblue", zorder=2)
    if labels:
        from .flips import node_label

        for i, payload in enumerate(graph.payloads):
            ax.annotate(node_label(payload), (1.12 * pos[i][0], 1.12 * pos[i][1]),
                        ha="center", va="center", fontsize=7)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def render_report(
    outdir: Path | str,
    specs: Iterable[SequenceSpec],
    max_n: int = 10,
    gallery_vertices: int = 7,
) -> list[Path]:
    """Write per-family TSV tables, a combined growth figure, and a gallery of
    the proper triangulations of a small 2-colored polygon.  Returns the
    paths written."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    series: dict[str, list[tuple[int, int]]] = {}
    for spec in specs:
        start = 1 if spec.family == "d_blocks" else 0
        values = [(n, count_family(spec, n, "formula")) for n in range(start, max_n + 1)]
        safe = spec.label().replace("(", "_").replace(")", "").replace("=", "").replace(",", "_")
        tsv = outdir / f"{safe}.tsv"
        write_sequence_tsv(tsv, values)
        written.append(tsv)
        series[spec.label()] = values
    growth = outdir / "growth.png"
    save_growth_figure(growth, series)
    written.append(growth)

    from .model import Cyclic, make_coloring

    poly = make_coloring(Cyclic(2), gallery_vertices)
    proper = list(enumerate_proper(poly, 3))
    gallery = outdir / f"proper_triangulations_{gallery_vertices}gon.png"
    save_gallery(gallery, proper, poly, title=f"proper triangulations, {gallery_vertices}-gon, 2 colors")
    written.append(gallery)
    return written
