"""Deterministic SVG drawings of complexes of dimension at most 2."""

from __future__ import annotations

from typing import Hashable, Mapping
from xml.sax.saxutils import escape

import networkx as nx

from .common import AntipodalError
from .complex import Complex
from .labels import Labelling, complementary_edges


class DimensionTooHigh(AntipodalError):
    pass


def spring_layout(T: Complex, seed: int = 0) -> dict[Hashable, tuple[float, float]]:
    G = nx.Graph()
    G.add_nodes_from(T.names)
    G.add_edges_from(T.named(e) for e in T.faces.get(1, ()))
    pos = nx.spring_layout(G, seed=seed)
    return {v: (float(pos[v][0]), float(pos[v][1])) for v in T.names}


def render_svg(
    T: Complex,
    labelling: Labelling | None = None,
    layout: Mapping[Hashable, tuple[float, float]] | None = None,
    size: int = 480,
    show_names: bool = False,
) -> str:
    if T.dim > 2:
        raise DimensionTooHigh(f"cannot draw a complex of dimension {T.dim}")
    if layout is None or any(v not in layout for v in T.names):
        layout = spring_layout(T)
    xs = [layout[v][0] for v in T.names]
    ys = [layout[v][1] for v in T.names]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    margin = 36
    scale = (size - 2 * margin) / span

    def at(v: Hashable) -> tuple[float, float]:
        x, y = layout[v]
        # y axis points up in layouts, down in SVG
        return margin + (x - min(xs)) * scale, size - margin - (y - min(ys)) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for f in T.faces.get(2, ()):
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in (at(v) for v in T.named(f)))
        out.append(f'<polygon class="facet" points="{pts}" fill="#e8eef7" stroke="none"/>')
    hot = set()
    if labelling is not None:
        hot = {frozenset(e) for e in complementary_edges(T, labelling)}
    for e in T.faces.get(1, ()):
        a, b = T.named(e)
        (x1, y1), (x2, y2) = at(a), at(b)
        if frozenset((a, b)) in hot:
            style = 'class="complementary" stroke="#d62728" stroke-width="3"'
        else:
            style = 'class="edge" stroke="#333" stroke-width="1"'
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" {style}/>')
    for v in T.names:
        x, y = at(v)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="#1f77b4"/>')
        text = []
        if show_names or labelling is None:
            text.append(str(v))
        if labelling is not None:
            text.append(f"{labelling[v]:d}")
        out.append(
            f'<text x="{x + 6:.2f}" y="{y - 6:.2f}" font-family="sans-serif" font-size="13">'
            f"{escape(' '.join(text))}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
