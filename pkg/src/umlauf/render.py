"""ASCII and SVG pictures of lattice subgraphs with per-vertex labels."""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from xml.sax.saxutils import escape

from umlauf import graph_core
from umlauf.domain import (
    DEFAULT_SEMANTICS,
    LatticeSubgraph,
    PointClass,
    SphereSemantics,
    boundary_set,
    classify_point,
    curvature_K,
)
from umlauf.lattice import hex_norm

__all__ = ["RenderSpec", "vertex_labels", "render", "render_ascii", "render_svg"]

LABEL_MODES = ("none", "curvature", "dimension", "class")
_CLASS_CHAR = {PointClass.INTERIOR: "I", PointClass.BOUNDARY: "B", PointClass.OTHER: "O"}


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    labels: str = "curvature"
    scale: float = 40.0
    semantics: SphereSemantics = DEFAULT_SEMANTICS

    def __post_init__(self):
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.labels not in LABEL_MODES:
            raise ValueError(f"unknown label mode {self.labels!r}")
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def vertex_labels(G: LatticeSubgraph, mode: str, sem: SphereSemantics = DEFAULT_SEMANTICS) -> dict:
    """Label text per vertex; vertices without a label are omitted."""
    if mode == "none":
        return {}
    if mode == "curvature":
        return {p: str(curvature_K(G, p, sem)) for p in boundary_set(G)}
    if mode == "dimension":
        out = {}
        for p in G.vertices:
            d = graph_core.point_dimension(G.graph, p)
            out[p] = "?" if d is None else str(d)
        return out
    if mode == "class":
        return {p: _CLASS_CHAR[classify_point(G, p)] for p in G.vertices}
    raise ValueError(f"unknown label mode {mode!r}")


def render(G: LatticeSubgraph, spec: RenderSpec) -> str:
    if spec.format == "svg":
        return render_svg(G, spec)
    return render_ascii(G, spec)


def render_ascii(G: LatticeSubgraph, spec: RenderSpec = RenderSpec()) -> str:
    """One text row per lattice row l (top = largest l). A vertex occupies a
    3-character cell at column 2*(2k + l); unlabelled vertices print ``.``."""
    if not G.vertices:
        return ""
    labels = vertex_labels(G, spec.labels, spec.semantics)
    base = min(2 * k + l for k, l in G.vertices)
    ls = [p[1] for p in G.vertices]
    rows = []
    for l in range(max(ls), min(ls) - 1, -1):
        row = sorted(p for p in G.vertices if p[1] == l)
        line = ""
        for p in row:
            col, text = 2 * (2 * p[0] + l - base), labels.get(p, ".")
            line = line.ljust(col) + text.center(3)
        rows.append(line.rstrip())
    return "\n".join(rows) + "\n"


def render_svg(G: LatticeSubgraph, spec: RenderSpec = RenderSpec(format="svg")) -> str:
    """SVG 1.1 document; vertex (k, l) sits at (k + l/2, l*sqrt(3)/2) * scale,
    y pointing up. On a torus, coordinates are the canonical representatives
    and edges that wrap around are replaced by ``wrap`` marker circles at
    both endpoints."""
    s = spec.scale
    bg = G.background
    labels = vertex_labels(G, spec.labels, spec.semantics)

    def xy(p):
        return (p[0] + p[1] / 2) * s, -(p[1] * sqrt(3) / 2) * s

    pts = {p: xy(p) for p in G.vertices}
    if pts:
        xs = [x for x, _ in pts.values()]
        ys = [y for _, y in pts.values()]
        pad = s
        x0, y0 = min(xs) - pad, min(ys) - pad
        w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    else:
        x0 = y0 = 0.0
        w = h = s
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{x0:.2f} {y0:.2f} {w:.2f} {h:.2f}" width="{w:.0f}" height="{h:.0f}">',
        '<g stroke="#555" stroke-width="1.5">',
    ]
    for a, b in sorted(G.edges):
        (xa, ya), (xb, yb) = pts[a], pts[b]
        if bg.is_torus and hex_norm(b[0] - a[0], b[1] - a[1]) != 1:
            for x, y in ((xa, ya), (xb, yb)):
                out.append(f'<circle class="wrap" cx="{x:.2f}" cy="{y:.2f}" r="{s * 0.12:.2f}" '
                           f'fill="none" stroke="#c33"/>')
            continue
        out.append(f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" y2="{yb:.2f}"/>')
    out.append("</g>")
    out.append('<g fill="#222">')
    for p in G.sorted_vertices():
        x, y = pts[p]
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{s * 0.08:.2f}"/>')
    out.append("</g>")
    out.append(f'<g font-family="sans-serif" font-size="{s * 0.35:.1f}" fill="#1a4f9c">')
    for p in G.sorted_vertices():
        if p in labels:
            x, y = pts[p]
            out.append(f'<text x="{x + s * 0.12:.2f}" y="{y - s * 0.12:.2f}" '
                       f'data-k="{p[0]}" data-l="{p[1]}">{escape(labels[p])}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
