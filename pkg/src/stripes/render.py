"""Diagram emitters for leaf-space models: DOT and a small static SVG."""

from __future__ import annotations

from .leafspace import ArcEnd, LeafSpaceModel


def leafspace_dot(model: LeafSpaceModel) -> str:
    """DOT digraph: arcs as oriented edges between their end nodes, leaf
    points as nodes, attachment order as edge labels."""
    lines = ["digraph leafspace {"]
    for arc in sorted(model.arcs):
        lines.append(f'  "{arc}.0" [shape=point];')
        lines.append(f'  "{arc}.1" [shape=point];')
    for point in model.points:
        lines.append(f'  "{point.label()}" [shape=circle];')
    for arc in sorted(model.arcs):
        lines.append(f'  "{arc}.0" -> "{arc}.1" [label="{arc}"];')
    for point in model.points:
        for attachment in model.attachments[point]:
            end = attachment.end
            lines.append(
                f'  "{end.label()}" -> "{point.label()}" [label="{attachment.index}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def leafspace_svg(model: LeafSpaceModel) -> str:
    """Arcs as horizontal segments, attached points as stacked dots at the
    ends.  Presentational only; no layout guarantees."""
    row_height = 70
    left, right = 120, 680
    width = 800
    height = row_height * len(model.arcs) + 40

    rows = {arc: 40 + row_height * i for i, arc in enumerate(sorted(model.arcs))}
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
    ]
    for arc, y in rows.items():
        parts.append(
            f'<line x1="{left}" y1="{y}" x2="{right}" y2="{y}" stroke="black"/>'
        )
        parts.append(f'<text x="{(left + right) // 2}" y="{y - 6}">{arc}</text>')
        for side, x in ((0, left), (1, right)):
            attached = model.end_points[ArcEnd(arc, side)]
            for slot, point in enumerate(attached):
                cy = y + 14 * (slot + 1)
                parts.append(f'<circle cx="{x}" cy="{cy}" r="4" fill="crimson"/>')
                anchor = "end" if side == 0 else "start"
                tx = x - 8 if side == 0 else x + 8
                parts.append(
                    f'<text x="{tx}" y="{cy + 4}" font-size="10" '
                    f'text-anchor="{anchor}">{point.label()}</text>'
                )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
