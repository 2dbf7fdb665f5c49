"""Dual graph of an atlas: strips as vertices, seams as edges.

Each edge end is decorated with the strip, side and position of the glued
interval, and each vertex with its two side sizes, so the graph determines
the atlas up to isomorphism (free intervals reappear as undecorated side
positions).  Loops and parallel edges are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .atlas import Gluing, Parity, Strip, StripedAtlas


@dataclass(frozen=True, order=True)
class EdgeEnd:
    strip: str
    side: int
    index: int

    def label(self) -> str:
        return f"{self.strip}.{self.side}[{self.index}]"


@dataclass(frozen=True, order=True)
class DualEdge:
    """One seam; ends sorted so the edge is an unordered pair."""

    ends: tuple[EdgeEnd, EdgeEnd]
    parity: Parity

    def __post_init__(self):
        object.__setattr__(self, "ends", tuple(sorted(self.ends)))

    def label(self) -> str:
        return f"{self.ends[0].label()}--{self.ends[1].label()} {self.parity.symbol}"


@dataclass(frozen=True)
class DualGraph:
    """Vertices carry (strip id, |side0|, |side1|); edges are decorated seams."""

    vertices: tuple[tuple[str, int, int], ...]
    edges: tuple[DualEdge, ...]


def build_dual_graph(atlas: StripedAtlas) -> DualGraph:
    vertices = tuple(
        sorted((s.id, len(s.side0), len(s.side1)) for s in atlas.strips)
    )
    edges = []
    for g in atlas.gluings:
        ends = tuple(EdgeEnd(*atlas.location(name)) for name in (g.a, g.b))
        edges.append(DualEdge(ends, g.parity))
    return DualGraph(vertices, tuple(sorted(edges)))


def euler_invariant(graph: DualGraph) -> int:
    """Vertex count minus edge count; reduction merges preserve it."""
    return len(graph.vertices) - len(graph.edges)


def export_dot(graph: DualGraph) -> str:
    """Deterministic DOT multigraph with parity and end decorations."""
    lines = ["graph dual {"]
    for name, side0, side1 in graph.vertices:
        lines.append(f'  "{name}" [side0={side0}, side1={side1}];')
    for edge in graph.edges:
        a, b = edge.ends
        lines.append(f'  "{a.strip}" -- "{b.strip}" [label="{edge.label()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def atlas_from_dual_graph(graph: DualGraph) -> StripedAtlas:
    """Rebuild an atlas from its dual graph, with positional interval names.

    The result is isomorphic to any atlas the graph was built from.
    """
    strips = tuple(
        Strip(
            name,
            tuple(f"{name}.0.{i}" for i in range(side0)),
            tuple(f"{name}.1.{i}" for i in range(side1)),
        )
        for name, side0, side1 in graph.vertices
    )
    gluings = tuple(
        Gluing(
            f"{edge.ends[0].strip}.{edge.ends[0].side}.{edge.ends[0].index}",
            f"{edge.ends[1].strip}.{edge.ends[1].side}.{edge.ends[1].index}",
            edge.parity,
        )
        for edge in graph.edges
    )
    return StripedAtlas(strips, gluings)
