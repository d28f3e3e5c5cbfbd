"""Line-graph and total-graph operators and their iterates.

Both operators fix vertex ids deterministically: the line graph numbers
its vertices by the canonical (lexicographic) edge order of the input;
the total graph lists the input's vertices first (same order) and then
its edges in canonical order. Each application records one level of
provenance; iterates keep only the final level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import GrowthLimitError, PreconditionError
from .graphs import Graph

#: Default iterate growth guard; orders grow super-exponentially.
DEFAULT_MAX_VERTICES = 20000


@dataclass(frozen=True)
class VertexOf:
    """Tag: this vertex stands for a vertex of the predecessor graph."""

    vertex: int


@dataclass(frozen=True)
class EdgeOf:
    """Tag: this vertex stands for an edge of the predecessor graph."""

    edge: tuple[int, int]


Provenance = Union[VertexOf, EdgeOf]


@dataclass(frozen=True)
class ProvenancedGraph:
    """A derived graph plus one level of per-vertex origin tags."""

    graph: Graph
    provenance: tuple[Provenance, ...]

    def vertex_positions(self) -> tuple[int, ...]:
        """Ids of vertices tagged as predecessor vertices."""
        return tuple(
            i for i, p in enumerate(self.provenance) if isinstance(p, VertexOf)
        )

    def edge_positions(self) -> tuple[int, ...]:
        """Ids of vertices tagged as predecessor edges."""
        return tuple(
            i for i, p in enumerate(self.provenance) if isinstance(p, EdgeOf)
        )


def line_graph(g: Graph) -> ProvenancedGraph:
    """Graph on the edges of ``g``; adjacency = sharing an endpoint."""
    edges = g.edges()
    m = len(edges)
    masks = [0] * m
    incident = [[] for _ in range(g.n)]
    for j, (u, v) in enumerate(edges):
        incident[u].append(j)
        incident[v].append(j)
    for js in incident:
        for a_pos, a in enumerate(js):
            for b in js[a_pos + 1:]:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return ProvenancedGraph(
        Graph(m, tuple(masks)), tuple(EdgeOf(e) for e in edges)
    )


def total_graph(g: Graph) -> ProvenancedGraph:
    """Graph on the vertices and edges of ``g``.

    Two vertices of the result are adjacent iff the corresponding
    elements of ``g`` are adjacent (vertex/vertex), incident
    (vertex/edge), or share an endpoint (edge/edge).
    """
    edges = g.edges()
    n, m = g.n, len(edges)
    masks = [g.adjacency_mask(v) for v in range(n)] + [0] * m
    incident = [[] for _ in range(n)]
    for j, (u, v) in enumerate(edges):
        ej = n + j
        incident[u].append(ej)
        incident[v].append(ej)
        masks[u] |= 1 << ej
        masks[v] |= 1 << ej
        masks[ej] |= (1 << u) | (1 << v)
    for js in incident:
        for a_pos, a in enumerate(js):
            for b in js[a_pos + 1:]:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    provenance = tuple(VertexOf(v) for v in range(n)) + tuple(
        EdgeOf(e) for e in edges
    )
    return ProvenancedGraph(Graph(n + m, tuple(masks)), provenance)


def iterate(g: Graph, op: str, k: int, *,
            max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Apply the line or total operator k times; k = 0 is the identity.

    Before each application the order of the next graph is projected
    (m for line, n + m for total); exceeding ``max_vertices`` raises
    GrowthLimitError carrying the projected order and the cap.
    """
    if op not in ("line", "total"):
        raise PreconditionError(f"op must be 'line' or 'total', got {op!r}")
    if k < 0:
        raise PreconditionError(f"iterate count must be nonnegative, got {k}")
    current = g
    for _ in range(k):
        projected = current.m if op == "line" else current.n + current.m
        if projected > max_vertices:
            raise GrowthLimitError(projected, max_vertices)
        step = line_graph(current) if op == "line" else total_graph(current)
        current = step.graph
    return current
