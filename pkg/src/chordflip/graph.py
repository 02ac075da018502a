"""Interlacement graphs, complements and the complement 2-coloring."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .diagram import ChordDiagram
from .errors import ChordflipError, NotBipartite

__all__ = [
    "RED",
    "BLUE",
    "InterlacementGraph",
    "interlacement_graph",
    "complement",
    "two_color_complement",
    "graphs_equal",
    "other_color",
]

RED = "R"
BLUE = "B"


def other_color(color: str) -> str:
    return BLUE if color == RED else RED


@dataclass(frozen=True, eq=False)
class InterlacementGraph:
    """Undirected simple graph over chord labels.

    ``vertices`` keeps the insertion order (first occurrence in the diagram);
    ``adjacency`` maps every vertex to the frozenset of its neighbours.
    """

    vertices: tuple[str, ...]
    adjacency: Mapping[str, frozenset[str]] = field(repr=False)

    def __post_init__(self):
        if set(self.adjacency) != set(self.vertices) or len(set(self.vertices)) != len(self.vertices):
            raise ChordflipError("adjacency keys must match the vertex list")
        for u, nbrs in self.adjacency.items():
            if u in nbrs:
                raise ChordflipError(f"loop at {u!r}")
            for v in nbrs:
                if u not in self.adjacency.get(v, ()):
                    raise ChordflipError(f"edge {u!r}-{v!r} is not symmetric")

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> InterlacementGraph:
        vertices = tuple(vertices)
        adj: dict[str, set[str]] = {v: set() for v in vertices}
        for u, v in edges:
            if u not in adj or v not in adj:
                raise ChordflipError(f"edge {u!r}-{v!r} uses an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        return cls(vertices, {v: frozenset(s) for v, s in adj.items()})

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[str, str]]:
        """Edges as lexicographically sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted((u, v) for u, nbrs in self.adjacency.items() for v in nbrs if u < v)

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, InterlacementGraph):
            return NotImplemented
        return graphs_equal(self, other)

    __hash__ = None

    def to_json(self) -> dict[str, list[str]]:
        return {v: sorted(self.adjacency[v]) for v in sorted(self.vertices)}

    @classmethod
    def from_json(cls, obj: Mapping[str, list[str]]) -> InterlacementGraph:
        try:
            return cls(tuple(obj), {v: frozenset(nbrs) for v, nbrs in obj.items()})
        except (TypeError, AttributeError):
            raise ChordflipError("graph JSON must map labels to label lists") from None

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  "{v}";' for v in sorted(self.vertices)]
        lines += [f'  "{u}" -- "{v}";' for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def interlacement_graph(d: ChordDiagram) -> InterlacementGraph:
    chords = d.chords()
    labels = d.label_order()
    edges = []
    for i, u in enumerate(labels):
        a, b = chords[u]
        for v in labels[i + 1:]:
            c, e = chords[v]
            if (a < c < b) != (a < e < b):
                edges.append((u, v))
    return InterlacementGraph.from_edges(labels, edges)


def complement(g: InterlacementGraph) -> InterlacementGraph:
    everything = frozenset(g.vertices)
    return InterlacementGraph(
        g.vertices, {v: everything - g.adjacency[v] - {v} for v in g.vertices}
    )


def two_color_complement(g: InterlacementGraph) -> dict[str, str]:
    """Properly 2-color the complement of ``g`` without building it.

    Same-colored vertices end up pairwise adjacent in ``g``.  Components of
    the complement are explored breadth-first in vertex order, each root
    colored red.  Unvisited vertices sit in a pool; scanning the pool from
    ``u`` either removes a vertex (complement neighbour) or skips one that is
    a ``g``-neighbour of ``u``, so the total work is O(V + E).
    """
    pool = dict.fromkeys(g.vertices)
    color: dict[str, str] = {}
    component: dict[str, int] = {}
    class_size: dict[tuple[int, str], int] = {}
    for comp, root in enumerate(g.vertices):
        if root not in pool:
            continue
        del pool[root]
        color[root] = RED
        component[root] = comp
        queue = deque([root])
        while queue:
            u = queue.popleft()
            adj = g.adjacency[u]
            layer = [v for v in pool if v not in adj]
            for v in layer:
                del pool[v]
                color[v] = other_color(color[u])
                component[v] = comp
                queue.append(v)
    for v in g.vertices:
        key = (component[v], color[v])
        class_size[key] = class_size.get(key, 0) + 1

    # Inside a complement component every color class must be a g-clique,
    # otherwise a complement edge joins two vertices of equal parity.
    for v in g.vertices:
        same = sum(
            1 for w in g.adjacency[v]
            if component[w] == component[v] and color[w] == color[v]
        )
        if same != class_size[(component[v], color[v])] - 1:
            raise NotBipartite(f"complement has an odd cycle through {v!r}")
    return {v: color[v] for v in g.vertices}


def graphs_equal(g1: InterlacementGraph, g2: InterlacementGraph) -> bool:
    """Label-preserving equality (not isomorphism)."""
    if set(g1.vertices) != set(g2.vertices):
        return False
    return all(g1.adjacency[v] == g2.adjacency[v] for v in g1.vertices)
