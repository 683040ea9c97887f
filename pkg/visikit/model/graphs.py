from dataclasses import dataclass
from typing import Optional, Tuple

import networkx as nx

from ..tools.pairs import normalize_pairs, normalize_pair


@dataclass(frozen=True)
class IndexedEdges:
    """Vertices 0..n-1 and unordered index pairs stored sorted"""
    n: int
    edges: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        # duplicates survive normalization so validation can flag them
        try:
            object.__setattr__(self, 'edges', normalize_pairs(self.edges))
        except (TypeError, ValueError):
            pass

    @property
    def m(self):
        return len(self.edges)

    def edge_set(self):
        return frozenset(self.edges)

    def has_edge(self, a, b):
        return normalize_pair((a, b)) in self.edge_set()

    def adjacency(self):
        """Map each vertex to the set of its neighbors"""
        adjacency = {v: set() for v in range(self.n)}
        for a, b in self.edges:
            adjacency[a].add(b)
            adjacency[b].add(a)
        return adjacency

    def neighbors(self, v):
        return sorted(self.adjacency()[v])

    def degree(self, v):
        return len(self.adjacency()[v])

    def degrees(self):
        return [len(neighbors) for _, neighbors in sorted(self.adjacency().items())]

    def non_edges(self):
        """List every absent pair in lexicographic order"""
        present = self.edge_set()
        return [
            (a, b)
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if (a, b) not in present
        ]

    def to_networkx(self):
        """Copy into a networkx graph keeping isolated vertices"""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class Graph(IndexedEdges):
    """Simple labeled graph"""
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        super().__post_init__()
        if self.labels is not None:
            object.__setattr__(self, 'labels', tuple(self.labels))

    def relabel(self, mapping):
        """Rename every vertex v to mapping[v]"""
        return Graph(self.n, tuple((mapping[a], mapping[b]) for a, b in self.edges))


@dataclass(frozen=True)
class ConvexDrawing(IndexedEdges):
    """Points in convex position named by cyclic index, joined by straight chords"""

    def graph(self):
        """Read the abstract graph of the drawing"""
        return Graph(self.n, self.edges)

    def with_edges(self, extra):
        """Add chords to a copy of the drawing"""
        return ConvexDrawing(self.n, tuple(self.edges) + tuple(extra))

