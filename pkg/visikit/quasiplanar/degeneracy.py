import logging

import networkx as nx

from ..errors import DomainError
from ..model.validation import require_valid

log = logging.getLogger(__name__)


def degeneracy(graph):
    """Repeatedly remove a minimum-degree vertex (lowest label on ties).

    Returns the largest degree seen at removal and the removal order."""
    require_valid(graph, "Degeneracy")
    adjacency = graph.adjacency()
    value = 0
    order = []
    while adjacency:
        vertex = min(adjacency, key=lambda v: (len(adjacency[v]), v))
        value = max(value, len(adjacency[vertex]))
        order.append(vertex)
        for neighbor in adjacency.pop(vertex):
            adjacency[neighbor].discard(vertex)
    return value, order

def greedy_color(graph, order):
    """Colour vertices in reverse elimination order with the smallest free colour"""
    require_valid(graph, "Greedy color")
    order = list(order)
    if sorted(order) != list(range(graph.n)):
        raise DomainError("Greedy color failed - order is not a permutation of the vertices")
    coloring = nx.greedy_color(graph.to_networkx(), strategy=lambda g, colors: reversed(order))
    return [coloring[v] for v in range(graph.n)]

def color_count(coloring):
    return len(set(coloring))

def is_proper_coloring(graph, coloring):
    return all(coloring[a] != coloring[b] for a, b in graph.edges)
