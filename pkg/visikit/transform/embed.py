from ..model.graphs import ConvexDrawing
from ..visibility.visibility import cyl_visibility


def embed(arrangement):
    """Place one point per bar in the same cyclic order and draw every visibility edge as a chord"""
    graph = cyl_visibility(arrangement)
    return ConvexDrawing(graph.n, graph.edges)
