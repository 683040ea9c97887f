from ..errors import DomainError
from ..model.arrangements import CylArrangement
from ..model.graphs import ConvexDrawing


def _require_k(k, minimum, action):
    if k < minimum:
        raise DomainError(f"{action} failed - k must be >= {minimum}, got {k}")

def complete_graph_arrangement(k):
    """Lengths 1..2k+3 in increasing cyclic order; every pair of bars sees each other"""
    _require_k(k, 0, "Complete graph arrangement")
    return CylArrangement(tuple(range(1, 2 * k + 4)), k)

def quasiplanar_counterexample(k):
    """Build the (k+2)-quasiplanar drawing on 4(k+1) points whose maximal
    completions all have minimum degree at least 2k+3"""
    _require_k(k, 1, "Quasiplanar counterexample")
    span = k + 1
    edges = []
    for i in range(1, span + 1):
        # v_i -- v_{3(k+1)+1-i} and v_{k+1+i} -- v_{4(k+1)+1-i}, shifted to 0-indexing
        edges.append((i - 1, 3 * span - i))
        edges.append((span + i - 1, 4 * span - i))
    return ConvexDrawing(4 * span, edges)

def forced_peel_family(k):
    """Cyclic lengths in 2k+3 blocks; block b holds b, b+(2k+3), ..., b+k(2k+3)"""
    _require_k(k, 1, "Forced peel family")
    width = 2 * k + 3
    lengths = [
        block + step * width
        for block in range(1, width + 1)
        for step in range(k + 1)
    ]
    return CylArrangement(tuple(lengths), k)
