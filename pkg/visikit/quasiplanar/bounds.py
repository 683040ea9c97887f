from math import comb

from ..errors import DomainError
from ..model.cyclic import smaller_side
from ..tools.pairs import all_pairs


def j_pairs(drawing, j):
    """Find every pair of points with exactly j points on its smaller side"""
    n = drawing.n
    if not 0 <= j <= max(n - 2, 0):
        raise DomainError(f"J-pairs failed - level {j} outside 0..{n - 2}")
    return {pair for pair in all_pairs(n) if smaller_side(n, *pair) == j}

def low_pairs(n, k):
    """Collect every j-pair with j <= k"""
    return {pair for pair in all_pairs(n) if smaller_side(n, *pair) <= k}

def missing_low_pairs(drawing, k):
    """List the j-pairs with j <= k that the drawing lacks"""
    return sorted(low_pairs(drawing.n, k) - drawing.edge_set())

def max_edges(n, k):
    """Largest edge count of a (k+2)-quasiplanar convex geometric graph on n points"""
    if n < 1 or k < 0:
        raise DomainError(f"Max edges failed - need n >= 1 and k >= 0, got n={n}, k={k}")
    if n <= 2 * k + 2:
        return comb(n, 2)
    return (k + 1) * (2 * n - 2 * k - 3)
