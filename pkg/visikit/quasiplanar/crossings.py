import bisect
import logging
from itertools import combinations

from ..errors import DomainError
from ..model.validation import require_valid
from ..tools.pairs import normalize_pair

log = logging.getLogger(__name__)


def chords_cross(n, e1, e2):
    """Check whether two chords between points in convex position cross.

    Chords sharing an endpoint never cross."""
    a, b = normalize_pair(e1)
    c, d = normalize_pair(e2)
    for v in (a, b, c, d):
        if not 0 <= v < n:
            raise DomainError(f"Chords cross failed - index {v} out of range for n={n}")
    if len({a, b, c, d}) < 4:
        return False
    # exactly one endpoint of e2 inside the arc a..b
    return (a < c < b) != (a < d < b)

def longest_crossing_chain(chords):
    """Find a longest family of pairwise crossing chords from a list of chords
    all spanning the same cut, as a chain increasing in both endpoints"""
    # equal first endpoints sorted by decreasing second endpoint so the chain is strict in both
    ordered = sorted(chords, key=lambda e: (e[0], -e[1]))
    tails = []      # smallest second endpoint ending a chain of each length
    tail_index = []
    parent = [None] * len(ordered)
    for index, (_, b) in enumerate(ordered):
        position = bisect.bisect_left(tails, b)
        if position == len(tails):
            tails.append(b)
            tail_index.append(index)
        else:
            tails[position] = b
            tail_index[position] = index
        parent[index] = tail_index[position - 1] if position > 0 else None
    if not tails:
        return []
    chain = []
    index = tail_index[-1]
    while index is not None:
        chain.append(ordered[index])
        index = parent[index]
    return list(reversed(chain))

def max_pairwise_crossing_edges(n, edges):
    """Find a largest set of pairwise crossing chords among edges.

    Sorted by first endpoint, pairwise crossing chords have every first endpoint
    before every second endpoint, so some cut c separates them and they form a
    chain increasing in both endpoints among the chords spanning c."""
    chords = sorted({normalize_pair(e) for e in edges})
    best = chords[:1]
    for cut in range(n - 1):
        spanning = [(a, b) for a, b in chords if a <= cut < b]
        if len(spanning) <= len(best):
            continue
        chain = longest_crossing_chain(spanning)
        if len(chain) > len(best):
            best = chain
    return best

def max_pairwise_crossing(drawing):
    """Find a largest pairwise crossing family of a drawing"""
    require_valid(drawing, "Max pairwise crossing")
    return max_pairwise_crossing_edges(drawing.n, drawing.edges)

def find_pairwise_crossing(drawing, size):
    """Return `size` pairwise crossing edges of the drawing, or None if there are none"""
    if size < 1:
        raise DomainError(f"Find pairwise crossing failed - size must be >= 1, got {size}")
    family = max_pairwise_crossing(drawing)
    if len(family) < size:
        return None
    return tuple(family[:size])

def is_quasiplanar(drawing, k):
    """Check that no k+2 edges of the drawing pairwise cross"""
    return find_pairwise_crossing(drawing, k + 2) is None

def creates_crossing_family(drawing, edge, k):
    """Check whether adding one chord produces k+2 pairwise crossing edges"""
    crossing = [e for e in drawing.edges if chords_cross(drawing.n, edge, e)]
    if len(crossing) < k + 1:
        return False
    return len(max_pairwise_crossing_edges(drawing.n, crossing)) >= k + 1

def crossing_family_oracle(drawing, size):
    """Brute force: try every subset of `size` edges"""
    for family in combinations(drawing.edges, size):
        if all(chords_cross(drawing.n, e1, e2) for e1, e2 in combinations(family, 2)):
            return family
    return None
