import logging

from ..errors import DomainError
from ..model.arrangements import CylArrangement, FlatArrangement
from ..model.cyclic import CCW, CW, cyclic_between
from ..model.graphs import Graph
from ..model.validation import require_distinct, require_valid

log = logging.getLogger(__name__)


def blockers(lengths, between, height):
    """Count the intermediate bars a sightline at `height` has to cross"""
    return sum(1 for t in between if lengths[t] >= height)

def flat_sees(arrangement, i, j):
    """Check one pair of a flat arrangement under the >= min blocking rule"""
    low, high = (i, j) if i < j else (j, i)
    lengths = arrangement.lengths
    height = min(lengths[low], lengths[high])
    return blockers(lengths, range(low + 1, high), height) <= arrangement.k

def cyl_sees(arrangement, i, j):
    """Check one pair of a cylindrical arrangement using the better of the two arcs"""
    lengths = arrangement.lengths
    height = min(lengths[i], lengths[j])
    n = arrangement.n
    return any(
        blockers(lengths, cyclic_between(n, i, j, side), height) <= arrangement.k
        for side in (CCW, CW)
    )

def flat_visibility(arrangement):
    """Compute the semi-bar k-visibility graph of a flat arrangement"""
    require_valid(arrangement, "Flat visibility")
    n = arrangement.n
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if flat_sees(arrangement, i, j)]
    return Graph(n, edges)

def cyl_visibility(arrangement):
    """Compute the cylindrical semi-bar k-visibility graph of an arrangement"""
    require_valid(arrangement, "Cylindrical visibility")
    n = arrangement.n
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if cyl_sees(arrangement, i, j)]
    return Graph(n, edges)

def visibility(arrangement):
    """Dispatch on the arrangement kind"""
    if isinstance(arrangement, FlatArrangement):
        return flat_visibility(arrangement)
    if isinstance(arrangement, CylArrangement):
        return cyl_visibility(arrangement)
    raise DomainError(f"Visibility failed - unknown arrangement {type(arrangement).__name__}")

def shorter_bar_edge_count(arrangement, i):
    """Count the edges at bar i whose other end is a strictly longer bar"""
    require_distinct(arrangement, "Shorter bar edge count")
    if not 0 <= i < arrangement.n:
        raise DomainError(f"Shorter bar edge count failed - index {i} out of range")
    lengths = arrangement.lengths
    graph = cyl_visibility(arrangement)
    return sum(1 for j in graph.neighbors(i) if lengths[j] > lengths[i])

def shorter_bar_edge_counts(arrangement):
    """Count, for every bar, the edges it owns as the shorter end"""
    require_distinct(arrangement, "Shorter bar edge count")
    lengths = arrangement.lengths
    adjacency = cyl_visibility(arrangement).adjacency()
    return [
        sum(1 for j in adjacency[i] if lengths[j] > lengths[i])
        for i in range(arrangement.n)
    ]

def expected_shorter_bar_edge_count(arrangement, i):
    """Closed form: 2k+2 below the 2k+2 longest bars, rank-1 among them"""
    rank = arrangement.rank_order().index(i) + 1
    bound = 2 * arrangement.k + 2
    return bound if rank > bound else rank - 1

def longest_adjacent_pairs(arrangement, count):
    """List cyclically adjacent pairs among the `count` longest bars"""
    n = arrangement.n
    longest = arrangement.longest(count)
    if n < 2:
        return []
    pairs = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    return sorted(p for p in pairs if p[0] != p[1] and p[0] in longest and p[1] in longest)
