from ..errors import DomainError
from ..model.arrangements import CylArrangement, FlatArrangement
from ..model.cyclic import SIDES, cyclic_between
from ..model.validation import require_valid


def sightline_oracle(arrangement, i, j):
    """Decide visibility of bars i and j by trying every sightline height and side.

    Heights are only tried at bar lengths: the number of crossed bars is a step
    function of the height that only changes there."""
    require_valid(arrangement, "Sightline oracle")
    n = arrangement.n
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise DomainError(f"Sightline oracle failed - degenerate pair ({i}, {j})")
    lengths = arrangement.lengths
    if isinstance(arrangement, FlatArrangement):
        low, high = sorted((i, j))
        arcs = [list(range(low + 1, high))]
    elif isinstance(arrangement, CylArrangement):
        arcs = [cyclic_between(n, i, j, side) for side in SIDES]
    else:
        raise DomainError(f"Sightline oracle failed - unknown arrangement {type(arrangement).__name__}")
    reach = min(lengths[i], lengths[j])
    for height in sorted(set(lengths)):
        if height > reach:
            break
        for arc in arcs:
            crossed = [t for t in arc if lengths[t] >= height]
            if len(crossed) <= arrangement.k:
                return True
    return False

def oracle_graph_edges(arrangement):
    """Collect every pair the oracle accepts"""
    n = arrangement.n
    return [(i, j) for i in range(n) for j in range(i + 1, n) if sightline_oracle(arrangement, i, j)]
