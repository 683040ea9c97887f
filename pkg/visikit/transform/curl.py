import logging

from ..errors import DomainError
from ..model.arrangements import CylArrangement, FlatArrangement
from ..model.cyclic import is_cyclically_adjacent
from ..model.validation import require_distinct, require_valid
from ..visibility.visibility import flat_visibility

log = logging.getLogger(__name__)


def curl(flat):
    """Wrap a flat arrangement around a cylinder keeping the bottom-to-top order"""
    require_valid(flat, "Curl")
    return CylArrangement(flat.lengths, flat.k)

def is_small(flat):
    """Check whether the top and bottom k+1 bars overlap (n < 2k+2)"""
    return flat.n < 2 * flat.k + 2

def curl_preserves(flat):
    """Decide from the flat arrangement alone whether curling keeps its graph.

    True iff the top k+1 and bottom k+1 bars are the 2k+2 longest and those
    longest bars all see each other."""
    require_distinct(flat, "Curl preserves")
    span = flat.k + 1
    longest = flat.longest(2 * span)
    if set(flat.top(span)) | set(flat.bottom(span)) != longest:
        return False
    graph = flat_visibility(flat)
    ordered = sorted(longest)
    return all(
        graph.has_edge(a, b)
        for i, a in enumerate(ordered)
        for b in ordered[i + 1:]
    )

def cut_order(cyl):
    """List the cyclic indices bottom to top for cutting between the two longest bars.

    The second longest bar goes to the bottom and the walk continues away from
    the longest bar, which ends on top."""
    require_distinct(cyl, "Cut")
    n = cyl.n
    if n == 1:
        return [0]
    longest, second = cyl.rank_order()[:2]
    if not is_cyclically_adjacent(n, longest, second):
        message = f"Cut failed - two longest not adjacent (positions {longest} and {second})"
        log.warning(message)
        raise DomainError(message)
    direction = 1 if longest == (second - 1) % n else -1
    return [(second + direction * t) % n for t in range(n)]

def cut(cyl):
    """Flatten a cylindrical arrangement between its two longest bars"""
    order = cut_order(cyl)
    return FlatArrangement(tuple(cyl.lengths[i] for i in order), cyl.k)
