import logging

from ..errors import DomainError
from ..model.cyclic import smaller_side
from ..model.validation import require_valid
from .crossings import creates_crossing_family, is_quasiplanar

log = logging.getLogger(__name__)


def require_quasiplanar(drawing, k, action):
    require_valid(drawing, action)
    if not is_quasiplanar(drawing, k):
        message = f"{action} failed - input not quasiplanar for k={k}"
        log.warning(message)
        raise DomainError(message)

def addable_edges(drawing, k):
    """List the non-edges that can be added without k+2 pairwise crossing edges"""
    return [e for e in drawing.non_edges() if not creates_crossing_family(drawing, e, k)]

def is_maximal(drawing, k):
    """Check that every missing chord would create k+2 pairwise crossing edges"""
    require_quasiplanar(drawing, k, "Is maximal")
    for edge in drawing.non_edges():
        if not creates_crossing_family(drawing, edge, k):
            log.debug(f"Is maximal - chord {edge} can still be added for k={k}")
            return False
    return True

def completion_order(n, candidates):
    """Sort candidate chords by span, then lexicographically"""
    return sorted(candidates, key=lambda e: (smaller_side(n, e[0], e[1]), e[0], e[1]))

def maximal_completion(drawing, k):
    """Grow the drawing into a maximal (k+2)-quasiplanar one.

    One pass suffices: a chord rejected once stays rejected since edges are only added."""
    require_quasiplanar(drawing, k, "Maximal completion")
    current = drawing
    for edge in completion_order(drawing.n, drawing.non_edges()):
        if creates_crossing_family(current, edge, k):
            continue
        current = current.with_edges([edge])
    log.debug(f"Maximal completion added {current.m - drawing.m} chords for k={k}")
    return current
