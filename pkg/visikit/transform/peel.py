import logging

from ..errors import DomainError
from ..model.arrangements import CylArrangement, FlatArrangement
from ..model.trace import PeelStep, PeelTrace
from ..model.validation import require_valid
from ..quasiplanar.completion import is_maximal
from ..quasiplanar.crossings import is_quasiplanar
from ..visibility.visibility import cyl_visibility, flat_visibility

log = logging.getLogger(__name__)


# Peel a convex drawing one low-degree point at a time
# - each peeled point gets the next length, so it is the shortest bar left
# - a point may be peeled while its degree is at most the bound (2k+2)
# - protected points (the flat anchors) wait until peel_protected is called
class Peeler():
    def __init__(self, drawing, k, protected=()):
        self.drawing = drawing
        self.k = k
        self.bound = 2 * k + 2
        self.protected = set(protected)
        self.adjacency = drawing.adjacency()
        self.steps = []
        self.history = []   # eligible points seen before each step

    @property
    def done(self):
        return not self.adjacency

    def remaining(self):
        return sorted(self.adjacency)

    def degree(self, vertex):
        return len(self.adjacency[vertex])

    def eligible(self, include_protected=False):
        """List the points that may be peeled next, lowest cyclic index first"""
        return [
            v for v in sorted(self.adjacency)
            if self.degree(v) <= self.bound and (include_protected or v not in self.protected)
        ]

    def remove(self, vertex, eligible):
        """Assign the next length to vertex and delete it with its chords.

        A step is forced when it is the only remaining point within the degree
        bound, protected points included."""
        step = PeelStep(
            vertex=vertex,
            length=len(self.steps) + 1,
            degree=self.degree(vertex),
            forced=len(self.eligible(include_protected=True)) == 1
        )
        self.history.append(tuple(eligible))
        self.steps.append(step)
        for neighbor in self.adjacency.pop(vertex):
            self.adjacency[neighbor].discard(vertex)
        return step

    def step(self, vertex=None):
        """Peel one point, by default the lowest eligible one"""
        eligible = self.eligible()
        if not eligible:
            return None
        if vertex is None:
            vertex = eligible[0]
        elif vertex not in eligible:
            raise DomainError(f"Peeler step failed - vertex {vertex} is not eligible")
        return self.remove(vertex, eligible)

    def peel_protected(self, vertex):
        """Peel a protected point regardless of the eligibility rule"""
        return self.remove(vertex, self.eligible(include_protected=True))

    def run(self):
        """Peel every unprotected point; return the step that got stuck or None"""
        while set(self.adjacency) - self.protected:
            if self.step() is None:
                return len(self.steps)
        return None

    def copy(self):
        clone = Peeler.__new__(Peeler)
        clone.drawing = self.drawing
        clone.k = self.k
        clone.bound = self.bound
        clone.protected = set(self.protected)
        clone.adjacency = {v: set(neighbors) for v, neighbors in self.adjacency.items()}
        clone.steps = list(self.steps)
        clone.history = list(self.history)
        return clone

    def lengths_by_vertex(self):
        lengths = [None] * self.drawing.n
        for step in self.steps:
            lengths[step.vertex] = step.length
        return lengths


def _fail(message):
    log.warning(message)
    raise DomainError(message)

def peel(drawing, k, force=False):
    """Turn a maximal (k+2)-quasiplanar, (2k+2)-degenerate drawing into a
    cylindrical arrangement with the same visibility graph.

    Returns the arrangement and the trace of the peeling."""
    require_valid(drawing, "Peel")
    if not force and not is_maximal(drawing, k):
        _fail("Peel failed - not maximal")
    peeler = Peeler(drawing, k)
    stuck = peeler.run()
    if stuck is not None:
        _fail(f"Peel failed - not degenerate: no vertex of degree <= {peeler.bound} at step {stuck}")
    arrangement = CylArrangement(tuple(peeler.lengths_by_vertex()), k)
    verified = cyl_visibility(arrangement) == drawing.graph()
    if not verified:
        message = "Peel failed - visibility of the peeled arrangement differs from the drawing"
        if not force:
            _fail(message)
        log.warning(message)
    return arrangement, PeelTrace(tuple(peeler.steps), arrangement, verified)

def flat_order(n):
    """Read the drawing vertex at each flat position, bottom to top (v_n up to v_1)"""
    return list(range(n - 1, -1, -1))

def flat_peel(drawing):
    """Turn a maximal planar convex drawing into a flat semi-bar visibility arrangement.

    v_1 (index 0) ends up topmost with length n and v_n bottommost with length n-1."""
    require_valid(drawing, "Flat peel")
    n = drawing.n
    if not (is_quasiplanar(drawing, 0) and is_maximal(drawing, 0)):
        _fail("Flat peel failed - not maximal planar")
    first, last = 0, n - 1
    peeler = Peeler(drawing, 0, protected={first, last})
    if peeler.run() is not None:
        _fail(f"Flat peel failed - no peelable interior vertex at step {len(peeler.steps)}")
    # the two anchors take the two largest lengths, v_n first
    if last != first:
        peeler.peel_protected(last)
    peeler.peel_protected(first)
    lengths = peeler.lengths_by_vertex()
    arrangement = FlatArrangement(tuple(lengths[v] for v in flat_order(n)), 0)
    graph = flat_visibility(arrangement).relabel(flat_order(n))
    verified = graph == drawing.graph()
    if not verified:
        _fail("Flat peel failed - visibility of the flat arrangement differs from the drawing")
    return arrangement, PeelTrace(tuple(peeler.steps), arrangement, verified)

def enumerate_peel_orders(drawing, k, steps=None, limit=100000):
    """Yield every valid peel order (as a Peeler) for the first `steps` steps"""
    require_valid(drawing, "Enumerate peel orders")
    total = drawing.n if steps is None else min(steps, drawing.n)
    stack = [Peeler(drawing, k)]
    produced = 0
    while stack:
        peeler = stack.pop()
        if len(peeler.steps) >= total:
            produced += 1
            if produced > limit:
                _fail(f"Enumerate peel orders failed - more than {limit} orders")
            yield peeler
            continue
        eligible = peeler.eligible()
        if not eligible:
            _fail(f"Enumerate peel orders failed - not degenerate: no vertex of degree <= {peeler.bound} at step {len(peeler.steps)}")
        for vertex in reversed(eligible):
            branch = peeler.copy()
            branch.remove(vertex, eligible)
            stack.append(branch)

