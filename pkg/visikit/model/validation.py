import logging
from numbers import Integral

from ..errors import DomainError
from ..tools.pairs import pair_text
from .arrangements import Arrangement
from .graphs import IndexedEdges
from .trace import PeelTrace

log = logging.getLogger(__name__)


def is_int(value):
    return isinstance(value, Integral) and not isinstance(value, bool)

def validate(obj):
    """List every broken invariant of a domain object; empty when well formed"""
    if isinstance(obj, Arrangement):
        return validate_arrangement(obj)
    if isinstance(obj, IndexedEdges):
        return validate_edges(obj)
    if isinstance(obj, PeelTrace):
        return validate_trace(obj)
    return [f"object: unsupported type {type(obj).__name__}"]

def validate_arrangement(arrangement):
    violations = []
    if not is_int(arrangement.k) or arrangement.k < 0:
        violations.append(f"k: must be a nonnegative integer, got {arrangement.k!r}")
    lengths = arrangement.lengths
    if not isinstance(lengths, tuple):
        return violations + [f"lengths: must be a sequence, got {type(lengths).__name__}"]
    if not lengths:
        violations.append("lengths: n must be >= 1")
    for i, length in enumerate(lengths):
        if not is_int(length):
            violations.append(f"lengths[{i}]: must be an integer, got {length!r}")
        elif length < 1:
            violations.append(f"lengths[{i}]: must be >= 1, got {length}")
    return violations

def validate_edges(obj):
    violations = []
    n = obj.n
    if not is_int(n) or n < 0:
        return [f"n: must be a nonnegative integer, got {n!r}"]
    edges = obj.edges
    if not isinstance(edges, tuple):
        return [f"edges: must be a sequence of pairs, got {type(edges).__name__}"]
    seen = set()
    for edge in edges:
        if not (isinstance(edge, tuple) and len(edge) == 2 and all(is_int(v) for v in edge)):
            violations.append(f"edges: malformed pair {edge!r}")
            continue
        a, b = edge
        if a == b:
            violations.append(f"edges: self-loop at {a}")
        elif not (0 <= a < n and 0 <= b < n):
            violations.append(f"edges: index out of range in {pair_text(edge)}")
        elif edge in seen:
            violations.append(f"edges: duplicate edge {pair_text(edge)}")
        seen.add(edge)
    labels = getattr(obj, 'labels', None)
    if labels is not None and len(labels) != n:
        violations.append(f"labels: expected {n} labels, got {len(labels)}")
    return violations

def validate_trace(trace):
    violations = validate(trace.output)
    if violations:
        return [f"output.{violation}" for violation in violations]
    output = trace.output
    if sorted(trace.lengths()) != list(range(1, output.n + 1)):
        violations.append(f"steps: assigned lengths are not a permutation of 1..{output.n}")
    if sorted(trace.order()) != list(range(output.n)):
        violations.append("steps: peeled vertices are not a permutation of the positions")
    bound = 2 * output.k + 2
    for i, step in enumerate(trace.steps):
        if step.degree > bound:
            violations.append(f"steps[{i}]: degree {step.degree} exceeds {bound}")
        if 0 <= step.vertex < output.n and output.lengths[_position(trace, step.vertex)] != step.length:
            violations.append(f"steps[{i}]: vertex {step.vertex} has length {step.length} but output disagrees")
    return violations

def _position(trace, vertex):
    # flat outputs put v_1 on top, so vertex v sits at position n-1-v
    output = trace.output
    if output.kind == 'flat':
        return output.n - 1 - vertex
    return vertex

def require_valid(obj, action="Validation"):
    """Raise DomainError naming every violation"""
    violations = validate(obj)
    if violations:
        message = f"{action} failed - invalid input: {'; '.join(violations)}"
        log.warning(message)
        raise DomainError(message)
    return obj

def require_distinct(arrangement, action):
    """Raise unless no two bars share a length"""
    require_valid(arrangement, action)
    if not arrangement.distinct:
        message = f"{action} failed - distinct lengths required"
        log.warning(message)
        raise DomainError(message)
    return arrangement
