from ..errors import DomainError

CCW = 'ccw'
CW = 'cw'
SIDES = (CCW, CW)


def cyclic_between(n, a, b, side):
    """List the indices strictly between a and b on one side of the cycle.

    The ccw side walks up from a towards b, the cw side walks up from b towards a,
    so both sides come back in increasing cyclic order from their start."""
    if not (n >= 2 and a != b and 0 <= a < n and 0 <= b < n):
        raise DomainError(f"Cyclic between failed - degenerate pair ({a}, {b}) for n={n}")
    if side == CCW:
        start, gap = a, (b - a) % n
    elif side == CW:
        start, gap = b, (a - b) % n
    else:
        raise DomainError(f"Cyclic between failed - unknown side {side!r}")
    return [(start + t) % n for t in range(1, gap)]

def side_sizes(n, a, b):
    """Count the points strictly inside each arc between a and b"""
    inner = (b - a) % n - 1
    return inner, n - 2 - inner

def smaller_side(n, a, b):
    """Count the points on the smaller side of the chord {a, b}"""
    return min(side_sizes(n, a, b))

def is_cyclically_adjacent(n, a, b):
    """Check whether two distinct indices sit next to each other on the cycle"""
    return a != b and smaller_side(n, a, b) == 0

