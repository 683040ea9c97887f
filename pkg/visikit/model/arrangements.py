from dataclasses import dataclass
from typing import Tuple

FLAT = 'flat'
CYL = 'cyl'


@dataclass(frozen=True)
class Arrangement:
    """Semi-bar lengths in order plus the visibility parameter k"""
    lengths: Tuple[int, ...]
    k: int = 0

    kind = None

    def __post_init__(self):
        # keep malformed input as-is so validation can report it
        try:
            object.__setattr__(self, 'lengths', tuple(self.lengths))
        except TypeError:
            pass

    @property
    def n(self):
        return len(self.lengths)

    @property
    def distinct(self):
        """Check that no two bars share a length"""
        return len(set(self.lengths)) == len(self.lengths)

    def rank_order(self):
        """List bar indices from the longest bar down to the shortest"""
        return sorted(range(self.n), key=lambda i: (-self.lengths[i], i))

    def longest(self, count):
        """Read the indices of the `count` longest bars"""
        return set(self.rank_order()[:count])

    def with_k(self, k):
        return type(self)(self.lengths, k)


@dataclass(frozen=True)
class FlatArrangement(Arrangement):
    """Bars stacked bottom (index 0) to top (index n-1) with left ends on the y-axis"""
    kind = FLAT

    def top(self, count):
        return list(range(max(self.n - count, 0), self.n))

    def bottom(self, count):
        return list(range(min(count, self.n)))


@dataclass(frozen=True)
class CylArrangement(Arrangement):
    """Bars placed in cyclic order around a cylinder"""
    kind = CYL


def rotate(arrangement, r):
    """Shift every bar r places forward in cyclic order"""
    n = arrangement.n
    if n == 0:
        return arrangement
    lengths = [None] * n
    for i, length in enumerate(arrangement.lengths):
        lengths[(i + r) % n] = length
    return type(arrangement)(tuple(lengths), arrangement.k)

def reflect(arrangement):
    """Reverse the order of the bars"""
    return type(arrangement)(tuple(reversed(arrangement.lengths)), arrangement.k)
