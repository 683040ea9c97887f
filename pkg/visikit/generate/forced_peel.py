import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..model.arrangements import CylArrangement
from ..transform.peel import Peeler, enumerate_peel_orders, peel
from ..visibility.visibility import longest_adjacent_pairs

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ForcedPeelReport:
    k: int
    steps: int
    eligible: Tuple[Tuple[int, ...], ...]   # eligible points before each analysed step
    forced: Tuple[bool, ...]
    arrangement: CylArrangement
    longest_adjacent: Tuple[Tuple[int, int], ...]
    orders_checked: Optional[int] = None
    forced_under_every_order: Optional[bool] = None
    adjacent_under_some_order: Optional[bool] = None

    @property
    def all_forced(self):
        return all(self.forced)

    @property
    def longest_nonadjacent(self):
        return not self.longest_adjacent


def forced_peel_analysis(drawing, k, steps, exhaustive=False, limit=100000):
    """Peel the drawing and report which of the first `steps` steps had a single choice,
    and whether any two of the 2k+3 longest resulting bars are cyclically adjacent.

    With `exhaustive`, every valid peel order is followed instead of the lowest-index one."""
    arrangement, trace = peel(drawing, k)
    peeler = Peeler(drawing, k)
    peeler.run()
    analysed = min(steps, len(trace.steps))
    eligible = tuple(peeler.history[:analysed])
    count = 2 * k + 3
    report = dict(
        k=k,
        steps=analysed,
        eligible=eligible,
        forced=tuple(len(choices) == 1 for choices in eligible),
        arrangement=arrangement,
        longest_adjacent=tuple(longest_adjacent_pairs(arrangement, count)),
    )
    if exhaustive:
        orders = 0
        forced_everywhere = True
        adjacent_somewhere = False
        for finished in enumerate_peel_orders(drawing, k, limit=limit):
            orders += 1
            forced_everywhere &= all(len(choices) == 1 for choices in finished.history[:analysed])
            lengths = CylArrangement(tuple(finished.lengths_by_vertex()), k)
            adjacent_somewhere |= bool(longest_adjacent_pairs(lengths, count))
        log.info(f"Forced peel analysis followed {orders} peel orders for k={k}")
        report.update(
            orders_checked=orders,
            forced_under_every_order=forced_everywhere,
            adjacent_under_some_order=adjacent_somewhere,
        )
    return ForcedPeelReport(**report)
