import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations

from ..errors import DomainError
from ..generate.families import complete_graph_arrangement, forced_peel_family, quasiplanar_counterexample
from ..generate.forced_peel import forced_peel_analysis
from ..generate.random_arrangements import random_sweep
from ..model.arrangements import CylArrangement, FlatArrangement
from ..quasiplanar.bounds import max_edges, missing_low_pairs
from ..quasiplanar.completion import is_maximal, maximal_completion
from ..quasiplanar.crossings import is_quasiplanar
from ..quasiplanar.degeneracy import color_count, degeneracy, greedy_color
from ..transform.curl import curl, curl_preserves
from ..transform.embed import embed
from ..transform.peel import peel
from ..visibility.oracle import oracle_graph_edges
from ..visibility.visibility import cyl_visibility, flat_visibility

log = logging.getLogger(__name__)

MAX_FAILURES = 10


class Outcome:
    """Tally of one acceptance criterion"""
    def __init__(self, key):
        self.key = key
        self.checked = 0
        self.failures = []
        self.details = {}   # measured values reported alongside the tally

    def check(self, condition, instance):
        self.checked += 1
        if not condition and len(self.failures) < MAX_FAILURES:
            self.failures.append(instance)
        return condition

    def attempt(self, test, instance):
        """Check test() for one instance, counting a domain error as a failure"""
        try:
            condition = test()
        except DomainError as error:
            log.warning(f"Verify {self.key} failed on {instance} - {error}")
            condition = False
            instance = {**instance, 'error': str(error)}
        return self.check(condition, instance)

    def as_dict(self):
        result = {'passed': not self.failures, 'checked': self.checked, 'failures': self.failures}
        if self.details:
            result['details'] = self.details
        return result


def permutation_arrangements(max_n, ks, kind=CylArrangement, min_n=1):
    """Every permutation of 1..n as an arrangement for every n and k"""
    for k in ks:
        for n in range(min_n, max_n + 1):
            for lengths in permutations(range(1, n + 1)):
                yield kind(lengths, k)

def sweep_instances(settings):
    """Exhaustive permutations (k <= 2) followed by the seeded random sweep"""
    yield from permutation_arrangements(settings.max_n, range(3))
    for _, arrangement in random_sweep(settings.random_trials, settings.random_max_n, settings.random_max_k, settings.seed):
        yield arrangement

def _label(arrangement):
    return {'kind': arrangement.kind, 'k': arrangement.k, 'lengths': list(arrangement.lengths)}


def check_edge_count(settings):
    outcome = Outcome('1-edge-count')
    outcome.details['max_n'] = settings.edge_count_max_n
    for arrangement in permutation_arrangements(settings.edge_count_max_n, range(3), min_n=2):
        outcome.attempt(
            lambda: cyl_visibility(arrangement).m == max_edges(arrangement.n, arrangement.k),
            _label(arrangement)
        )
    return outcome

def check_embed_quasiplanar(settings):
    outcome = Outcome('2-embed-quasiplanar')
    for arrangement in sweep_instances(settings):
        outcome.attempt(lambda: is_quasiplanar(embed(arrangement), arrangement.k), _label(arrangement))
    return outcome

def check_oracle(settings):
    outcome = Outcome('3-oracle-equivalence')
    for kind, fast in ((FlatArrangement, flat_visibility), (CylArrangement, cyl_visibility)):
        for arrangement in permutation_arrangements(min(settings.max_n, 7), range(4), kind):
            outcome.attempt(
                lambda: list(fast(arrangement).edges) == oracle_graph_edges(arrangement),
                _label(arrangement)
            )
    return outcome

def _curl_agrees(flat):
    same = flat_visibility(flat) == cyl_visibility(curl(flat))
    return same == curl_preserves(flat)

def check_curl(settings):
    outcome = Outcome('4-curl-iff')
    for flat in permutation_arrangements(settings.max_n, range(3), FlatArrangement):
        if flat.n < 2 * flat.k + 2:
            continue
        outcome.attempt(lambda: _curl_agrees(flat), _label(flat))
    return outcome

def _round_trips(arrangement):
    rebuilt, _ = peel(embed(arrangement), arrangement.k)
    return cyl_visibility(rebuilt) == cyl_visibility(arrangement)

def check_round_trip(settings):
    outcome = Outcome('5-peel-round-trip')
    for arrangement in sweep_instances(settings):
        outcome.attempt(lambda: _round_trips(arrangement), _label(arrangement))
    return outcome

def check_counterexample(settings):
    outcome = Outcome('6-counterexample')
    for k in range(1, 5):
        drawing = quasiplanar_counterexample(k)
        outcome.attempt(lambda: is_quasiplanar(drawing, k), {'k': k, 'check': 'quasiplanar'})
        try:
            completion = maximal_completion(drawing, k)
        except DomainError as error:
            outcome.check(False, {'k': k, 'check': 'completion', 'error': str(error)})
            continue
        outcome.check(min(completion.degrees()) >= 2 * k + 3, {'k': k, 'check': 'min degree'})
        outcome.attempt(lambda: degeneracy(completion.graph())[0] >= 2 * k + 3, {'k': k, 'check': 'degeneracy'})
    return outcome

def _forced_peel_details(report):
    free = report.forced.index(False) if False in report.forced else None
    details = {
        'forced_steps': report.forced.count(True) if free is None else free,
        'first_free_choice': None if free is None else list(report.eligible[free]),
        'longest_adjacent': [list(pair) for pair in report.longest_adjacent],
    }
    if report.orders_checked is not None:
        details['orders_checked'] = report.orders_checked
        details['adjacent_under_some_order'] = report.adjacent_under_some_order
    return details

def check_forced_peel(settings):
    """Maximality is asserted; the forced prefix and adjacency are measured and reported"""
    outcome = Outcome('7-forced-peel')
    for k, steps, exhaustive in ((1, 5, True), (2, 14, False)):
        drawing = embed(forced_peel_family(k))
        outcome.attempt(lambda: is_maximal(drawing, k), {'k': k, 'check': 'maximal'})
        try:
            report = forced_peel_analysis(drawing, k, steps, exhaustive=exhaustive)
        except DomainError as error:
            outcome.check(False, {'k': k, 'check': 'peel', 'error': str(error)})
            continue
        outcome.details[f'k={k}'] = _forced_peel_details(report)
    return outcome

def check_bounds(settings):
    outcome = Outcome('8-bounds')
    for arrangement in sweep_instances(settings):
        graph = cyl_visibility(arrangement)
        value, order = degeneracy(graph)
        bound = 2 * arrangement.k + 2
        outcome.check(value <= bound, _label(arrangement))
        outcome.attempt(lambda: color_count(greedy_color(graph, order)) <= bound + 1, _label(arrangement))
    for k in range(5):
        graph = cyl_visibility(complete_graph_arrangement(k))
        n = 2 * k + 3
        outcome.check(graph.m == n * (n - 1) // 2, {'k': k, 'check': 'complete graph'})
    return outcome

def check_low_pairs(settings):
    outcome = Outcome('9-low-pairs')
    for arrangement in sweep_instances(settings):
        outcome.attempt(lambda: not missing_low_pairs(embed(arrangement), arrangement.k), _label(arrangement))
    for k in range(1, 5):
        outcome.attempt(
            lambda: not missing_low_pairs(maximal_completion(quasiplanar_counterexample(k), k), k),
            {'k': k, 'check': 'completion'}
        )
    return outcome


CRITERIA = [
    check_edge_count,
    check_embed_quasiplanar,
    check_oracle,
    check_curl,
    check_round_trip,
    check_counterexample,
    check_forced_peel,
    check_bounds,
    check_low_pairs,
]


def _run(criterion, settings):
    log.info(f"Verify running {criterion.__name__}")
    outcome = criterion(settings)
    return outcome.key, outcome.as_dict()

def run_acceptance(settings, jobs=1, only=None):
    """Evaluate the acceptance criteria and return results sorted by criterion key"""
    criteria = [c for c in CRITERIA if only is None or c.__name__ in only]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, criteria, [settings] * len(criteria)))
    else:
        results = [_run(criterion, settings) for criterion in criteria]
    criteria_report = dict(sorted(results))
    return {
        'passed': all(result['passed'] for result in criteria_report.values()),
        'settings': vars(settings),
        'criteria': criteria_report,
    }
