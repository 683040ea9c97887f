import random

from ..errors import DomainError
from ..model.arrangements import CYL, FLAT, CylArrangement, FlatArrangement

KINDS = {FLAT: FlatArrangement, CYL: CylArrangement}


def random_arrangement(n, k, seed, kind=CYL):
    """Shuffle the lengths 1..n with a generator seeded by `seed`"""
    if n < 1:
        raise DomainError(f"Random arrangement failed - n must be >= 1, got {n}")
    if kind not in KINDS:
        raise DomainError(f"Random arrangement failed - unknown kind {kind!r}")
    lengths = list(range(1, n + 1))
    random.Random(seed).shuffle(lengths)
    return KINDS[kind](tuple(lengths), k)

def random_sweep(trials, max_n, max_k, seed):
    """Draw (n, k, arrangement) triples for a seeded random sweep"""
    rng = random.Random(seed)
    for trial in range(trials):
        k = rng.randint(0, max_k)
        n = rng.randint(1, max_n)
        yield trial, random_arrangement(n, k, rng.randrange(2 ** 32), CYL)
