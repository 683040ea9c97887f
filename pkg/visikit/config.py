import logging
import os

log = logging.getLogger(__name__)

# environment variable name: (settings attribute, default)
DEFAULTS = {
    'VISIKIT_MAX_N': ('max_n', 8),
    'VISIKIT_RANDOM_TRIALS': ('random_trials', 1000),
    'VISIKIT_RANDOM_MAX_N': ('random_max_n', 40),
    'VISIKIT_RANDOM_MAX_K': ('random_max_k', 4),
    'VISIKIT_EDGE_COUNT_MAX_N': ('edge_count_max_n', 9),
}


class Settings:
    def __init__(self, max_n=8, random_trials=1000, random_max_n=40, random_max_k=4, seed=0, edge_count_max_n=9):
        # cap for exhaustive permutation sweeps
        self.max_n = max_n
        # seeded random sweep shape
        self.random_trials = random_trials
        self.random_max_n = random_max_n
        self.random_max_k = random_max_k
        self.seed = seed
        # cap for the edge-count sweep, independent of max_n
        self.edge_count_max_n = edge_count_max_n

    @classmethod
    def from_env(cls, environ=None):
        """Build settings from VISIKIT_* environment variables"""
        environ = os.environ if environ is None else environ
        values = {}
        for variable, (attribute, default) in DEFAULTS.items():
            raw = environ.get(variable)
            if raw is None:
                values[attribute] = default
                continue
            try:
                value = int(raw)
            except ValueError:
                value = -1
            if value < 1:
                log.warning(f"Settings from_env failed - invalid {variable}={raw!r}, using {default}")
                value = default
            values[attribute] = value
        return cls(**values)

    def override(self, **overrides):
        """Return a copy with every non-None override applied"""
        values = dict(vars(self))
        values.update({k: v for k, v in overrides.items() if v is not None})
        return Settings(**values)

    def __repr__(self):
        return f"Settings({', '.join(f'{k}={v}' for k, v in vars(self).items())})"
