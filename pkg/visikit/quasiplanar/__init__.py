from .crossings import (
    chords_cross, find_pairwise_crossing, is_quasiplanar, max_pairwise_crossing,
    creates_crossing_family, crossing_family_oracle,
)
from .completion import is_maximal, maximal_completion
from .bounds import j_pairs, max_edges, missing_low_pairs
from .degeneracy import degeneracy, greedy_color, color_count
