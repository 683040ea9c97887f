from .visibility import (
    flat_visibility, cyl_visibility, visibility, shorter_bar_edge_count,
    shorter_bar_edge_counts, longest_adjacent_pairs,
)
from .oracle import sightline_oracle
