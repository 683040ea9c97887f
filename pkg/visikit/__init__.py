from .errors import VisikitError, DomainError, SchemaError
from .model import FlatArrangement, CylArrangement, ConvexDrawing, Graph, PeelTrace, validate, cyclic_between
from .visibility import flat_visibility, cyl_visibility, sightline_oracle, shorter_bar_edge_count
from .quasiplanar import (
    chords_cross, find_pairwise_crossing, is_quasiplanar, is_maximal, maximal_completion,
    j_pairs, max_edges, degeneracy, greedy_color,
)
from .transform import embed, peel, flat_peel, curl, curl_preserves, cut
from .generate import (
    random_arrangement, complete_graph_arrangement, quasiplanar_counterexample,
    forced_peel_family, forced_peel_analysis,
)
