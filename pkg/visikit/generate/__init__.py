from .random_arrangements import random_arrangement, random_sweep
from .families import complete_graph_arrangement, quasiplanar_counterexample, forced_peel_family
from .forced_peel import forced_peel_analysis, ForcedPeelReport
