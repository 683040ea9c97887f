from .generate.families import forced_peel_family
from .generate.forced_peel import forced_peel_analysis
from .quasiplanar.bounds import max_edges
from .quasiplanar.completion import is_maximal
from .quasiplanar.crossings import is_quasiplanar
from .transform.embed import embed
from .transform.peel import peel
from .visibility.visibility import cyl_visibility

def run_demo(k=1):
    """Walk the ten-bar arrangement 1, 6, 2, 7, 3, 8, 4, 9, 5, 10 through embed and peel"""
    arrangement = forced_peel_family(k)
    graph = cyl_visibility(arrangement)
    print(f"Arrangement {list(arrangement.lengths)} with k={k}")
    print(f"  visibility edges: {graph.m} (bound {max_edges(arrangement.n, k)})")

    drawing = embed(arrangement)
    print(f"  drawing is {k + 2}-quasiplanar: {is_quasiplanar(drawing, k)}")
    print(f"  drawing is maximal: {is_maximal(drawing, k)}")

    rebuilt, trace = peel(drawing, k)
    print(f"  peeled lengths by position: {list(rebuilt.lengths)}")
    print(f"  forced steps before the first free choice: {trace.forced_prefix()}")

    report = forced_peel_analysis(drawing, k, trace.forced_prefix() + 1)
    print(f"  choices at the first free step: {list(report.eligible[-1])}")
    print(f"  adjacent pairs among the {2 * k + 3} longest bars: {[list(p) for p in report.longest_adjacent]}")
    return report

if __name__ == '__main__':
    run_demo()
