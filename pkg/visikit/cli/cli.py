import argparse
import contextlib
import logging
import sys

from ..config import Settings
from ..errors import DomainError, SchemaError
from ..generate.families import complete_graph_arrangement, forced_peel_family, quasiplanar_counterexample
from ..generate.forced_peel import forced_peel_analysis
from ..generate.random_arrangements import random_arrangement
from ..model.arrangements import CYL, FLAT
from ..model.graphs import ConvexDrawing
from ..quasiplanar.bounds import j_pairs, max_edges
from ..quasiplanar.completion import is_maximal, maximal_completion
from ..quasiplanar.crossings import max_pairwise_crossing
from ..quasiplanar.degeneracy import color_count, degeneracy, greedy_color
from ..transform.curl import curl, curl_preserves, cut, is_small
from ..transform.embed import embed
from ..transform.peel import flat_peel, peel
from ..visibility.oracle import sightline_oracle
from ..visibility.visibility import visibility
from . import serialize
from .svg import export_svg
from .verify import run_acceptance

log = logging.getLogger(__name__)

FAMILIES = ('random', 'k-complete', 'counterexample', 'forced-peel')


# Method group A: reading inputs

def read_text(path):
    """Read a file, or stdin for '-'"""
    if path in (None, '-'):
        return sys.stdin.read()
    with open(path, encoding='utf-8') as handle:
        return handle.read()

def resolve_k(args, default=0):
    return default if args.k is None else args.k

def load_arrangement(args):
    """Build an arrangement from --lengths or from a JSON file"""
    if getattr(args, 'lengths', None):
        return serialize.parse_arrangement({
            'kind': args.kind or CYL,
            'k': resolve_k(args),
            'lengths': list(serialize.parse_lengths(args.lengths)),
        })
    path = getattr(args, 'arrangement', None) or args.input
    data = serialize.loads(read_text(path))
    arrangement = serialize.parse_arrangement(data, kind=args.kind or CYL)
    if args.k is not None:
        arrangement = arrangement.with_k(args.k)
    return arrangement

def load_drawing(args):
    path = getattr(args, 'drawing', None) or args.input
    return serialize.parse_drawing(serialize.loads(read_text(path)))

def load_graph(args):
    """Read a graph file, or take the visibility graph of a given arrangement"""
    if getattr(args, 'lengths', None) or getattr(args, 'arrangement', None):
        return visibility(load_arrangement(args))
    path = getattr(args, 'drawing', None) or args.input
    return serialize.parse_graph(serialize.loads(read_text(path)))

def parse_pair(text):
    try:
        a, b = (int(part) for part in text.split(','))
    except ValueError:
        raise SchemaError(f"Parse failed - pair must look like i,j, got {text!r}")
    return a, b


# Method group B: subcommands, each returning the value to write

def cmd_visibility(args):
    return visibility(load_arrangement(args))

def cmd_oracle(args):
    arrangement = load_arrangement(args)
    a, b = parse_pair(args.pair)
    return {'pair': [a, b], 'visible': sightline_oracle(arrangement, a, b)}

def cmd_check_quasiplanar(args):
    drawing = load_drawing(args)
    k = resolve_k(args)
    family = max_pairwise_crossing(drawing)
    witness = family[:k + 2] if len(family) >= k + 2 else []
    return {'quasiplanar': not witness, 'k': k, 'witness': witness}

def cmd_check_maximal(args):
    k = resolve_k(args)
    return {'maximal': is_maximal(load_drawing(args), k), 'k': k}

def cmd_complete(args):
    return maximal_completion(load_drawing(args), resolve_k(args))

def cmd_jpairs(args):
    drawing = ConvexDrawing(args.n) if args.n is not None else load_drawing(args)
    return {'j': args.j, 'pairs': sorted(j_pairs(drawing, args.j))}

def cmd_max_edges(args):
    k = resolve_k(args)
    return {'n': args.n, 'k': k, 'max_edges': max_edges(args.n, k)}

def cmd_degeneracy(args):
    value, order = degeneracy(load_graph(args))
    return {'degeneracy': value, 'order': order}

def cmd_color(args):
    graph = load_graph(args)
    _, order = degeneracy(graph)
    coloring = greedy_color(graph, order)
    return {'colors': coloring, 'count': color_count(coloring)}

def cmd_embed(args):
    return embed(load_arrangement(args))

def cmd_peel(args):
    _, trace = peel(load_drawing(args), resolve_k(args), force=args.force)
    return trace

def cmd_flat_peel(args):
    _, trace = flat_peel(load_drawing(args))
    return trace

def cmd_curl(args):
    args.kind = args.kind or FLAT
    return curl(load_arrangement(args))

def cmd_curl_preserves(args):
    args.kind = args.kind or FLAT
    flat = load_arrangement(args)
    return {'preserves': curl_preserves(flat), 'small': is_small(flat)}

def cmd_cut(args):
    return cut(load_arrangement(args))

def cmd_gen(args):
    k = resolve_k(args, default=1 if args.family in ('counterexample', 'forced-peel') else 0)
    if args.family == 'random':
        if args.n is None:
            raise SchemaError("Parse failed - gen --family random needs --n")
        arrangement = random_arrangement(args.n, k, args.seed, args.kind or CYL)
        return {**serialize.arrangement_to_dict(arrangement), 'seed': args.seed}
    if args.family == 'k-complete':
        return complete_graph_arrangement(k)
    if args.family == 'counterexample':
        return quasiplanar_counterexample(k)
    return forced_peel_family(k)

def cmd_forced_peel_analysis(args):
    k = resolve_k(args, default=1)
    report = forced_peel_analysis(load_drawing(args), k, args.steps, exhaustive=args.exhaustive)
    return {
        'k': report.k,
        'steps': report.steps,
        'forced': list(report.forced),
        'all_forced': report.all_forced,
        'eligible': [list(choices) for choices in report.eligible],
        'arrangement': report.arrangement,
        'longest_adjacent': [list(pair) for pair in report.longest_adjacent],
        'orders_checked': report.orders_checked,
        'forced_under_every_order': report.forced_under_every_order,
        'adjacent_under_some_order': report.adjacent_under_some_order,
    }

def cmd_export_svg(args):
    if args.drawing:
        obj = load_drawing(args)
    else:
        obj = load_arrangement(args)
    if not args.output:
        raise SchemaError("Parse failed - export-svg needs --output")
    export_svg(obj, args.output)
    return None

def cmd_verify(args):
    settings = Settings.from_env().override(
        max_n=args.max_n,
        random_trials=args.trials,
        random_max_n=args.random_max_n,
        random_max_k=args.random_max_k,
        edge_count_max_n=args.edge_count_max_n,
        seed=args.seed,
    )
    report = run_acceptance(settings, jobs=args.jobs, only=args.only)
    args.exit_code = 0 if report['passed'] else 1
    return report


# Method group C: parser and entry point

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--k', type=int, default=None, help="visibility / quasiplanarity parameter")
    common.add_argument('--seed', type=int, default=0)
    common.add_argument('--input', default=None, help="JSON input file, '-' for stdin")
    common.add_argument('--output', default=None, help="write results here instead of stdout")
    common.add_argument('--format', choices=('json', 'tsv'), default='json')
    common.add_argument('--verbose', action='store_true')

    arrangement_input = argparse.ArgumentParser(add_help=False)
    arrangement_input.add_argument('--kind', choices=(FLAT, CYL), default=None)
    arrangement_input.add_argument('--lengths', default=None, help="comma separated lengths")
    arrangement_input.add_argument('--arrangement', default=None, help="arrangement JSON file")

    drawing_input = argparse.ArgumentParser(add_help=False)
    drawing_input.add_argument('--drawing', default=None, help="drawing JSON file")

    parser = argparse.ArgumentParser(prog='visikit', description="Semi-bar k-visibility graphs and quasiplanar convex drawings")
    commands = parser.add_subparsers(dest='command', required=True)

    def add(name, handler, *parents, **kwargs):
        sub = commands.add_parser(name, parents=[common, *parents], **kwargs)
        sub.set_defaults(handler=handler)
        return sub

    add('visibility', cmd_visibility, arrangement_input)
    add('oracle', cmd_oracle, arrangement_input).add_argument('--pair', required=True, help="i,j")
    add('check-quasiplanar', cmd_check_quasiplanar, drawing_input)
    add('check-maximal', cmd_check_maximal, drawing_input)
    add('complete', cmd_complete, drawing_input)
    jpairs = add('jpairs', cmd_jpairs, drawing_input)
    jpairs.add_argument('--j', type=int, required=True)
    jpairs.add_argument('--n', type=int, default=None)
    add('max-edges', cmd_max_edges).add_argument('--n', type=int, required=True)
    add('degeneracy', cmd_degeneracy, arrangement_input, drawing_input)
    add('color', cmd_color, arrangement_input, drawing_input)
    add('embed', cmd_embed, arrangement_input)
    add('peel', cmd_peel, drawing_input).add_argument('--force', action='store_true', help="peel without the maximality check")
    add('flat-peel', cmd_flat_peel, drawing_input)
    add('curl', cmd_curl, arrangement_input)
    add('curl-preserves', cmd_curl_preserves, arrangement_input)
    add('cut', cmd_cut, arrangement_input)
    gen = add('gen', cmd_gen)
    gen.add_argument('--family', choices=FAMILIES, required=True)
    gen.add_argument('--n', type=int, default=None)
    gen.add_argument('--kind', choices=(FLAT, CYL), default=None)
    analysis = add('forced-peel-analysis', cmd_forced_peel_analysis, drawing_input)
    analysis.add_argument('--steps', type=int, required=True)
    analysis.add_argument('--exhaustive', action='store_true')
    add('export-svg', cmd_export_svg, arrangement_input, drawing_input)
    verify = add('verify', cmd_verify)
    verify.add_argument('--max-n', type=int, default=None)
    verify.add_argument('--trials', type=int, default=None)
    verify.add_argument('--random-max-n', type=int, default=None)
    verify.add_argument('--random-max-k', type=int, default=None)
    verify.add_argument('--edge-count-max-n', type=int, default=None, help="largest n of the edge-count sweep")
    verify.add_argument('--jobs', type=int, default=1)
    verify.add_argument('--only', nargs='*', default=None, help="criterion function names")
    return parser

def write_result(result, args, stdout):
    text = serialize.to_tsv(result) if args.format == 'tsv' else serialize.dumps(result)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as handle:
            handle.write(text)
    else:
        stdout.write(text)

def run(argv=None, stdout=None, stderr=None):
    """Run one subcommand; returns 0 on success, 1 on a domain error, 2 on malformed input"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        # argparse writes usage and help to the process streams
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = build_parser().parse_args(argv)
    except SystemExit as stop:
        return stop.code
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=stderr)
    args.exit_code = 0
    try:
        result = args.handler(args)
        if result is not None:
            write_result(result, args, stdout)
    except DomainError as error:
        stderr.write(f"{error}\n")
        return 1
    except (SchemaError, OSError) as error:
        stderr.write(f"{error}\n")
        return 2
    return args.exit_code

def main():
    sys.exit(run())
