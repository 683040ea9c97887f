import contextlib
import io
import json
import os
import tempfile
import unittest
from unittest import mock

from ..cli import serialize, verify
from ..cli.cli import run
from ..cli.svg import render_svg
from ..config import Settings
from ..demo import run_demo
from ..errors import DomainError, SchemaError
from ..generate.families import forced_peel_family
from ..model.arrangements import CylArrangement, FlatArrangement
from ..model.graphs import ConvexDrawing, Graph
from ..transform.peel import peel

TEN_BARS = "1,6,2,7,3,8,4,9,5,10"
SQUARE_DIAGONAL = {'n': 4, 'edges': [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2]]}
TRIANGLE = {'n': 3, 'edges': [[0, 1], [1, 2], [0, 2]]}

def setUpModule():
    print("Setting up the CLI test module")

def tearDownModule():
    print("Shutting down the CLI test module")

class CommandLine(unittest.TestCase):
    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def write_json(self, name, data):
        path = os.path.join(self.folder.name, name)
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(data if isinstance(data, str) else json.dumps(data))
        return path

    def invoke(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        with contextlib.redirect_stderr(stderr):
            code = run(list(argv), stdout, stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    def invoke_json(self, *argv):
        code, out, err = self.invoke(*argv)
        self.assertEqual(code, 0, f"expected success, got {code}: {err}")
        return json.loads(out)

    def test_visibility(self):
        result = self.invoke_json('visibility', '--lengths', TEN_BARS, '--k', '1')
        self.assertEqual((result['n'], len(result['edges'])), (10, 30), "expected 30 edges on 10 bars")

    def test_oracle(self):
        result = self.invoke_json('oracle', '--lengths', '1,2,3,4', '--pair', '1,3')
        self.assertTrue(result['visible'], "expected bars 1 and 3 to see each other around the cylinder")

    def test_check_quasiplanar(self):
        path = self.write_json('drawing.json', {'n': 6, 'edges': [[0, 3], [1, 4], [2, 5]]})
        result = self.invoke_json('check-quasiplanar', '--drawing', path, '--k', '0')
        self.assertFalse(result['quasiplanar'], "expected three diameters to break planarity")
        self.assertEqual(len(result['witness']), 2, "expected a crossing pair as witness")
        result = self.invoke_json('check-quasiplanar', '--drawing', path, '--k', '1')
        self.assertEqual(len(result['witness']), 3, "expected all three diameters as witness for k=1")
        result = self.invoke_json('check-quasiplanar', '--drawing', path, '--k', '2')
        self.assertEqual(result, {'quasiplanar': True, 'k': 2, 'witness': []}, "expected no witness for k=2")

    def test_peel(self):
        path = self.write_json('square.json', SQUARE_DIAGONAL)
        result = self.invoke_json('peel', '--drawing', path, '--k', '0')
        self.assertEqual(result['output']['lengths'], [2, 1, 3, 4], "expected the hand peel result")
        self.assertEqual([s['vertex'] for s in result['steps']], [1, 0, 2, 3], "expected the lowest eligible order")

    def test_flat_peel(self):
        path = self.write_json('triangle.json', TRIANGLE)
        result = self.invoke_json('flat-peel', '--drawing', path)
        self.assertEqual(result['output'], {'kind': 'flat', 'k': 0, 'lengths': [2, 1, 3]}, "expected lengths 2, 1, 3")

    def test_max_edges(self):
        result = self.invoke_json('max-edges', '--n', '10', '--k', '1')
        self.assertEqual(result['max_edges'], 30, "expected (k+1)(2n-2k-3)")

    def test_curl_preserves(self):
        result = self.invoke_json('curl-preserves', '--lengths', '2,1,3')
        self.assertEqual(result, {'preserves': True, 'small': False}, "expected [2,1,3] to be preserved")

    def test_cut_failure(self):
        code, _, err = self.invoke('cut', '--lengths', '5,1,4,2,3')
        self.assertEqual(code, 1, "expected a domain error exit code")
        self.assertIn("two longest not adjacent", err, "expected the reason on stderr")

    def test_unknown_subcommand(self):
        stdout, stderr = io.StringIO(), io.StringIO()
        code = run(['frobnicate'], stdout, stderr)
        self.assertEqual(code, 2, "expected argparse to reject the subcommand")
        self.assertIn("invalid choice", stderr.getvalue(), "expected the usage error on the given stderr")

    def test_bad_json(self):
        path = self.write_json('broken.json', "{not json")
        code, _, err = self.invoke('check-maximal', '--drawing', path)
        self.assertEqual(code, 2, "expected a malformed input exit code")
        self.assertIn("invalid JSON", err, "expected the parse error on stderr")

    def test_invalid_drawing(self):
        path = self.write_json('loop.json', {'n': 3, 'edges': [[1, 1]]})
        code, _, err = self.invoke('check-maximal', '--drawing', path)
        self.assertEqual(code, 2, "expected validation to reject a self-loop")
        self.assertIn("self-loop", err, "expected the violation on stderr")

    def test_gen_random(self):
        first = self.invoke_json('gen', '--family', 'random', '--n', '9', '--seed', '4')
        second = self.invoke_json('gen', '--family', 'random', '--n', '9', '--seed', '4')
        self.assertEqual(first, second, "expected the same seed to give the same arrangement")
        self.assertEqual(first['seed'], 4, "expected the seed in the output")
        self.assertEqual(sorted(first['lengths']), list(range(1, 10)), "expected a permutation")

    def test_gen_forced_peel(self):
        result = self.invoke_json('gen', '--family', 'forced-peel', '--k', '1')
        self.assertEqual(result['lengths'], [int(v) for v in TEN_BARS.split(',')], "expected the ten bar family")

    def test_tsv(self):
        code, out, _ = self.invoke('embed', '--lengths', '3,1,2', '--format', 'tsv')
        self.assertEqual(code, 0, "expected the embed to succeed")
        self.assertEqual(out, "a\tb\n0\t1\n0\t2\n1\t2\n", "expected one row per chord")

    def test_output_file(self):
        target = os.path.join(self.folder.name, 'out.json')
        code, out, _ = self.invoke('embed', '--lengths', '3,1,2', '--output', target)
        self.assertEqual((code, out), (0, ""), "expected nothing on stdout")
        with open(target, encoding='utf-8') as handle:
            self.assertEqual(json.load(handle)["n"], 3, "expected the triangle in the output file")

    def test_export_svg(self):
        target = os.path.join(self.folder.name, 'bars.svg')
        code, _, _ = self.invoke('export-svg', '--lengths', TEN_BARS, '--k', '1', '--output', target)
        self.assertEqual(code, 0, "expected the export to succeed")
        with open(target, encoding='utf-8') as handle:
            document = handle.read()
        self.assertEqual(document.count('stroke="steelblue"'), 10, "expected one radial segment per bar")
        self.assertTrue(document.startswith('<svg'), "expected an SVG document")

    def test_export_svg_needs_output(self):
        code, _, _ = self.invoke('export-svg', '--lengths', '1,2')
        self.assertEqual(code, 2, "expected a missing --output to count as malformed input")

    def test_verify(self):
        code, out, err = self.invoke(
            'verify', '--max-n', '4', '--trials', '3', '--random-max-n', '8', '--random-max-k', '2',
            '--edge-count-max-n', '5',
            '--only', 'check_edge_count', 'check_oracle', 'check_curl', 'check_round_trip'
        )
        self.assertEqual(code, 0, f"expected every criterion to pass: {out}{err}")
        report = json.loads(out)
        self.assertEqual(
            sorted(report['criteria']),
            ['1-edge-count', '3-oracle-equivalence', '4-curl-iff', '5-peel-round-trip'],
            "expected only the selected criteria"
        )
        self.assertEqual(report['criteria']['1-edge-count']['details'], {'max_n': 5}, "expected the edge-count cap in the report")

class Demo(unittest.TestCase):
    def test_ten_bars(self):
        with contextlib.redirect_stdout(io.StringIO()) as out:
            report = run_demo()
        self.assertIn("visibility edges: 30 (bound 30)", out.getvalue(), "expected the demo to reach the edge bound")
        self.assertIn("forced steps before the first free choice: 4", out.getvalue(), "expected four forced steps")
        self.assertEqual(report.eligible[-1], (3, 8), "expected the first free step to choose between points 3 and 8")
        self.assertEqual(report.longest_adjacent, ((7, 8), (8, 9)), "expected the adjacent long bars to be reported")

class Acceptance(unittest.TestCase):
    def test_forced_peel_is_reported(self):
        outcome = verify.check_forced_peel(Settings())
        result = outcome.as_dict()
        self.assertTrue(result['passed'], f"expected only maximality to be asserted: {result}")
        ten_bars = result['details']['k=1']
        self.assertEqual(ten_bars['forced_steps'], 4, "expected four forced steps for k=1")
        self.assertEqual(ten_bars['first_free_choice'], [3, 8], "expected the free choice for k=1")
        self.assertEqual(ten_bars['orders_checked'], 240, "expected every peel order followed for k=1")
        self.assertTrue(ten_bars['adjacent_under_some_order'], "expected adjacency to be reported for k=1")
        larger = result['details']['k=2']
        self.assertEqual(larger['forced_steps'], 13, "expected thirteen forced steps for k=2")
        self.assertEqual(larger['first_free_choice'], [8, 19], "expected the free choice for k=2")

    def test_domain_error_counts_as_failure(self):
        broken = DomainError("Peel failed - visibility of the peeled arrangement differs from the drawing")
        with mock.patch.object(verify, 'peel', side_effect=broken):
            result = verify.check_round_trip(Settings(max_n=3, random_trials=0)).as_dict()
        self.assertFalse(result['passed'], "expected the criterion to fail instead of raising")
        self.assertEqual(result['checked'], 27, "expected every instance to be tallied")
        self.assertEqual(len(result['failures']), verify.MAX_FAILURES, "expected the failure list to be capped")
        self.assertIn("differs from the drawing", result['failures'][0]['error'], "expected the reason recorded")
        self.assertEqual(result['failures'][0]['lengths'], [1], "expected the instance label kept")

    def test_edge_count_cap_from_environment(self):
        settings = Settings.from_env({'VISIKIT_EDGE_COUNT_MAX_N': '6', 'VISIKIT_MAX_N': 'many'})
        self.assertEqual(settings.edge_count_max_n, 6, "expected the edge-count cap from the environment")
        self.assertEqual(settings.max_n, 8, "expected a malformed value to fall back to the default")
        self.assertEqual(Settings().edge_count_max_n, 9, "expected the edge-count sweep to reach n=9 by default")

class Drawings(unittest.TestCase):
    def test_triangle(self):
        document = render_svg(ConvexDrawing(3, [(0, 1), (1, 2), (0, 2)]))
        self.assertEqual(document.count('<line'), 3, "expected one line per chord")
        self.assertEqual(document.count('r="4"'), 3, "expected one dot per point")

    def test_single_point(self):
        document = render_svg(ConvexDrawing(1))
        self.assertEqual(document.count('r="4"'), 1, "expected a single dot")
        self.assertEqual(document.count('<line'), 0, "expected no chords")

    def test_flat_bars(self):
        document = render_svg(FlatArrangement((2, 1, 3), 0))
        self.assertEqual(document.count('stroke="steelblue"'), 3, "expected one bar per length")

    def test_deterministic(self):
        arrangement = forced_peel_family(2)
        self.assertEqual(render_svg(arrangement), render_svg(arrangement), "expected byte-identical output")

class Serialization(unittest.TestCase):
    def round_trip(self, obj, parser):
        return parser(json.loads(serialize.dumps(obj)))

    def test_arrangements(self):
        for arrangement in (CylArrangement((3, 1, 2), 1), FlatArrangement((1, 2), 0)):
            self.assertEqual(self.round_trip(arrangement, serialize.parse_arrangement), arrangement, f"expected {arrangement} back from JSON")

    def test_drawing_and_graph(self):
        drawing = ConvexDrawing(4, [(0, 1), (2, 3)])
        self.assertEqual(self.round_trip(drawing, serialize.parse_drawing), drawing, "expected the drawing back from JSON")
        graph = Graph(3, [(0, 2)], ('a', 'b', 'c'))
        self.assertEqual(self.round_trip(graph, serialize.parse_graph), graph, "expected the labeled graph back from JSON")

    def test_trace(self):
        _, trace = peel(ConvexDrawing(3, [(0, 1), (1, 2), (0, 2)]), 0)
        self.assertEqual(self.round_trip(trace, serialize.parse_trace), trace, "expected the trace back from JSON")

    def test_schema_errors(self):
        with self.assertRaises(SchemaError):
            serialize.parse_arrangement({'kind': 'flat', 'lengths': [1, 'two']})
        with self.assertRaises(SchemaError):
            serialize.parse_arrangement({'kind': 'cone', 'lengths': [1]})
        with self.assertRaises(SchemaError):
            serialize.parse_drawing({'n': 3, 'edges': [[0, 1, 2]]})
        with self.assertRaises(SchemaError) as context:
            serialize.parse_arrangement({'kind': 'cyl', 'k': -1, 'lengths': [1]})
        self.assertIn("k:", str(context.exception), "expected the validation message")

    def test_lengths(self):
        self.assertEqual(serialize.parse_lengths("1, 6,2"), (1, 6, 2))
        with self.assertRaises(SchemaError):
            serialize.parse_lengths("1,x")

if __name__ == '__main__':
    unittest.main()
