import json
from numbers import Integral

from ..errors import SchemaError
from ..model.arrangements import CYL, FLAT, Arrangement, CylArrangement, FlatArrangement
from ..model.graphs import ConvexDrawing, Graph
from ..model.trace import PeelStep, PeelTrace
from ..model.validation import validate

KINDS = {FLAT: FlatArrangement, CYL: CylArrangement}


# Method group A: domain objects to plain JSON-ready values

def arrangement_to_dict(arrangement):
    return {'kind': arrangement.kind, 'k': arrangement.k, 'lengths': list(arrangement.lengths)}

def drawing_to_dict(drawing):
    return {'n': drawing.n, 'edges': [list(edge) for edge in drawing.edges]}

def graph_to_dict(graph):
    data = drawing_to_dict(graph)
    if graph.labels is not None:
        data['labels'] = list(graph.labels)
    return data

def trace_to_dict(trace):
    return {
        'steps': [
            {'vertex': s.vertex, 'length': s.length, 'degree': s.degree, 'forced': s.forced}
            for s in trace.steps
        ],
        'output': arrangement_to_dict(trace.output),
        'verified': trace.verified,
    }

def to_jsonable(value):
    """Convert domain objects (also nested in dicts, lists and tuples) to JSON values"""
    if isinstance(value, Arrangement):
        return arrangement_to_dict(value)
    if isinstance(value, Graph):
        return graph_to_dict(value)
    if isinstance(value, ConvexDrawing):
        return drawing_to_dict(value)
    if isinstance(value, PeelTrace):
        return trace_to_dict(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    return value

def dumps(value):
    """Serialize deterministically: fixed key order, two-space indent, trailing newline"""
    return json.dumps(to_jsonable(value), indent=2) + "\n"


# Method group B: plain values back to domain objects

def _require(condition, message):
    if not condition:
        raise SchemaError(f"Parse failed - {message}")

def _is_int(value):
    return isinstance(value, Integral) and not isinstance(value, bool)

def _int_list(value, field):
    _require(isinstance(value, list), f"{field} must be a list")
    _require(all(_is_int(v) for v in value), f"{field} must hold integers")
    return value

def _checked(obj):
    violations = validate(obj)
    _require(not violations, "; ".join(violations))
    return obj

def parse_arrangement(data, kind=None):
    _require(isinstance(data, dict), "arrangement must be an object")
    kind = data.get('kind', kind)
    _require(kind in KINDS, f"unknown arrangement kind {kind!r}")
    k = data.get('k', 0)
    _require(_is_int(k), "k must be an integer")
    lengths = _int_list(data.get('lengths'), 'lengths')
    return _checked(KINDS[kind](tuple(lengths), k))

def _parse_pairs(data):
    _require(isinstance(data, dict), "expected an object with n and edges")
    n = data.get('n')
    _require(_is_int(n), "n must be an integer")
    edges = data.get('edges', [])
    _require(isinstance(edges, list), "edges must be a list")
    for edge in edges:
        _int_list(edge, 'edge')
        _require(len(edge) == 2, "every edge must have two endpoints")
    return n, [tuple(edge) for edge in edges]

def parse_drawing(data):
    n, edges = _parse_pairs(data)
    return _checked(ConvexDrawing(n, edges))

def parse_graph(data):
    n, edges = _parse_pairs(data)
    labels = data.get('labels')
    _require(labels is None or isinstance(labels, list), "labels must be a list")
    return _checked(Graph(n, edges, None if labels is None else tuple(labels)))

def parse_trace(data):
    _require(isinstance(data, dict), "trace must be an object")
    steps = data.get('steps')
    _require(isinstance(steps, list), "steps must be a list")
    parsed = []
    for step in steps:
        _require(isinstance(step, dict), "every step must be an object")
        _require(all(_is_int(step.get(f)) for f in ('vertex', 'length', 'degree')), "step fields must be integers")
        _require(isinstance(step.get('forced'), bool), "step forced must be a boolean")
        parsed.append(PeelStep(step['vertex'], step['length'], step['degree'], step['forced']))
    verified = data.get('verified', True)
    _require(isinstance(verified, bool), "verified must be a boolean")
    return _checked(PeelTrace(tuple(parsed), parse_arrangement(data.get('output')), verified))

def parse_lengths(text):
    """Read a comma separated list of lengths such as 1,6,2,7"""
    try:
        return tuple(int(part) for part in text.split(',') if part.strip())
    except ValueError:
        raise SchemaError(f"Parse failed - lengths must be comma separated integers, got {text!r}")

def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise SchemaError(f"Parse failed - invalid JSON: {error}")


# Method group C: tab separated rows

def to_tsv(value):
    """Flatten a result into tab separated rows"""
    rows = []
    if isinstance(value, Arrangement):
        rows.append(("index", "length"))
        rows += list(enumerate(value.lengths))
    elif isinstance(value, (Graph, ConvexDrawing)):
        rows.append(("a", "b"))
        rows += list(value.edges)
    elif isinstance(value, PeelTrace):
        rows.append(("vertex", "length", "degree", "forced"))
        rows += [(s.vertex, s.length, s.degree, str(s.forced).lower()) for s in value.steps]
    elif isinstance(value, dict):
        for key, item in value.items():
            rows.append((key, _tsv_cell(item)))
    else:
        rows.append((_tsv_cell(value),))
    return "".join("\t".join(str(cell) for cell in row) + "\n" for row in rows)

def _tsv_cell(item):
    item = to_jsonable(item)
    if isinstance(item, bool):
        return str(item).lower()
    if isinstance(item, (list, dict)):
        return json.dumps(item, separators=(',', ':'))
    return item
