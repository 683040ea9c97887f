import logging
import math
from xml.sax.saxutils import escape

from ..errors import DomainError
from ..model.arrangements import CylArrangement, FlatArrangement
from ..model.graphs import IndexedEdges
from ..model.validation import require_valid

log = logging.getLogger(__name__)

SIZE = 400
MARGIN = 20
CENTER = SIZE / 2


def _num(value):
    # fixed precision keeps identical input byte-identical
    return f"{value:.3f}"

def _line(x1, y1, x2, y2, stroke="black", width=2):
    return (
        f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
        f'stroke="{stroke}" stroke-width="{width}"/>'
    )

def _point(x, y, label):
    return (
        f'<circle cx="{_num(x)}" cy="{_num(y)}" r="4" fill="black"/>'
        f'<text x="{_num(x + 6)}" y="{_num(y - 6)}" font-size="10">{escape(str(label))}</text>'
    )

def _document(title, body):
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<title>{escape(title)}</title>',
        '<rect width="100%" height="100%" fill="white"/>',
        *body,
        '</svg>',
        '',
    ])

def flat_svg(arrangement):
    """Horizontal bars stacked bottom to top from the y-axis"""
    n = arrangement.n
    unit = (SIZE - 2 * MARGIN) / max(arrangement.lengths)
    gap = (SIZE - 2 * MARGIN) / (n + 1)
    body = [_line(MARGIN, MARGIN, MARGIN, SIZE - MARGIN, stroke="gray", width=1)]
    for position, length in enumerate(arrangement.lengths):
        y = SIZE - MARGIN - (position + 1) * gap
        body.append(_line(MARGIN, y, MARGIN + length * unit, y, stroke="steelblue", width=4))
    return _document(f"flat semi-bar arrangement, k={arrangement.k}", body)

def cyl_svg(arrangement):
    """Radial segments leaving a circle, one per bar in cyclic order"""
    n = arrangement.n
    inner = SIZE / 6
    unit = (CENTER - MARGIN - inner) / max(arrangement.lengths)
    body = [
        f'<circle cx="{_num(CENTER)}" cy="{_num(CENTER)}" r="{_num(inner)}" fill="none" stroke="gray" stroke-width="1"/>'
    ]
    for i, length in enumerate(arrangement.lengths):
        angle = 2 * math.pi * i / n - math.pi / 2
        dx, dy = math.cos(angle), math.sin(angle)
        outer = inner + length * unit
        body.append(_line(
            CENTER + inner * dx, CENTER + inner * dy,
            CENTER + outer * dx, CENTER + outer * dy,
            stroke="steelblue", width=4
        ))
    return _document(f"cylindrical semi-bar arrangement, k={arrangement.k}", body)

def drawing_svg(drawing):
    """Points on a circle joined by straight chords"""
    n = drawing.n
    radius = CENTER - 2 * MARGIN
    points = []
    for i in range(n):
        angle = 2 * math.pi * i / n - math.pi / 2
        points.append((CENTER + radius * math.cos(angle), CENTER + radius * math.sin(angle)))
    body = [_line(*points[a], *points[b], width=1) for a, b in drawing.edges]
    body += [_point(x, y, i) for i, (x, y) in enumerate(points)]
    return _document(f"convex geometric drawing, n={n}", body)

def render_svg(obj):
    """Render an arrangement or a drawing as an SVG document"""
    require_valid(obj, "Export SVG")
    if isinstance(obj, FlatArrangement):
        return flat_svg(obj)
    if isinstance(obj, CylArrangement):
        return cyl_svg(obj)
    if isinstance(obj, IndexedEdges):
        return drawing_svg(obj)
    raise DomainError(f"Export SVG failed - cannot draw {type(obj).__name__}")

def export_svg(obj, path):
    """Write the SVG rendering of obj to path"""
    document = render_svg(obj)
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(document)
    log.debug(f"Export SVG wrote {path}")
    return path
