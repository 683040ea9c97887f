from .arrangements import FlatArrangement, CylArrangement, Arrangement, FLAT, CYL, rotate, reflect
from .graphs import Graph, ConvexDrawing
from .trace import PeelStep, PeelTrace
from .cyclic import cyclic_between, CW, CCW
from .validation import validate, require_valid, require_distinct
