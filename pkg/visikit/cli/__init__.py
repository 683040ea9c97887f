from .cli import run, main
from .svg import export_svg, render_svg
