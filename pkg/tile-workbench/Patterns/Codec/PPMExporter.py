from typing import Dict, Optional, Tuple

import numpy as np

from ConfigValidator.CustomErrors.ModelErrors import ParseError
from ConfigValidator.CustomErrors.PatternErrors import MissingColorError
from Patterns.Pattern import Pattern
from TileModel.Palette import DEFAULT_RGB

RGB = Tuple[int, int, int]


def export_ppm(pattern: Pattern, color_map: Optional[Dict[str, RGB]] = None) -> bytes:
    """Plain-text P3 image, one text line per grid row from north to south."""
    color_map = DEFAULT_RGB if color_map is None else color_map
    lut = np.zeros((len(pattern.palette), 3), dtype=np.int32)
    for color_id in sorted(pattern.colors_present()):
        name = pattern.palette[color_id]
        if name not in color_map:
            raise MissingColorError(color_id, name)
        lut[color_id] = color_map[name]

    pixels = lut[pattern.rows()]
    lines = ["P3", f"{pattern.width} {pattern.height}", "255"]
    for row in pixels:
        lines.append(" ".join(f"{r} {g} {b}" for r, g, b in row))
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_color_map(text: str) -> Dict[str, RGB]:
    """Lines of `<name> <r> <g> <b>`."""
    colors = {}
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if len(tokens) != 4:
            raise ParseError(number, "expected `<name> <r> <g> <b>`")
        try:
            rgb = tuple(int(t) for t in tokens[1:])
        except ValueError:
            raise ParseError(number, "RGB components must be integers")
        if any(not 0 <= v <= 255 for v in rgb):
            raise ParseError(number, "RGB components must lie in [0, 255]")
        colors[tokens[0]] = rgb
    return colors
