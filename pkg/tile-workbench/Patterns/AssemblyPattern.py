from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from Patterns.Pattern import Pattern
from TileModel.Assembly import Assembly
from TileModel.Palette import DEFAULT_PALETTE


@dataclass(frozen=True)
class NotRectangular:
    hole: Tuple[int, int]


def assembly_pattern(asm: Assembly, tile_color: Callable[[int], int], palette: Sequence[str] = DEFAULT_PALETTE,
                     normalize: bool = True, z: Optional[int] = None) -> Union[Pattern, NotRectangular]:
    """Colored grid of a rectangular assembly (one plane of it when `z` is given).

    The first hole is reported scanning rows from the south, west to east.
    """
    cells = {(x, y): tile_color(idx) for (x, y, lz), idx in asm.items() if z is None or lz == z}
    if not cells:
        raise ValueError("assembly has no tiles in the requested plane")
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    x0, y0 = min(xs), min(ys)
    width, height = max(xs) - x0 + 1, max(ys) - y0 + 1

    grid = np.full((width, height), -1, dtype=np.int16)
    for (x, y), color in cells.items():
        grid[x - x0, y - y0] = color
    holes = np.argwhere((grid < 0).T)
    if len(holes):
        y, x = (int(v) for v in holes[0])
        return NotRectangular((x + x0, y + y0))
    return Pattern(grid, palette, (0, 0) if normalize else (x0, y0))
