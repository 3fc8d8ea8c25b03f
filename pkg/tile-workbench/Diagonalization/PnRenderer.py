from typing import Dict, Sequence, Tuple

import numpy as np

from Patterns.Pattern import Pattern
from TileModel.Palette import Color

# (row bit, column bit) -> color
BOUNDARY_COLORS: Dict[Tuple[int, int], Color] = {
    (0, 0): Color.RED,
    (0, 1): Color.GREEN,
    (1, 0): Color.BLACK,
    (1, 1): Color.WHITE,
}
INTERIOR_COLORS: Dict[Tuple[int, int], Color] = {
    (0, 0): Color.FUCHSIA,
    (0, 1): Color.BLUE,
    (1, 0): Color.YELLOW,
    (1, 1): Color.AQUA,
}
BOUNDARY = frozenset(BOUNDARY_COLORS.values())
INTERIOR = frozenset(INTERIOR_COLORS.values())

_DECODE = {int(c): (bits, True) for bits, c in BOUNDARY_COLORS.items()}
_DECODE.update({int(c): (bits, False) for bits, c in INTERIOR_COLORS.items()})


def cell_color(row_bit: int, col_bit: int, boundary: bool) -> Color:
    return (BOUNDARY_COLORS if boundary else INTERIOR_COLORS)[(row_bit, col_bit)]


def decode_color(color: int) -> Tuple[Tuple[int, int], bool]:
    """((row bit, column bit), is boundary) of a grid color."""
    return _DECODE[int(color)]


def render_pn(bits: Sequence[int], c: int, m: int) -> Pattern:
    """m x m grid of c x c cells, offsets measured from the north-west corner.

    Row offset i and column offset i of every cell carry bits[i mod |bits|]; offset 0 is the cell
    boundary. Cells along the east and south edges are cut short when c does not divide m.
    """
    if c < 2:
        raise ValueError(f"cell size must be at least 2, found {c}")
    if len(bits) < 1:
        raise ValueError("bit sequence is empty")
    if m < 1:
        raise ValueError(f"square size must be positive, found {m}")

    offsets = np.arange(m) % c
    lane_bits = np.array([int(bits[i % len(bits)]) for i in range(c)], dtype=np.int16)[offsets]
    row_bit = lane_bits[:, None]         # rows north to south
    col_bit = lane_bits[None, :]
    boundary = (offsets[:, None] == 0) | (offsets[None, :] == 0)

    table = np.zeros((2, 2, 2), dtype=np.int16)
    for (r, q), color in BOUNDARY_COLORS.items():
        table[1, r, q] = color
    for (r, q), color in INTERIOR_COLORS.items():
        table[0, r, q] = color
    rows = table[boundary.astype(np.int16), row_bit, col_bit]
    return Pattern.from_rows(rows)
