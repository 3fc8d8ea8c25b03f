from itertools import product
from typing import Callable, Dict, List, Tuple

from Compilers.Blueprint import Blueprint
from TileModel.Direction import Direction, Location
from TileModel.Glue import Glue, NULL_GLUE
from TileModel.Palette import Color


def skeleton_columns(lo: int, hi: int, k: int) -> List[int]:
    """Column positions in [lo, hi]; every other position lies at most k cells from a column along a rib.

    Columns sit every 2k + 1 positions from lo + k; a last column closes a remainder longer than k.
    """
    if hi < lo:
        return []
    cols = [min(lo + k, hi)]
    while cols[-1] + 2 * k + 1 <= hi:
        cols.append(cols[-1] + 2 * k + 1)
    if hi - cols[-1] > k:
        cols.append(cols[-1] + k + 1)
    return cols


def rib_spans(cols: List[int], lo: int, hi: int, k: int) -> Dict[int, Tuple[int, int]]:
    """column -> (west rib length, east rib length). A gap goes to the east rib first, up to k cells."""
    spans = {}
    for t, c in enumerate(cols):
        if t == 0:
            west = c - lo
        else:
            gap = c - cols[t - 1] - 1
            west = gap - min(gap, k)
        east = hi - c if t == len(cols) - 1 else min(cols[t + 1] - c - 1, k)
        spans[c] = (west, east)
    return spans


def rib_bit(color: int) -> str:
    return "1" if color == Color.BLACK else "0"


def rib_color(bits: str) -> int:
    return Color.BLACK if bits[0] == "1" else Color.WHITE


def lay_rib(bp: Blueprint, root: Location, direction: Direction, length: int,
            color_at: Callable[[Location], int], prefix: str, strength: int):
    """A rib of `length` cells growing from `root`. Its glues spell the colors still to be placed."""
    if length == 0:
        return
    cells = [direction.step(root, t) for t in range(1, length + 1)]
    bits = "".join(rib_bit(color_at(c)) for c in cells)
    bp.bond(root, direction, Glue(f"{prefix}:{bits}", strength))
    for t, loc in enumerate(cells):
        bp.cell(loc, rib_color(bits[t:]), f"{prefix}-{bits[t:]}", (direction.opposite,))
        if t + 1 < length:
            bp.bond(loc, direction, Glue(f"{prefix}:{bits[t + 1:]}", strength))


def add_rib_family(bp: Blueprint, k: int, prefix: str, strength: int, direction: Direction):
    """Every rib tile for strings of 1..k bits, whether the layout uses it or not."""
    for length in range(1, k + 1):
        for word in product("01", repeat=length):
            bits = "".join(word)
            rest = Glue(f"{prefix}:{bits[1:]}", strength) if length > 1 else NULL_GLUE
            bp.extra(f"{prefix}-{bits}", rib_color(bits),
                     **{direction.opposite.name: Glue(f"{prefix}:{bits}", strength), direction.name: rest})
