from typing import Callable, Iterable, List, Sequence

from ConfigValidator.CustomErrors.CompilerErrors import SpecError
from Compilers.Blueprint import Blueprint
from TileModel.Direction import Direction, Location
from TileModel.Glue import Glue


def direction_to(a: Location, b: Location) -> Direction:
    delta = tuple(q - p for p, q in zip(a, b))
    for d in Direction:
        if d.offset == delta:
            return d
    raise SpecError(f"{a} and {b} are not adjacent")


def ring_cells(x0: int, y0: int, width: int, height: int) -> List[Location]:
    """Boundary cells of a rectangle, clockwise from its south-west corner."""
    if width == 1 or height == 1:
        return [(x, y, 0) for x in range(x0, x0 + width) for y in range(y0, y0 + height)]
    west = [(x0, y, 0) for y in range(y0, y0 + height)]
    north = [(x, y0 + height - 1, 0) for x in range(x0 + 1, x0 + width)]
    east = [(x0 + width - 1, y, 0) for y in range(y0 + height - 2, y0 - 1, -1)]
    south = [(x, y0, 0) for x in range(x0 + width - 2, x0, -1)]
    return west + north + east + south


def rotate_to(cells: Sequence[Location], start: Location) -> List[Location]:
    k = list(cells).index(start)
    return list(cells[k:]) + list(cells[:k])


def chain(bp: Blueprint, path: Sequence[Location], label: str, role: str, color: Callable[[Location], int],
          strength: int = 2, first_via: Iterable[Direction] = ()):
    """Hard-coded path: every cell after the first attaches to its predecessor through a unique glue."""
    for k, loc in enumerate(path):
        via = tuple(first_via) if k == 0 else (direction_to(loc, path[k - 1]),)
        bp.cell(loc, color(loc), role, via)
        if k + 1 < len(path):
            bp.bond(loc, direction_to(loc, path[k + 1]), Glue(f"{label}{k}", strength))


def fill_region(bp: Blueprint, xs: range, ys: range, label: str, role: str, color: Callable[[Location], int],
                via: Sequence[Direction]):
    """Cooperative filler: every face of every cell carries `label` at strength 1."""
    for x in xs:
        for y in ys:
            loc = (x, y, 0)
            bp.cell(loc, color(loc), role, via)
            for d in Direction.sides(2):
                bp.face(loc, d, Glue(label, 1))
