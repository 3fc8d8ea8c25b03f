from typing import Dict, Tuple

from Compilers.Blueprint import Blueprint
from Compilers.CompiledSystem import Budget, CompiledSystem, resolve_certify
from Compilers.Counter import CounterField, ZigZagCounter
from Compilers.Geometry import chain, fill_region, ring_cells, rotate_to
from Patterns.Generators import ceil_log2, single_pixel
from ProgressManager.Output.OutputProcedure import OutputProcedure as output
from TileModel.Direction import Direction
from TileModel.Glue import Glue
from TileModel.Palette import Color

# arm side -> (u_dir, v_dir) of its counter
ARM_AXES = {
    Direction.N: (Direction.E, Direction.N),
    Direction.E: (Direction.N, Direction.E),
    Direction.S: (Direction.E, Direction.S),
    Direction.W: (Direction.N, Direction.W),
}

# (arm side, lateral side) -> quadrant the lateral faces
QUADRANTS: Dict[Tuple[Direction, str], str] = {
    (Direction.N, "lo"): "nw", (Direction.N, "hi"): "ne",
    (Direction.E, "lo"): "se", (Direction.E, "hi"): "ne",
    (Direction.S, "lo"): "sw", (Direction.S, "hi"): "se",
    (Direction.W, "lo"): "sw", (Direction.W, "hi"): "nw",
}


def box_origin(n: int, i: int, side: int) -> int:
    """Low corner of the box along one axis; the pixel sits on the box corner nearer the middle."""
    return i if n - 1 - i >= i else i - side + 1


class PixelBox:
    """A hard-coded side x side ring around one pixel, a filled interior and four counter arms.

    The ring starts at the pixel and runs clockwise. Each arm is a stop counter that is `side`
    tiles wide and grows from the box to the square's edge; its laterals feed the quadrant fillers.
    """

    def __init__(self, n: int, pixel: Tuple[int, int], side: int):
        self.n = n
        self.pixel = (pixel[0], pixel[1], 0)
        self.side = side
        self.x0 = box_origin(n, pixel[0], side)
        self.y0 = box_origin(n, pixel[1], side)

    def arm_lengths(self) -> Dict[Direction, int]:
        s = self.side
        return {
            Direction.N: self.n - self.y0 - s,
            Direction.E: self.n - self.x0 - s,
            Direction.S: self.y0,
            Direction.W: self.x0,
        }

    def __arm_origin(self, d: Direction):
        x0, y0, s = self.x0, self.y0, self.side
        return {
            Direction.N: ((x0, y0 + s, 0), (x0, y0 + s - 1, 0)),
            Direction.E: ((x0 + s, y0, 0), (x0 + s - 1, y0, 0)),
            Direction.S: ((x0, y0 - 1, 0), (x0, y0, 0)),
            Direction.W: ((x0 - 1, y0, 0), (x0, y0, 0)),
        }[d]

    def lay_out(self, bp: Blueprint):
        s = self.side

        def color(loc):
            return Color.BLACK if loc == self.pixel else Color.WHITE

        ring = rotate_to(ring_cells(self.x0, self.y0, s, s), self.pixel)
        chain(bp, ring, "box:r", "box", color)
        fill_region(bp, range(self.x0 + 1, self.x0 + s - 1), range(self.y0 + 1, self.y0 + s - 1),
                    "box:f", "box-fill", color, (Direction.W, Direction.S))
        for x in range(self.x0 + 1, self.x0 + s - 1):
            bp.face((x, self.y0, 0), Direction.N, Glue("box:f", 1))
        for y in range(self.y0 + 1, self.y0 + s - 1):
            bp.face((self.x0, y, 0), Direction.E, Glue("box:f", 1))

        for d, length in self.arm_lengths().items():
            if length > 0:
                self.__lay_arm(bp, d, length)

    def __lay_arm(self, bp: Blueprint, d: Direction, length: int):
        u_dir, v_dir = ARM_AXES[d]
        origin, parent = self.__arm_origin(d)
        ns = f"arm-{d.name.lower()}"

        def lateral(side, flags, initial):
            return Glue(f"fill:{QUADRANTS[(d, side)]}", 1)

        counter = ZigZagCounter(ns, [CounterField.stop(length, self.side)])
        counter.lay_out(bp, origin, u_dir, v_dir, ns, lateral=lateral, entry=v_dir.opposite)
        bp.bond(parent, v_dir, Glue(f"{ns}:in", 2))

    def lay_out_quadrants(self, bp: Blueprint):
        n, s, x0, y0 = self.n, self.side, self.x0, self.y0
        white = lambda loc: Color.WHITE
        fill_region(bp, range(x0 + s, n), range(y0 + s, n), "fill:ne", "fill-ne", white, (Direction.W, Direction.S))
        fill_region(bp, range(0, x0), range(y0 + s, n), "fill:nw", "fill-nw", white, (Direction.E, Direction.S))
        fill_region(bp, range(x0 + s, n), range(0, y0), "fill:se", "fill-se", white, (Direction.W, Direction.N))
        fill_region(bp, range(0, x0), range(0, y0), "fill:sw", "fill-sw", white, (Direction.E, Direction.N))


def compile_single_pixel(n: int, i: int, j: int, certify=None) -> CompiledSystem:
    """Temperature-2 system whose unique terminal assembly is the n x n square, Black only at (i, j)."""
    target = single_pixel(n, i, j)
    box = PixelBox(n, (i, j), max(1, ceil_log2(n)))
    bp = Blueprint(f"single-pixel-{n}-{i}-{j}", 2)
    box.lay_out(bp)
    box.lay_out_quadrants(bp)
    bp.set_seed(box.pixel)
    system, _ = bp.compile(resolve_certify(certify))
    output.console_log_OK(f"single pixel ({i}, {j}) in {n}x{n}: {len(system.tileset)} tile types")
    return CompiledSystem(system, target, Budget.log_n('single-pixel', n), bp)
