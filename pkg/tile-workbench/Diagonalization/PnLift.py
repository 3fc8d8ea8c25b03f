from typing import Optional, Sequence, Tuple

from ConfigValidator.CustomErrors.DiagErrors import BadLengthError
from Compilers.Blueprint import Blueprint
from Compilers.CompiledSystem import Budget, CompiledSystem, resolve_certify
from Compilers.Counter import CounterField, ZigZagCounter, stepper_types
from Diagonalization.PnRenderer import cell_color, render_pn
from Patterns.Generators import ceil_log2
from ProgressManager.Output.OutputProcedure import OutputProcedure as output
from TileModel.Direction import Direction
from TileModel.Glue import Glue
from TileModel.Palette import Color

N, E, S, W, U, D = Direction.N, Direction.E, Direction.S, Direction.W, Direction.U, Direction.D


class CopyStaircase:
    """The z=0 plane: a hard-coded row holding the bits, stretched east until the top row is m wide.

    Row r holds the symbols of x = 0 .. |b|+r-1, a symbol being the bit b[x mod |b|] and whether x is
    a cell boundary. A marker sits at x = r; the row above copies the marked symbol onto the cell
    past its east end. A stop counter west of x = 0 fixes the number of rows; only its first row
    depends on m, so every stepper type of the counter joins the tile set.
    """

    def __init__(self, bits: Sequence[int], m: int):
        self.bits = [int(b) for b in bits]
        self.length = len(self.bits)
        self.m = m
        self.top = m - self.length
        self.frame_width = max(1, ceil_log2(self.top + 1))

    @property
    def seed(self):
        return -self.frame_width, 0, 0

    @staticmethod
    def frame_lateral(side, flags, initial):
        if side == "lo":
            return None
        if initial:
            return Glue("lift:b0", 2)
        return Glue("lift:top" if flags[0] else "lift:go", 1)

    def symbol(self, x: int) -> str:
        return f"{self.bits[x % self.length]}{int(x % self.length == 0)}"

    def row_width(self, r: int) -> int:
        return self.length + r

    def __carry_after(self, x: int, r: int) -> str:
        return self.symbol(r - 1) if x >= r - 1 else "-"

    def __top_info(self, x: int, r: int) -> str:
        if r != self.top:
            return ""
        return f"t{self.bits[0]}" + ("a" if x == 0 else "")

    def lay_out(self, bp: Blueprint):
        white = Color.WHITE
        frame = ZigZagCounter("lf", [CounterField.stop(self.top + 1, self.frame_width)])
        layout = frame.lay_out(bp, self.seed, E, N, "lift-frame", lateral=self.frame_lateral)
        for y in range(self.top + 1):
            loc = layout.at(self.frame_width - 1, y)
            bp.bond(loc, E, bp.glue_at(loc, E))
        for _, glues in stepper_types("lf", self.frame_lateral):
            bp.extra("lift-frame", white, **{d.name: g for d, g in zip(Direction.sides(2), glues)})

        for x in range(self.length):
            bp.cell((x, 0, 0), white, "lift-row", (W,))
            bp.bond((x - 1, 0, 0), E, Glue(f"lift:b{x}", 2))

        for r in range(1, self.top + 1):
            width = self.row_width(r)
            for x in range(width):
                new_end = x == width - 1
                bp.cell((x, r, 0), white, "copy-end" if new_end else "copy", (W,) if new_end else (W, S))
                if new_end:
                    continue
                carry = self.__carry_after(x, r)
                info = self.__top_info(x, r)
                if x + 1 == width - 1:
                    bp.bond((x, r, 0), E, Glue(f"cp:x{carry}{info}", 2))
                else:
                    bp.bond((x, r, 0), E, Glue(f"cp:e{carry}{int(x == r - 1)}{info}", 1))

        for r in range(self.top):
            for x in range(self.row_width(r)):
                mark = int(x == r)
                end = int(x == self.row_width(r) - 1)
                bp.bond((x, r, 0), N, Glue(f"cp:n{self.symbol(x)}{mark}{end}", 1))

        for x in range(self.m):
            loc = (x, self.top, 0)
            if x == self.m - 1:
                bp.bond(loc, U, Glue(f"lift:up{self.bits[0]}{self.symbol(x)}", 2))
            else:
                bp.bond(loc, U, Glue(f"lift:t{self.symbol(x)}" + (":a" if x == 1 else ""), 1))


class GridGrowth:
    """The z=1 plane: the m x m grid, grown south from the row lifted off the staircase.

    Row r (counted from the north) learns its row bit on the diagonal cell (r, r), where it equals
    the column bit, then spreads it west and east. The cell east of a diagonal cell starts the
    next diagonal, so growth stops by itself after m rows.
    """

    def __init__(self, bits: Sequence[int], m: int, top: int):
        self.bits = [int(b) for b in bits]
        self.length = len(self.bits)
        self.m = m
        self.top = top

    def __lane(self, k: int) -> Tuple[int, int]:
        return self.bits[k % self.length], int(k % self.length == 0)

    def lay_out(self, bp: Blueprint):
        m = self.m
        for r in range(m):
            y = self.top - r
            rb, rf = self.__lane(r)
            for x in range(m):
                cb, cf = self.__lane(x)
                loc = (x, y, 1)
                bp.cell(loc, cell_color(rb, cb, bool(rf or cf)), self.__role(x, r), self.__via(x, r))
                # outputs dangle at the edges so that a tile's inputs always decide its faces
                if r == 0:
                    bp.bond(loc, W, Glue(f"pn:h{rb}", 1))
                elif x <= r:
                    bp.bond(loc, W, Glue(f"pn:w{rb}{rf}", 1))
                if r > 0 and x >= r:
                    bp.bond(loc, E, Glue(f"pn:e{rb}{rf}" + (":a" if x == r else ""), 1))
                if x == r + 1:
                    bp.bond(loc, S, Glue(f"pn:dg{cb}{cf}", 2))
                else:
                    bp.bond(loc, S, Glue(f"pn:c{cb}{cf}", 1))

    def __role(self, x: int, r: int) -> str:
        if r == 0:
            return "grid-top"
        return "grid-diag" if x == r else "grid-west" if x < r else "grid-east"

    def __via(self, x: int, r: int):
        if r == 0:
            return (D,) if x == self.m - 1 else (E, D)
        return (N,) if x == r else (E, N) if x < r else (W, N)


def compile_pn_lift(bits: Sequence[int], m: int, certify: Optional[bool] = None) -> CompiledSystem:
    """Barely-3D temperature-2 system whose z=1 plane is render_pn(bits, |bits|, m)."""
    bits = [int(b) for b in bits]
    if not 2 <= len(bits) <= m:
        raise BadLengthError(len(bits), m)
    staircase = CopyStaircase(bits, m)
    bp = Blueprint(f"pn-lift-{''.join(map(str, bits))}-{m}", 2, dim=3)
    staircase.lay_out(bp)
    GridGrowth(bits, m, staircase.top).lay_out(bp)
    bp.set_seed(staircase.seed)
    system, _ = bp.compile(resolve_certify(certify))
    output.console_log_OK(f"p_n lift of {len(bits)} bits to {m}x{m}: {len(system.tileset)} tile types")
    return CompiledSystem(system, render_pn(bits, len(bits), m), Budget.lift(len(bits), m), bp)
