from ConfigValidator.CustomErrors.CompilerErrors import SpecError
from Compilers.Blueprint import Blueprint
from Compilers.CompiledSystem import Budget, CompiledSystem, resolve_certify
from Compilers.Counter import CounterField, ZigZagCounter
from Patterns.Generators import ceil_log2, stripes
from ProgressManager.Output.OutputProcedure import OutputProcedure as output
from TileModel.Direction import Direction
from TileModel.Glue import Glue
from TileModel.Palette import Color


def _shade(black: bool) -> int:
    return Color.BLACK if black else Color.WHITE


def compile_stripes(n: int, i: int, j: int, certify=None) -> CompiledSystem:
    """Temperature-2 system for stripes(n, i, j): Black where x mod i == 0 or y mod j == 0.

    The bottom strip counts columns: a wrap field of period i marks the Black columns, a stop
    field ends it at x = n - 1. The left strip above it does the same for rows with period j.
    Both strips pass their marks into a cooperative fill that colors the rest of the square.
    """
    target = stripes(n, i, j)
    bottom = ZigZagCounter("sb", [CounterField.wrap(i), CounterField.stop(n)],
                           column_tag=lambda u: "k" if u % j == 0 else "w")
    hb = bottom.width
    if hb > n:
        raise SpecError(f"stripes({n},{i},{j}): bottom strip needs {hb} rows")

    bp = Blueprint(f"stripes-{n}-{i}-{j}", 2)

    def bottom_color(u, flags, initial):
        return _shade(flags[0] or u % j == 0)

    def bottom_lateral(side, flags, initial):
        if side == "hi" and not initial:
            return Glue(f"fill:c{int(flags[0])}", 1)
        return None

    layout = bottom.lay_out(bp, (0, 0, 0), Direction.N, Direction.E, "sb", bottom_color, bottom_lateral)
    bp.set_seed(layout.at(0, 0))

    if hb < n:
        left = ZigZagCounter("sl", [CounterField.wrap(j, hb), CounterField.stop(n - hb)],
                             column_tag=lambda u: "k" if u % i == 0 else "w")
        wl = left.width
        if wl > n:
            raise SpecError(f"stripes({n},{i},{j}): left strip needs {wl} columns")

        def left_color(u, flags, initial):
            return _shade(flags[0] or u % i == 0)

        def left_lateral(side, flags, initial):
            return Glue(f"fill:r{int(flags[0])}", 1) if side == "hi" else None

        left.lay_out(bp, (0, hb, 0), Direction.E, Direction.N, "sl", left_color, left_lateral, entry=Direction.S)
        bp.bond((0, hb - 1, 0), Direction.N, Glue("sl:in", 2))

        for x in range(wl, n):
            for y in range(hb, n):
                rb, cb = int(y % j == 0), int(x % i == 0)
                loc = (x, y, 0)
                bp.cell(loc, _shade(rb or cb), "fill", (Direction.W, Direction.S))
                for d in (Direction.W, Direction.E):
                    bp.face(loc, d, Glue(f"fill:r{rb}", 1))
                for d in (Direction.S, Direction.N):
                    bp.face(loc, d, Glue(f"fill:c{cb}", 1))

    system, _ = bp.compile(resolve_certify(certify))
    output.console_log_OK(f"stripes ({i}, {j}) in {n}x{n}: {len(system.tileset)} tile types")
    return CompiledSystem(system, target, Budget.log_n('stripes', n), bp)
