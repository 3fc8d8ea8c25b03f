from typing import Dict, Tuple

from ConfigValidator.CustomErrors.PatternErrors import NotSquareError, NotTwoColoredError
from Compilers.Blueprint import Blueprint
from Compilers.CompiledSystem import Budget, CompiledSystem, resolve_certify
from Compilers.Geometry import chain
from Compilers.Skeleton import add_rib_family, lay_rib, rib_spans, skeleton_columns
from Patterns.Generators import floor_log2
from Patterns.Pattern import Pattern
from ProgressManager.Output.OutputProcedure import OutputProcedure as output
from TileModel.Direction import Direction
from TileModel.Glue import Glue
from TileModel.Palette import Color
from TileModel.TileAssemblySystem import TileAssemblySystem

RIB_PREFIXES = {"east": "re", "west": "rw"}


def check_two_colored_square(pattern: Pattern):
    if not pattern.is_square:
        raise NotSquareError(pattern.width, pattern.height)
    colors = pattern.colors_present()
    if not colors <= {Color.WHITE, Color.BLACK}:
        raise NotTwoColoredError(colors)


def rib_families(system: TileAssemblySystem, prefixes: Dict[str, str]) -> Dict[str, Tuple[int, ...]]:
    return {f"rib-{name}": tuple(i for i, t in enumerate(system.tileset) if t.name.startswith(f"{prefix}-"))
            for name, prefix in prefixes.items()}


def compile_square_pattern(pattern: Pattern, certify=None) -> CompiledSystem:
    """Temperature-1 skeleton-and-ribs system whose terminal assembly colors the square as `pattern`.

    The seed sits at (floor(log n), 0) on a hard-coded bottom row. Hard-coded columns rise from it
    every 2 floor(log n) + 1 positions, and rib tiles fill the gaps between them. A rib tile is keyed
    by the colors still to be laid: its inner glue spells them all, its outer glue drops the first.
    """
    check_two_colored_square(pattern)
    n = pattern.width
    bp = Blueprint(f"square-{n}", 1, palette=pattern.palette)

    def color_at(loc):
        return pattern.color(loc[0], loc[1])

    if n == 1:
        bp.cell((0, 0, 0), pattern.color(0, 0), "seed")
        bp.set_seed((0, 0, 0))
        system, _ = bp.compile(resolve_certify(certify))
        return CompiledSystem(system, pattern, Budget.square(n), bp)

    k = floor_log2(n)
    cols = skeleton_columns(0, n - 1, k)
    spans = rib_spans(cols, 0, n - 1, k)
    x_end = cols[-1] + 1 if spans[cols[-1]][1] else cols[-1]

    chain(bp, [(x, 0, 0) for x in range(k, x_end + 1)], "sk:r", "sk-row", color_at, strength=1)
    for x in cols:
        for y in range(1, n):
            bp.cell((x, y, 0), color_at((x, y, 0)), "sk-col", (Direction.S,))
            bp.bond((x, y - 1, 0), Direction.N, Glue(f"sk:c{x}:{y - 1}", 1))

    lay_rib(bp, (k, 0, 0), Direction.W, k, color_at, "rw", 1)
    lay_rib(bp, (x_end, 0, 0), Direction.E, n - 1 - x_end, color_at, "re", 1)
    for y in range(1, n):
        for x in cols:
            west, east = spans[x]
            lay_rib(bp, (x, y, 0), Direction.W, west, color_at, "rw", 1)
            lay_rib(bp, (x, y, 0), Direction.E, east, color_at, "re", 1)

    add_rib_family(bp, k, "re", 1, Direction.E)
    add_rib_family(bp, k, "rw", 1, Direction.W)
    bp.set_seed((k, 0, 0))
    system, _ = bp.compile(resolve_certify(certify))
    output.console_log_OK(f"square pattern {n}x{n}: {len(cols)} skeleton columns, {len(system.tileset)} tile types")
    return CompiledSystem(system, pattern, Budget.square(n), bp, rib_families(system, RIB_PREFIXES))
