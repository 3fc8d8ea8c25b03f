from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ConfigValidator.CustomErrors.CompilerErrors import SpecError
from ConfigValidator.CustomErrors.PatternErrors import OutOfRangeError
from Compilers.Blueprint import Blueprint
from Compilers.CompiledSystem import Budget, CompiledSystem, resolve_certify
from Compilers.Counter import CounterField, ZigZagCounter, stepper_types
from Compilers.Skeleton import add_rib_family, lay_rib
from Compilers.SquarePattern import check_two_colored_square, rib_families
from Patterns.Generators import ceil_log2, floor_log2, grid_repeat
from Patterns.Pattern import Pattern
from ProgressManager.Output.OutputProcedure import OutputProcedure as output
from TileModel.Direction import Direction, Location
from TileModel.Glue import Glue

FILL_GLUE = Glue("gm:fill", 1)
ENTRY_GLUE = Glue("gl:in", 2)
UNTAGGED = frozenset({ENTRY_GLUE.label})

E, N, S, W = Direction.E, Direction.N, Direction.S, Direction.W
TRANSPOSED = {E: N, N: E, W: S, S: W}


class Spines:
    """Splits an n x n block into vertical strips of at most floor(log n) + 1 columns.

    A spine is a hub in the strip's south-west corner, an arm along the rest of the bottom row and a
    shaft up the west column; ribs grow east from the shaft cells across the strip.
    """

    def __init__(self, n: int):
        self.n = n
        self.k = max(1, floor_log2(n))
        self.count = -(-n // (self.k + 1))
        self.starts = [j * (self.k + 1) for j in range(self.count)]
        self.arms = [min(n - 1, a + self.k) - a for a in self.starts]

    def hub(self, u: int, v: int) -> Tuple[int, int]:
        """Hub of counter column u, row v, with `count` counter columns per block."""
        block, j = divmod(u, self.count)
        return block * self.n + self.starts[j], v * self.n

    def blocks_for(self, rows: int) -> int:
        """Blocks a counter of `rows` rows spans across its width."""
        return -(-max(1, ceil_log2(rows)) // self.count)


@dataclass(frozen=True)
class Frame:
    """Places spines either upright or transposed (x and y swapped) in the assembly."""
    transposed: bool
    origin:     Tuple[int, int] = (0, 0)

    def at(self, x: int, y: int) -> Location:
        x, y = x + self.origin[0], y + self.origin[1]
        return (y, x, 0) if self.transposed else (x, y, 0)

    def turn(self, d: Direction) -> Direction:
        return TRANSPOSED[d] if self.transposed else d

    @property
    def rib_prefix(self) -> str:
        return "gn" if self.transposed else "ge"


def macro_cells(plan: Blueprint):
    for loc in sorted(plan.cells, key=lambda c: (c[1], c[0])):
        yield loc, plan.via[loc], {d: plan.glue_at(loc, d) for d in Direction.sides(2)}


def counter_plan(ns: str, rows: int, width: int, lateral, entry: Optional[Direction] = None) -> Blueprint:
    """One cell per counter tile, u eastward and v northward; every cell becomes a spine."""
    plan = Blueprint(f"{ns}-plan", 2)
    ZigZagCounter(ns, [CounterField.stop(rows, width)]).lay_out(plan, (0, 0, 0), E, N, ns, lateral=lateral,
                                                                entry=entry)
    if entry is not None:
        plan.face((0, 0, 0), entry, ENTRY_GLUE)
    return plan


def bottom_lateral(has_left: bool):
    def lateral(side, flags, initial):
        if side == "lo":
            return None
        if initial:
            return ENTRY_GLUE if has_left else None
        return FILL_GLUE
    return lateral


def left_lateral(side, flags, initial):
    return FILL_GLUE if side == "hi" else None


def fill_cells(count: int):
    """Macro cells of a fill block, one per spine: j = 0 reads the fill west and south of the block."""
    for j in range(count):
        via = (W, S) if j == 0 else (W,)
        glues = {d: Glue() for d in Direction.sides(2)}
        if j == 0:
            glues.update({W: FILL_GLUE, S: FILL_GLUE, N: FILL_GLUE})
        else:
            glues[W] = Glue(f"{FILL_GLUE.label}>{j}", 2)
        glues[E] = Glue(f"{FILL_GLUE.label}>{j + 1}", 2) if j + 1 < count else FILL_GLUE
        yield j, via, glues


class SpineExpansion:
    """Grows every macro cell as one spine; the spine only depends on the cell's glues and position j."""

    def __init__(self, pattern: Pattern, spines: Spines):
        self.pattern = pattern
        self.spines = spines
        self.n = pattern.width

    def color_at(self, loc: Location) -> int:
        return self.pattern.color(loc[0] % self.n, loc[1] % self.n)

    @staticmethod
    def port(glue: Glue, j: int, strength: Optional[int] = None) -> Glue:
        """Glue between two spines, tagged with the position of the spine that reads it."""
        if glue.label in UNTAGGED or glue.label.startswith(FILL_GLUE.label):
            return glue
        return Glue(f"{glue.label}@{j}", glue.strength if strength is None else strength)

    def lay_out(self, bp: Blueprint, frame: Frame, ns: str, j: int, hub_at: Tuple[int, int],
                via: Tuple[Direction, ...], glues: Dict[Direction, Glue]):
        spines = self.spines
        arm = spines.arms[j]
        x0, y0 = hub_at
        tag = f"{ns}{j}"

        def at(dx, dy):
            return frame.at(x0 + dx, y0 + dy)

        outputs = {d: g for d, g in glues.items() if d not in via and not g.is_null}
        hub, end, top = at(0, 0), at(arm, 0), at(0, self.n - 1)
        bp.cell(hub, self.color_at(hub), f"{tag}-hub", tuple(frame.turn(d) for d in via))

        for d in via:
            g = glues[d]
            if d == E and arm:
                bp.face(end, frame.turn(E), self.port(g, j, 2))
                for t in range(arm, 0, -1):
                    cell = at(t, 0)
                    bp.cell(cell, self.color_at(cell), f"{tag}-arm", (frame.turn(E),))
                    bp.bond(cell, frame.turn(W), Glue(f"{tag}:aw:{g.label}:{t}", 2 if t > 1 else g.strength))
            else:
                bp.face(hub, frame.turn(d), self.port(g, j))

        if E not in via:
            key = outputs[E].label if E in outputs else "idle"
            for t in range(1, arm + 1):
                cell = at(t, 0)
                bp.cell(cell, self.color_at(cell), f"{tag}-arm", (frame.turn(W),))
                bp.bond(at(t - 1, 0), frame.turn(E), Glue(f"{tag}:ae:{key}:{t}", 2))

        key = outputs[N].label if N in outputs else "idle"
        for t in range(1, self.n):
            cell = at(0, t)
            bp.cell(cell, self.color_at(cell), f"{tag}-shaft", (frame.turn(S),))
            bp.bond(at(0, t - 1), frame.turn(N), Glue(f"{tag}:sh:{key}:{t}", 2))
            lay_rib(bp, cell, frame.turn(E), arm, self.color_at, frame.rib_prefix, 2)

        for d, g in outputs.items():
            if d == N:
                bp.face(top, frame.turn(N), self.port(g, j))
            elif d == E:
                bp.face(end, frame.turn(E), self.port(g, (j + 1) % spines.count))
            elif d == W:
                west = (j - 1) % spines.count
                bp.face(hub, frame.turn(W), self.port(g, west, 2 if spines.arms[west] else None))
            else:
                raise SpecError(f"{ns}: a macro cell cannot output to the {d.name}")

    def lay_plan(self, bp: Blueprint, plan: Blueprint, frame: Frame, ns: str):
        for loc, via, glues in macro_cells(plan):
            self.lay_out(bp, frame, ns, loc[0] % self.spines.count, self.spines.hub(loc[0], loc[1]), via, glues)

    def add_catalog(self, bp: Blueprint, frame: Frame, ns: str, cells):
        """Every spine tile of the given macro cells as extra tile types."""
        for j, via, glues in cells:
            scratch = Blueprint(f"{ns}-catalog", 2)
            self.lay_out(scratch, frame, ns, j, (self.spines.starts[j], 0), via, glues)
            for loc, (color, role) in scratch.cells.items():
                bp.extra(role, color, **{d.name: scratch.glue_at(loc, d) for d in Direction.sides(2)})


def stepper_cells(ns: str, lateral, count: int):
    """(j, via, glues) for every counter stepper at every spine position its column can take."""
    positions = {"o": [0] if count == 1 else [], "a": [0], "b": [count - 1], "m": list(range(count))}
    for (via, glues), pos in stepper_types(ns, lateral).items():
        for j in positions[pos]:
            yield j, via, dict(zip(Direction.sides(2), glues))


def compile_grid_repeat(pattern: Pattern, m: int, certify=None) -> CompiledSystem:
    """Temperature-2 system whose terminal assembly is `pattern` repeated m x m times.

    A bottom counter (transposed spines) counts the m block columns; a left counter above it counts
    the remaining block rows; fill blocks cover the rest. Every counter tile and every fill position
    becomes one spine of a block, and the spine tiles of all stepper types are always in the tile set,
    so only the hard-coded first rows of the counters depend on m.
    """
    check_two_colored_square(pattern)
    if m < 1:
        raise OutOfRangeError("m", m, pattern.width)
    n = pattern.width
    spines = Spines(n)
    expansion = SpineExpansion(pattern, spines)
    target = grid_repeat(pattern, m)
    bp = Blueprint(f"grid-repeat-{n}x{m}", 2, palette=pattern.palette)

    bottom_rows = spines.blocks_for(m)
    has_left = m > bottom_rows
    bottom = Frame(True)
    expansion.lay_plan(bp, counter_plan("gb", m, spines.count * bottom_rows, bottom_lateral(has_left)), bottom, "gb")
    bp.set_seed(bottom.at(0, 0))

    left = Frame(False, (0, bottom_rows * n))
    left_columns = 0
    if has_left:
        left_columns = spines.blocks_for(m - bottom_rows)
        plan = counter_plan("gl", m - bottom_rows, spines.count * left_columns, left_lateral, entry=S)
        expansion.lay_plan(bp, plan, left, "gl")
        fill: List = list(fill_cells(spines.count))
        for bx in range(left_columns, m):
            for by in range(bottom_rows, m):
                for j, via, glues in fill:
                    expansion.lay_out(bp, Frame(False), "gm", j, (bx * n + spines.starts[j], by * n), via, glues)

    expansion.add_catalog(bp, bottom, "gb", stepper_cells("gb", bottom_lateral(True), spines.count))
    expansion.add_catalog(bp, left, "gl", stepper_cells("gl", left_lateral, spines.count))
    expansion.add_catalog(bp, Frame(False), "gm", fill_cells(spines.count))
    add_rib_family(bp, spines.k, "ge", 2, E)
    add_rib_family(bp, spines.k, "gn", 2, N)

    system, _ = bp.compile(resolve_certify(certify))
    output.console_log_OK(f"grid repeat {n}x{n} by {m}: {spines.count} spines per block, "
                          f"counters {bottom_rows}+{left_columns} blocks deep, {len(system.tileset)} tile types")
    return CompiledSystem(system, target, Budget.repeat(n, m), bp, rib_families(system, {"east": "ge", "north": "gn"}))
