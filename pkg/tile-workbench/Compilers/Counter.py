from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ConfigValidator.CustomErrors.CompilerErrors import SpecError
from Compilers.Blueprint import Blueprint
from Patterns.Generators import ceil_log2
from TileModel.Direction import Direction, Location
from TileModel.Glue import Glue
from TileModel.Palette import Color
from TileModel.TileAssemblySystem import TileAssemblySystem

STOP = "stop"
WRAP = "wrap"

Flags = Tuple[bool, ...]
ColorRule = Callable[[int, Flags, bool], int]
LateralRule = Callable[[str, Flags, bool], Optional[Glue]]


def _bit(value: int, position: int) -> int:
    return (value >> position) & 1


def _low_ones(value: int, position: int) -> int:
    mask = (1 << position) - 1
    return int(value & mask == mask)


def _flag_text(flags) -> str:
    return "".join("-" if f is None else str(int(f)) for f in flags)


@dataclass(frozen=True)
class CounterField:
    """A bit field of a counter row.

    A stop field counts up to all ones and the row holding all ones is the last one.
    A wrap field cycles through `period` values; the row after the all-ones value restarts
    from `reset` and is marked. Row v is marked iff (phase + v) % period == 0.
    """
    kind:   str
    width:  int
    start:  int
    reset:  int = 0
    period: int = 0

    @staticmethod
    def stop(length: int, width: Optional[int] = None) -> 'CounterField':
        if length < 1:
            raise SpecError(f"a counter needs at least one row, found {length}")
        need = max(1, ceil_log2(length))
        width = need if width is None else width
        if width < need:
            raise SpecError(f"{length} rows need {need} bits, found {width}")
        return CounterField(STOP, width, (1 << width) - length)

    @staticmethod
    def wrap(period: int, phase: int = 0) -> 'CounterField':
        if period < 1:
            raise SpecError(f"wrap period must be positive, found {period}")
        width = ceil_log2(period)
        reset = (1 << width) - period
        return CounterField(WRAP, width, reset + phase % period, reset, period)

    @property
    def all_ones(self) -> int:
        return (1 << self.width) - 1


@dataclass(frozen=True)
class CounterLayout:
    origin: Location
    u_dir:  Direction
    v_dir:  Direction
    width:  int
    length: int

    def at(self, u: int, v: int) -> Location:
        return tuple(o + u * a + v * b for o, a, b in zip(self.origin, self.u_dir.offset, self.v_dir.offset))


class ZigZagCounter:
    """Row-per-increment binary counter grown as a zig-zag at temperature 2.

    Row 0 is hard-coded. Every later row reads the row below cooperatively (south glue plus the
    glue of the previous tile in the row) and alternates direction; the last tile of a row turns
    with a strength-2 glue that carries the flags the next row needs. Rows learn they are final
    or marked before their first tile is placed, so whole rows can be colored.

    `watch` lists stop-field values whose rows get one more flag, after the field flags. A row
    compares its new value with each watched value minus one, bit by bit; the stop columns carry
    the bits they compare against in their class.
    """

    def __init__(self, namespace: str, fields: Sequence[CounterField],
                 column_tag: Optional[Callable[[int], str]] = None, watch: Iterable[int] = ()):
        stops = [i for i, f in enumerate(fields) if f.kind == STOP]
        if len(stops) != 1:
            raise SpecError(f"counter {namespace} needs exactly one stop field")
        self.namespace = namespace
        self.fields = tuple(fields)
        self.stop_index = stops[0]
        self.columns = [(fi, p) for fi, f in enumerate(self.fields) for p in range(f.width)]
        self.width = len(self.columns)
        stop = self.fields[self.stop_index]
        self.length = (1 << stop.width) - stop.start
        self.column_tag = column_tag or (lambda u: "")
        self.watch = frozenset(watch)
        if any(not stop.start <= t <= stop.all_ones for t in self.watch):
            raise SpecError(f"counter {namespace} watches values outside {stop.start}..{stop.all_ones}")
        self.targets = sorted(t - 1 for t in self.watch if t > stop.start)

    def column_class(self, u: int) -> str:
        fi, p = self.columns[u]
        w = self.fields[fi].width
        pos = "o" if w == 1 else "a" if p == 0 else "b" if p == w - 1 else "m"
        bits = "".join(str(_bit(t, p)) for t in self.targets) if fi == self.stop_index else ""
        return f"{fi}{pos}{self.column_tag(u)}" + (f"w{bits}" if bits else "")

    def __watched(self, flags: Flags, watched: bool) -> Flags:
        return flags + (watched,) if self.watch else flags

    def initial_flags(self) -> Flags:
        stop = self.fields[self.stop_index]
        flags = tuple(self.length == 1 if f.kind == STOP else f.start == f.reset for f in self.fields)
        return self.__watched(flags, stop.start in self.watch)

    def __next_flags(self, values: Sequence[int]) -> Flags:
        flags = tuple(v == f.all_ones - 1 if f.kind == STOP else v == f.all_ones
                      for f, v in zip(self.fields, values))
        return self.__watched(flags, values[self.stop_index] + 1 in self.watch)

    def lay_out(self, bp: Blueprint, origin: Location, u_dir: Direction, v_dir: Direction, role: str,
                color: Optional[ColorRule] = None, lateral: Optional[LateralRule] = None,
                entry: Optional[Direction] = None, exit_at: Optional[str] = None) -> CounterLayout:
        """Writes every row into `bp`.

        `entry` is the face row 0's first tile is attached by; None makes it a seed. `exit_at` ("lo" or "hi")
        puts a strength-2 exit glue on that end of the final row for the next piece of a path.
        """
        layout = CounterLayout(origin, u_dir, v_dir, self.width, self.length)
        color = color or (lambda u, flags, initial: Color.WHITE)
        lateral = lateral or (lambda side, flags, initial: None)
        ns = self.namespace
        w = self.width

        def top(loc, u, info, final, last, flags_out):
            if final and exit_at is not None and u == (0 if exit_at == "lo" else w - 1):
                bp.bond(loc, v_dir, Glue(f"{ns}:exit", 2))
            elif final:
                bp.face(loc, v_dir, Glue(f"{ns}:done", 1))
            elif last:
                bp.bond(loc, v_dir, Glue(f"{ns}:{self.column_class(u)}:{info}:t{_flag_text(flags_out)}", 2))
            else:
                bp.bond(loc, v_dir, Glue(f"{ns}:{self.column_class(u)}:{info}", 1))

        def sides(loc, u, flags, initial):
            if u == 0:
                g = lateral("lo", flags, initial)
                if g is not None:
                    bp.face(loc, u_dir.opposite, g)
            if u == w - 1:
                g = lateral("hi", flags, initial)
                if g is not None:
                    bp.face(loc, u_dir, g)

        # row 0
        flags = self.initial_flags()
        values = [f.start for f in self.fields]
        out = self.__next_flags(values)
        below: List[Tuple[int, Optional[int]]] = []
        for u in range(w):
            fi, p = self.columns[u]
            loc = layout.at(u, 0)
            via = () if u == 0 and entry is None else (entry,) if u == 0 else (u_dir.opposite,)
            bp.cell(loc, color(u, flags, True), f"{role}.init", via)
            if u + 1 < w:
                bp.bond(loc, u_dir, Glue(f"{ns}:h{u}", 2))
            x, a = _bit(values[fi], p), _low_ones(values[fi], p)
            below.append((x, a))
            top(loc, u, f"u{x}{a}", flags[self.stop_index], u == w - 1, out)
            sides(loc, u, flags, True)

        kind = "u"
        v = 0
        while not flags[self.stop_index]:
            v += 1
            flags = out
            kind = "d" if kind == "u" else "u"
            order = list(range(w - 1, -1, -1)) if kind == "d" else list(range(w))
            travel = u_dir.opposite if kind == "d" else u_dir
            final = flags[self.stop_index]
            done = [True if f.width == 0 else None for f in self.fields]
            run = None
            match = [True] * len(self.targets)
            above: List[Tuple[int, Optional[int]]] = [(0, None)] * w
            for idx, u in enumerate(order):
                fi, p = self.columns[u]
                f = self.fields[fi]
                x, a = below[u]
                reset = f.kind == WRAP and flags[fi]
                if kind == "u":
                    c, z, q = (1, 1, None) if p == 0 else run
                    new = _bit(f.reset, p) if reset else x ^ c
                    carry = 0 if reset else x & c
                    a_out = z
                    z = z & new
                    q = ((1 - new) if p == 0 else q & new) if f.kind == STOP else None
                    if p == f.width - 1:
                        done[fi] = bool(z) if f.kind == WRAP else bool(q)
                        run = None
                    else:
                        run = (carry, z, q)
                    info = f"u{new}{a_out}"
                    above[u] = (new, a_out)
                else:
                    y = 1 if p == f.width - 1 else run
                    new = _bit(f.reset, p) if reset else x ^ a
                    if p == 0:
                        done[fi] = bool(y & new) if f.kind == WRAP else bool(y & (1 - new))
                        run = None
                    else:
                        run = y & new
                    info = f"d{new}"
                    above[u] = (new, None)
                if fi == self.stop_index:
                    match = [hit and new == _bit(t, p) for hit, t in zip(match, self.targets)]

                loc = layout.at(u, v)
                last = idx == w - 1
                via = (v_dir.opposite,) if idx == 0 else (v_dir.opposite, travel.opposite)
                bp.cell(loc, color(u, flags, False), role, via)
                if not last:
                    state = "-" if run is None else _flag_text(run) if isinstance(run, tuple) else str(run)
                    if self.targets:
                        state += f":{_flag_text(match)}"
                    bp.bond(loc, travel, Glue(f"{ns}:s:{_flag_text(flags)}:{_flag_text(done)}:{state}", 1))
                top(loc, u, info, final, last, self.__watched(tuple(done), any(match)))
                sides(loc, u, flags, False)
            below = above
            out = self.__watched(tuple(done), any(match))

        if v + 1 != self.length:
            raise SpecError(f"counter {ns} stopped after {v + 1} rows instead of {self.length}")
        return layout


REFERENCE_WIDTHS = range(1, 6)

StepperKey = Tuple[Tuple[Direction, ...], Tuple[Glue, ...]]


def stepper_types(namespace: str, lateral: Optional[LateralRule] = None) -> Dict[StepperKey, str]:
    """Every non-initial tile of a one-field stop counter, u eastward and v northward.

    Maps (via, glues of the four sides) to the column position (o, a, m or b) the tile sits in.
    Complete counts of widths 1..5 from an even and from an odd start reach every combination of
    position, carry state and row direction, so the result holds for counters of any width.
    """
    found: Dict[StepperKey, str] = {}
    for width in REFERENCE_WIDTHS:
        for rows in (1 << width, (1 << width) - 1):
            if rows < 2:
                continue
            plan = Blueprint(f"{namespace}-reference-{width}-{rows}", 2)
            ZigZagCounter(namespace, [CounterField.stop(rows, width)]).lay_out(
                plan, (0, 0, 0), Direction.E, Direction.N, namespace, lateral=lateral)
            for loc, (_, role) in plan.cells.items():
                if role != namespace:
                    continue
                u = loc[0]
                pos = "o" if width == 1 else "a" if u == 0 else "b" if u == width - 1 else "m"
                key = (plan.via[loc], tuple(plan.glue_at(loc, d) for d in Direction.sides(2)))
                found.setdefault(key, pos)
    return found


ORIENTATIONS = {
    "north": (Direction.E, Direction.N),
    "south": (Direction.E, Direction.S),
    "east":  (Direction.N, Direction.E),
    "west":  (Direction.N, Direction.W),
}


@dataclass(frozen=True)
class CounterSpec:
    width:       int
    start:       int
    end:         int
    orientation: str = "north"
    namespace:   str = "ctr"
    black_rows:  FrozenSet[int] = field(default_factory=frozenset)

    def validate(self):
        if self.width < 1:
            raise SpecError(f"counter width must be positive, found {self.width}")
        if not 0 <= self.start <= self.end < 1 << self.width:
            raise SpecError(f"need 0 <= start <= end < 2^{self.width}, found start={self.start} end={self.end}")
        if self.orientation not in ORIENTATIONS:
            raise SpecError(f"unknown orientation {self.orientation!r}")
        outside = sorted(c for c in self.black_rows if not self.start <= c <= self.end)
        if outside:
            raise SpecError(f"black rows {outside} are not counts between {self.start} and {self.end}")


@dataclass
class CounterGroup:
    system:  TileAssemblySystem
    done:    Glue
    ticks:   Tuple[Glue, Glue]
    width:   int
    length:  int
    layout:  CounterLayout
    blueprint: Blueprint


def make_counter(spec: CounterSpec, certify: bool = True) -> CounterGroup:
    """A standalone counter: w tiles wide, one row per count from `start` to `end`.

    Rows hold count + (2^w - 1 - end), so the last count is the all-ones row. Black rows are watched
    values of the counter.
    """
    spec.validate()
    ns = spec.namespace
    offset = (1 << spec.width) - 1 - spec.end
    counter = ZigZagCounter(ns, [CounterField.stop(spec.end - spec.start + 1, spec.width)],
                            watch=[c + offset for c in spec.black_rows])
    ticks = (Glue(f"{ns}:tick:lo", 1), Glue(f"{ns}:tick:hi", 1))

    def color(u, flags, initial):
        return Color.BLACK if spec.black_rows and flags[-1] else Color.WHITE

    def lateral(side, flags, initial):
        return ticks[0] if side == "lo" else ticks[1]

    bp = Blueprint(f"counter:{ns}", 2)
    u_dir, v_dir = ORIENTATIONS[spec.orientation]
    layout = counter.lay_out(bp, (0, 0, 0), u_dir, v_dir, ns, color, lateral)
    bp.set_seed(layout.at(0, 0))
    system, _ = bp.compile(certify)
    return CounterGroup(system, Glue(f"{ns}:done", 1), ticks, counter.width, counter.length, layout, bp)
