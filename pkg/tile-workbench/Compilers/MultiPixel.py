from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Set, Tuple

from ConfigValidator.CustomErrors.CompilerErrors import RoutingFailureError
from Compilers.Blueprint import Blueprint
from Compilers.CompiledSystem import Budget, CompiledSystem, resolve_certify
from Compilers.Counter import CounterField, ZigZagCounter
from Compilers.Geometry import chain, fill_region
from Patterns.Generators import ceil_log2, multi_pixel, pixel_separation
from ProgressManager.Output.OutputProcedure import OutputProcedure as output
from TileModel.Direction import Direction
from TileModel.Glue import Glue
from TileModel.Palette import Color


def band_rows(n: int, height: int) -> List[Tuple[int, int]]:
    """(y0, h) of floor(n / height) row bands covering [0, n); the top band takes the remainder."""
    count = max(1, n // height)
    bands = [(b * height, height) for b in range(count)]
    y0, _ = bands[-1]
    bands[-1] = (y0, n - y0)
    return bands


@dataclass
class Band:
    index:  int
    y0:     int
    height: int
    pixels: Set[Tuple[int, int]] = field(default_factory=set)
    below:  Optional[str] = None    # label the band feeds to a filler region under it
    above:  Optional[str] = None    # label the band feeds to a filler region over it
    has_next: bool = False          # a trunk segment or another band continues above

    @property
    def columns(self) -> List[int]:
        return sorted({x for x, _ in self.pixels})

    @property
    def top(self) -> int:
        return self.y0 + self.height


@dataclass
class Gap:
    index:  int
    y0:     int
    length: int
    band_below: bool


class CombRouter:
    """Lays out the comb for a set of pixels.

    Rows are cut into bands of height s = max(1, ceil(log2 n)). Every band holding a pixel becomes a
    branch across the whole square: counter segments alternate with hard-coded one-tile columns,
    one per pixel x, so every pixel lands on a hard-coded tile. Trunk counters along the west edge
    join consecutive branches and reach the bottom and top edges; each gap between branches east
    of the trunk is a filler rectangle fed by the trunk and by the branch next to it.
    """

    def __init__(self, n: int, pixels: Iterable[Tuple[int, int]]):
        self.n = n
        self.s = pixel_separation(n)
        self.pixels = set(pixels)
        bands = [Band(i, y0, h) for i, (y0, h) in enumerate(band_rows(n, self.s))]
        for x, y in self.pixels:
            next(b for b in bands if b.y0 <= y < b.top).pixels.add((x, y))
        self.bands = [b for b in bands if b.pixels] or bands[:1]
        self.gaps: List[Gap] = []
        y = 0
        for band in self.bands:
            if band.y0 > y:
                self.gaps.append(Gap(len(self.gaps), y, band.y0 - y, y > 0))
            y = band.top
        if y < n:
            self.gaps.append(Gap(len(self.gaps), y, n - y, True))
        for gap in self.gaps:
            label = f"fill:g{gap.index}"
            for band in self.bands:
                if band.top == gap.y0:
                    band.above = label
                elif band.y0 == gap.y0 + gap.length and not gap.band_below:
                    band.below = label
        for band in self.bands:
            band.has_next = band.top < n

    def __check_width(self, what: str, length: int, width: int):
        if max(1, ceil_log2(length)) > width:
            raise RoutingFailureError(f"{what} of length {length} does not fit a {width}-tile counter")

    def lay_out(self, bp: Blueprint):
        pieces = sorted([(b.y0, "band", b) for b in self.bands] + [(g.y0, "gap", g) for g in self.gaps],
                        key=lambda p: p[0])
        for k, (_, kind, piece) in enumerate(pieces):
            seed = k == 0
            if kind == "gap":
                self.__lay_trunk(bp, piece, seed, has_next=k + 1 < len(pieces))
            else:
                self.__lay_band(bp, piece, seed)
        for gap in self.gaps:
            via = (Direction.W, Direction.S) if gap.band_below else (Direction.W, Direction.N)
            fill_region(bp, range(self.s, self.n), range(gap.y0, gap.y0 + gap.length), f"fill:g{gap.index}",
                        f"fill-g{gap.index}", lambda loc: Color.WHITE, via)
        bp.set_seed((0, 0, 0))

    def __lay_trunk(self, bp: Blueprint, gap: Gap, seed: bool, has_next: bool):
        ns = f"t{gap.index}"
        self.__check_width(f"trunk segment {ns}", gap.length, self.s)

        def lateral(side, flags, initial):
            return Glue(f"fill:g{gap.index}", 1) if side == "hi" and self.s < self.n else None

        counter = ZigZagCounter(ns, [CounterField.stop(gap.length, self.s)])
        counter.lay_out(bp, (0, gap.y0, 0), Direction.E, Direction.N, ns, lateral=lateral,
                        entry=None if seed else Direction.S, exit_at="lo" if has_next else None)

    def __lay_band(self, bp: Blueprint, band: Band, seed: bool):
        runs: List[Tuple[str, int, int]] = []
        x = 0
        for c in band.columns:
            if c > x:
                runs.append(("segment", x, c - x))
            runs.append(("column", c, 1))
            x = c + 1
        if x < self.n:
            runs.append(("segment", x, self.n - x))

        for k, (kind, x0, length) in enumerate(runs):
            first, last = k == 0, k + 1 == len(runs)
            entry = (None if seed else Direction.S) if first else Direction.W
            if kind == "segment":
                self.__lay_segment(bp, band, k, x0, length, first, last, entry)
            else:
                self.__lay_column(bp, band, k, x0, first, last, entry)
        if band.has_next:
            bp.bond((0, band.top - 1, 0), Direction.N, Glue(f"b{band.index}:up", 2))

    def __lay_segment(self, bp: Blueprint, band: Band, k: int, x0: int, length: int,
                      first: bool, last: bool, entry: Optional[Direction]):
        ns = f"b{band.index}s{k}"
        self.__check_width(f"branch segment {ns}", length, band.height)

        def lateral(side, flags, initial):
            if first and initial:
                return None
            label = band.above if side == "hi" else band.below
            return Glue(label, 1) if label else None

        counter = ZigZagCounter(ns, [CounterField.stop(length, band.height)])
        counter.lay_out(bp, (x0, band.y0, 0), Direction.N, Direction.E, ns, lateral=lateral,
                        entry=entry, exit_at=None if last else "lo")

    def __lay_column(self, bp: Blueprint, band: Band, k: int, x: int,
                     first: bool, last: bool, entry: Optional[Direction]):
        ns = f"b{band.index}c{k}"
        path = [(x, y, 0) for y in range(band.y0, band.top)]
        chain(bp, path, f"{ns}:", f"pixel-b{band.index}c{k}",
              lambda loc: Color.BLACK if (loc[0], loc[1]) in band.pixels else Color.WHITE,
              first_via=() if entry is None else (entry,))
        if not last:
            bp.bond(path[0], Direction.E, Glue(f"{ns}:next", 2))
        if not first:
            if band.above:
                bp.face(path[-1], Direction.N, Glue(band.above, 1))
            if band.below:
                bp.face(path[0], Direction.S, Glue(band.below, 1))


def compile_multi_pixel(n: int, pixels: Iterable[Tuple[int, int]], certify=None) -> CompiledSystem:
    """Temperature-2 system whose terminal assembly is the n x n square, Black exactly at `pixels`."""
    pixels = sorted(set(pixels))
    target = multi_pixel(n, pixels)
    router = CombRouter(n, pixels)
    bp = Blueprint(f"multi-pixel-{n}-{len(pixels)}", 2)
    router.lay_out(bp)
    system, _ = bp.compile(resolve_certify(certify))
    output.console_log_OK(f"{len(pixels)} pixels in {n}x{n}: {len(router.bands)} branches, "
                          f"{len(system.tileset)} tile types")
    return CompiledSystem(system, target, Budget.pixels(n, len(pixels)), bp)
