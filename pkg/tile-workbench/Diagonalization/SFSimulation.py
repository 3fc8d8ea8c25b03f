from dataclasses import dataclass
from typing import Callable, Dict, Optional

from AssemblyEngine.AttachmentPolicy import PaperOrder
from AssemblyEngine.Simulator import init_state, run
from AssemblyEngine.StrengthFree import StrengthFreeRule
from ConfigValidator.CustomErrors.DiagErrors import UnsupportedError
from Diagonalization.BitSequence import EMPTY_FRONTIER_EARLY, FLIP, NO_BOUNDARY_COLOR, NO_INDEX_TILE, TOO_SMALL
from Diagonalization.PnRenderer import BOUNDARY
from Diagonalization.SFModels import PAPER_FLOW, SFSystem, Universe
from TileModel.Assembly import Assembly
from TileModel.Palette import Color

HORIZONTAL = "x"
VERTICAL = "y"

# colors whose column (horizontal scan) or row (vertical scan) bit is 1
ONE_CLASS = {
    (HORIZONTAL, True):  {Color.WHITE, Color.GREEN},
    (HORIZONTAL, False): {Color.AQUA, Color.BLUE},
    (VERTICAL, True):    {Color.WHITE, Color.BLACK},
    (VERTICAL, False):   {Color.AQUA, Color.YELLOW},
}


@dataclass(frozen=True)
class Probe:
    """Outcome of inspecting an assembly: the saved bit and what was seen on the way."""
    bit:        int
    reason:     str
    axis:       Optional[str] = None
    boundary:   Optional[int] = None
    color:      Optional[int] = None


def color_class(axis: str, index: int, color: int) -> int:
    """Bit a color stands for at `index` along the scan: 1 when it belongs to the one-class."""
    return int(color in ONE_CLASS[(axis, index == 0)])


def _first_at(asm: Assembly, axis: int) -> Dict[int, int]:
    """Coordinate -> tile index of the first tile placed with that coordinate."""
    firsts: Dict[int, int] = {}
    for loc, tile_index in asm.items():
        firsts.setdefault(loc[axis], tile_index)
    return firsts


def get_pattern_value(asm: Assembly, patt_size: int, index: int, tile_color: Callable[[int], int]) -> Probe:
    """Saved bit for the system with serial `index`.

    A wide assembly is scanned from its west edge eastward, otherwise a tall one from its north edge
    southward. The scan stops at the first boundary color and reads the tile `index` further on; the
    bit returned is the opposite of the class of that color.

    Grid cells count row offsets southward from their boundary row and the vertical scan follows
    them; started at the south edge it would read offset c - index instead. An
    assembly spanning fewer than `patt_size` tiles both ways is not scanned at all and gives TOO_SMALL.
    """
    (x0, y0, _), (x1, y1, _) = asm.bounds
    if x1 - x0 >= patt_size:
        axis, firsts, coords = HORIZONTAL, _first_at(asm, 0), range(x0, x1 + 1)
        step = 1
    elif y1 - y0 >= patt_size:
        axis, firsts, coords = VERTICAL, _first_at(asm, 1), range(y1, y0 - 1, -1)
        step = -1
    else:
        return Probe(0, TOO_SMALL)

    boundary = next((c for c in coords if c in firsts and tile_color(firsts[c]) in BOUNDARY), None)
    if boundary is None:
        return Probe(0, NO_BOUNDARY_COLOR, axis)
    probed = firsts.get(boundary + step * index)
    if probed is None:
        return Probe(0, NO_INDEX_TILE, axis, boundary)
    color = tile_color(probed)
    return Probe(1 - color_class(axis, index, color), FLIP, axis, boundary, color)


def probe_sf(sys: SFSystem, num_steps: int, patt_size: int, index: int, universe: Universe,
             hard_cap: Optional[int] = None) -> Probe:
    if universe.mode == PAPER_FLOW:
        raise UnsupportedError(universe.mode)
    rule = StrengthFreeRule(sys)
    result = run(init_state(rule), num_steps, PaperOrder(), hard_cap)
    if result.terminal and result.steps < num_steps:
        return Probe(0, EMPTY_FRONTIER_EARLY)
    return get_pattern_value(result.asm, patt_size, index, rule.tile_color)


def simulate_sf(sys: SFSystem, num_steps: int, patt_size: int, index: int, universe: Universe,
                hard_cap: Optional[int] = None) -> int:
    return probe_sf(sys, num_steps, patt_size, index, universe, hard_cap).bit
