from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from Diagonalization.BitPipeline import replay
from Diagonalization.BitSequence import FLIP, BitSequence
from Diagonalization.PnRenderer import BOUNDARY, decode_color
from Diagonalization.SFCounting import count_sf_systems
from Diagonalization.SFModels import Universe
from Diagonalization.SFSimulation import HORIZONTAL, Probe, color_class
from Patterns.Pattern import Pattern
from ProgressManager.Output.OutputProcedure import OutputProcedure as output

REPLAY = "replay"
CELL = "cell"


@dataclass(frozen=True)
class Witness:
    """A system the pattern fails to differ from.

    `kind` is "replay" when re-running the system gives another bit than the one recorded, and
    "cell" when the pattern shows the read bit class at `location` (pattern coordinates).
    """
    serial:     int
    kind:       str
    location:   Optional[Tuple[int, int]] = None


@dataclass
class DiffReport:
    witnesses:  List[Witness] = field(default_factory=list)
    compared:   int = 0
    flips:      int = 0

    @property
    def ok(self) -> bool:
        return not self.witnesses


def boundary_lines(rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Indices of the rows and of the columns made of boundary colors only.

    A column counts only against the rows that are not boundary rows themselves, so a pattern
    without interior rows has no recognizable boundary columns, and likewise for rows.
    """
    on_boundary = np.isin(rows, [int(c) for c in BOUNDARY])
    full_rows = on_boundary.all(axis=1)
    full_columns = on_boundary.all(axis=0)
    none = np.array([], dtype=int)
    columns = np.flatnonzero(on_boundary[~full_rows].all(axis=0)) if (~full_rows).any() else none
    rows_found = np.flatnonzero(on_boundary[:, ~full_columns].all(axis=1)) if (~full_columns).any() else none
    return rows_found, columns


def check_flip(pattern: Pattern, c: int, serial: int, seen: Probe) -> Tuple[int, List[Witness]]:
    """Compares every location `serial` past a boundary line of the pattern with the bit class `seen` read.

    Returns the number of locations compared and the ones whose bit equals that class. Offsets past
    one cell are not covered by the cell layout and are not checked.
    """
    if seen.reason != FLIP or serial >= c:
        return 0, []
    expected_class = color_class(seen.axis, serial, seen.color)
    rows = np.asarray(pattern.rows())
    height, width = rows.shape
    boundary_rows, boundary_columns = boundary_lines(rows)
    if seen.axis == HORIZONTAL:
        spots = [(r, x0 + serial) for x0 in boundary_columns if x0 + serial < width for r in range(height)]
    else:
        spots = [(r0 + serial, x) for r0 in boundary_rows if r0 + serial < height for x in range(width)]
    witnesses = []
    for r, x in spots:
        (row_bit, col_bit), _ = decode_color(rows[r, x])
        if (col_bit if seen.axis == HORIZONTAL else row_bit) == expected_class:
            witnesses.append(Witness(serial, CELL, (int(x), height - 1 - int(r))))
    return len(spots), witnesses


def pn_differs(pattern: Pattern, universe: Universe, bits: BitSequence,
               hard_cap: Optional[int] = None) -> DiffReport:
    """Replays every system recorded as a flip and checks the pattern disagrees with what it read."""
    c = universe.pattern_size(count_sf_systems(universe))
    serials = [r.serial for r in bits.provenance if r.reason == FLIP]
    report = DiffReport(flips=len(serials))
    for serial, seen in replay(universe, serials, hard_cap):
        if seen.bit != bits[serial]:
            report.witnesses.append(Witness(serial, REPLAY))
            continue
        compared, witnesses = check_flip(pattern, c, serial, seen)
        report.compared += compared
        report.witnesses.extend(witnesses)

    if not report.ok:
        output.console_log_FAIL(f"pattern agrees with {len({w.serial for w in report.witnesses})} flipped systems")
    elif serials and not report.compared:
        output.console_log_WARNING(f"{len(serials)} flips recorded, none falls inside a cell of the pattern")
    else:
        output.console_log_OK(f"pattern differs from all {len(serials)} flipped systems "
                              f"({report.compared} locations compared)")
    return report
