from collections import Counter
from typing import Sequence, Tuple

import numpy as np

from TileModel.Palette import DEFAULT_PALETTE, Color


class Pattern:
    """Finite colored grid, x east and y north with (0,0) at the south-west corner.

    `cells[x, y]` holds the ColorId; the array is read-only.
    """

    def __init__(self, cells: np.ndarray, palette: Sequence[str] = DEFAULT_PALETTE,
                 origin: Tuple[int, int] = (0, 0)):
        cells = np.array(cells, dtype=np.int16, copy=True)
        if cells.ndim != 2 or cells.shape[0] < 1 or cells.shape[1] < 1:
            raise ValueError(f"pattern needs a non-empty 2D grid, got shape {cells.shape}")
        if cells.min() < 0 or cells.max() >= len(palette):
            raise ValueError("pattern uses a color outside its palette")
        cells.setflags(write=False)
        self.__cells = cells
        self.__palette = tuple(palette)
        self.__origin = tuple(origin)

    @staticmethod
    def filled(width: int, height: int, color: int = Color.WHITE, palette=DEFAULT_PALETTE) -> 'Pattern':
        return Pattern(np.full((width, height), int(color)), palette)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], palette=DEFAULT_PALETTE) -> 'Pattern':
        """Rows listed north to south, as they are drawn."""
        grid = np.array(rows, dtype=np.int16)
        return Pattern(np.flipud(grid).T, palette)

    @property
    def cells(self) -> np.ndarray:
        return self.__cells

    @property
    def width(self) -> int:
        return self.__cells.shape[0]

    @property
    def height(self) -> int:
        return self.__cells.shape[1]

    @property
    def palette(self) -> Tuple[str, ...]:
        return self.__palette

    @property
    def origin(self) -> Tuple[int, int]:
        return self.__origin

    @property
    def is_square(self) -> bool:
        return self.width == self.height

    def color(self, x: int, y: int) -> int:
        return int(self.__cells[x, y])

    def rows(self):
        """Rows north to south."""
        return np.flipud(self.__cells.T)

    def colors_present(self) -> set:
        return {int(c) for c in np.unique(self.__cells)}

    def count_colors(self) -> Counter:
        values, counts = np.unique(self.__cells, return_counts=True)
        return Counter({self.__palette[int(v)]: int(c) for v, c in zip(values, counts)})

    def transpose(self) -> 'Pattern':
        return Pattern(self.__cells.T, self.__palette)

    def first_difference(self, other: 'Pattern'):
        """(x, y, mine, theirs) of the first differing cell scanning rows from the south, or None."""
        if self.__cells.shape != other.cells.shape:
            return (min(self.width, other.width), 0, None, None)
        diff = np.argwhere((self.__cells != other.cells).T)
        if len(diff) == 0:
            return None
        y, x = (int(v) for v in diff[0])
        return (x, y, self.color(x, y), other.color(x, y))

    def __eq__(self, other):
        return isinstance(other, Pattern) and self.__palette == other.palette and \
            np.array_equal(self.__cells, other.cells)

    def __hash__(self):
        return hash((self.__cells.tobytes(), self.__cells.shape, self.__palette))

    def __repr__(self):
        return f"Pattern({self.width}x{self.height}, {dict(self.count_colors())})"
