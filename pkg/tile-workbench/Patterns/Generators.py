from itertools import combinations
from typing import Iterable, Tuple

import numpy as np

from ConfigValidator.CustomErrors.PatternErrors import OutOfRangeError, SeparationViolationError
from Patterns.Pattern import Pattern
from TileModel.Palette import Color


def ceil_log2(n: int) -> int:
    """⌈log2 n⌉ for n >= 1."""
    return (n - 1).bit_length()


def floor_log2(n: int) -> int:
    return n.bit_length() - 1


def _check_size(n: int):
    if n < 1:
        raise OutOfRangeError("n", n, n)


def _check_inside(n: int, **coords: int):
    for name, value in coords.items():
        if not 0 <= value < n:
            raise OutOfRangeError(name, value, n)


def single_pixel(n: int, i: int, j: int) -> Pattern:
    _check_size(n)
    _check_inside(n, i=i, j=j)
    cells = np.full((n, n), Color.WHITE)
    cells[i, j] = Color.BLACK
    return Pattern(cells)


def pixel_separation(n: int) -> int:
    return max(1, ceil_log2(n))


def check_separation(n: int, pixels: Iterable[Tuple[int, int]]):
    sep = pixel_separation(n)
    for (x, y), (x2, y2) in combinations(sorted(set(pixels)), 2):
        if abs(x - x2) < sep and abs(y - y2) < sep:
            raise SeparationViolationError((x, y), (x2, y2), sep)


def multi_pixel(n: int, pixels: Iterable[Tuple[int, int]]) -> Pattern:
    _check_size(n)
    pixels = sorted(set(pixels))
    for x, y in pixels:
        _check_inside(n, x=x, y=y)
    check_separation(n, pixels)
    cells = np.full((n, n), Color.WHITE)
    for x, y in pixels:
        cells[x, y] = Color.BLACK
    return Pattern(cells)


def stripes(n: int, i: int, j: int) -> Pattern:
    _check_size(n)
    if not 1 <= i < n:
        raise OutOfRangeError("i", i, n)
    if not 1 <= j < n:
        raise OutOfRangeError("j", j, n)
    xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    black = (xs % i == 0) | (ys % j == 0)
    return Pattern(np.where(black, Color.BLACK, Color.WHITE))


def grid_repeat(pattern: Pattern, m: int) -> Pattern:
    if m < 1:
        raise OutOfRangeError("m", m, pattern.width)
    return Pattern(np.tile(pattern.cells, (m, m)), pattern.palette)


def random_two_colored(n: int, seed: int) -> Pattern:
    rng = np.random.default_rng(seed)
    return Pattern(rng.integers(0, 2, size=(n, n)))
