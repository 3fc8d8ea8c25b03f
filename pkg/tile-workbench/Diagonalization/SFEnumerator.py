from typing import Iterator, List

from Diagonalization.SFModels import SFSystem, SFTile, Universe

FIELDS_PER_TILE = 6


def _bases(universe: Universe, t: int) -> List[int]:
    glues = t + 1
    return [glues, glues, glues, glues, universe.num_colors, universe.num_coop_sets]


def increment_tile_set(digits: List[int], universe: Universe, t: int) -> bool:
    """Odometer step over the flattened tile set, tiles[0] least significant.

    Inside a tile the glue slots (N, E, S, W) turn first, then the color, then the cooperation set.
    Returns False once every digit has wrapped back to zero.
    """
    bases = _bases(universe, t)
    for pos in range(len(digits)):
        digits[pos] += 1
        if digits[pos] < bases[pos % FIELDS_PER_TILE]:
            return True
        digits[pos] = 0
    return False


def _tiles(digits: List[int]) -> tuple:
    return tuple(SFTile(*digits[k:k + FIELDS_PER_TILE]) for k in range(0, len(digits), FIELDS_PER_TILE))


def sf_enumerator(universe: Universe) -> Iterator[SFSystem]:
    """Every system in sweep order: size ascending, tile sets in odometer order, seed index ascending.

    Repeated tile types and permuted tile sets are yielded as they come.
    """
    for t in range(1, universe.max_tile_types + 1):
        digits = [0] * (FIELDS_PER_TILE * t)
        while True:
            tiles = _tiles(digits)
            for seed_index in range(t):
                yield SFSystem(tiles, seed_index)
            if not increment_tile_set(digits, universe, t):
                break
