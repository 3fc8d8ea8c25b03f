from fractions import Fraction
from math import prod

from Diagonalization.SFModels import Universe


def tile_types_per_size(universe: Universe, t: int) -> int:
    """Possible tile types when a tile set has `t` members: glue labels 0..t on four sides."""
    return universe.num_coop_sets * universe.num_colors * (t + 1) ** 4


def count_sf_systems(universe: Universe) -> int:
    """Tile sets of every size up to the maximum, each once per choice of seed tile."""
    return sum(tile_types_per_size(universe, t) ** t * t for t in range(1, universe.max_tile_types + 1))


def count_sf_systems_reference(universe: Universe) -> int:
    """Second evaluation of the same sum through exact rationals and an explicit product."""
    total = Fraction(0)
    for t in range(1, universe.max_tile_types + 1):
        glues = Fraction(t + 1)
        per_tile = Fraction(universe.num_coop_sets) * universe.num_colors * glues * glues * glues * glues
        total += prod([per_tile] * t) * t
    assert total.denominator == 1
    return int(total.numerator)
