from typing import List

from ConfigValidator.CustomErrors.ModelErrors import OccupiedLocationError
from TileModel.Assembly import Assembly
from TileModel.Direction import Location
from TileModel.Glue import glue_binds
from TileModel.TileAssemblySystem import TileAssemblySystem
from TileModel.TileType import TileType


def attachment_strength(system: TileAssemblySystem, asm: Assembly, loc: Location, tile: TileType) -> int:
    if loc in asm:
        raise OccupiedLocationError(loc)
    tiles = system.tileset
    total = 0
    for d in system.sides:
        neighbor = asm.get(d.step(loc))
        if neighbor is not None:
            total += glue_binds(tile.glue(d), tiles[neighbor].glue(d.opposite))
    return total


def legal_tiles(system: TileAssemblySystem, asm: Assembly, loc: Location) -> List[int]:
    """Tile indices (tile-set order) whose attachment strength at the empty `loc` reaches the temperature."""
    tiles = system.tileset
    tau = system.temperature
    strength = {}
    for d in system.sides:
        neighbor = asm.get(d.step(loc))
        if neighbor is None:
            continue
        facing = tiles[neighbor].glue(d.opposite)
        if facing.strength == 0:
            continue
        for candidate in tiles.with_glue(d, facing):
            strength[candidate] = strength.get(candidate, 0) + facing.strength
    return sorted(i for i, s in strength.items() if s >= tau)
