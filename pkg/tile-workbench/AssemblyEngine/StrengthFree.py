from typing import List

from AssemblyEngine.AttachmentRule import AttachmentRule
from Diagonalization.CoopSets import coop_sets
from Diagonalization.SFModels import SFSystem, SFTile
from TileModel.Assembly import Assembly
from TileModel.Direction import Direction, Location

# (side of the candidate, bit in the match vector)
_MATCH_BITS = ((Direction.N, 1), (Direction.E, 2), (Direction.S, 4), (Direction.W, 8))
_FIELD = {Direction.N: 0, Direction.E: 1, Direction.S: 2, Direction.W: 3}


def match_vector(sys: SFSystem, asm: Assembly, loc: Location, tile: SFTile) -> int:
    labels = tile.as_tuple()
    vector = 0
    for d, bit in _MATCH_BITS:
        neighbor = asm.get(d.step(loc))
        if neighbor is None:
            continue
        mine = labels[_FIELD[d]]
        theirs = sys.tiles[neighbor].as_tuple()[_FIELD[d.opposite]]
        if mine != 0 and mine == theirs:
            vector |= bit
    return vector


def sf_attachable(sys: SFSystem, asm: Assembly, loc: Location, tile: SFTile) -> bool:
    return bool((coop_sets()[tile.coop] >> match_vector(sys, asm, loc, tile)) & 1)


class StrengthFreeRule(AttachmentRule):
    """Cooperation-function attachment on the plane; the seed sits at the origin."""

    def __init__(self, sys: SFSystem):
        self.sf_system = sys

    @property
    def dim(self) -> int:
        return 2

    def seed_assembly(self) -> Assembly:
        return Assembly({(0, 0, 0): self.sf_system.seed_index})

    def legal_tiles(self, asm: Assembly, loc: Location) -> List[int]:
        return [i for i, tile in enumerate(self.sf_system.tiles) if sf_attachable(self.sf_system, asm, loc, tile)]

    def tile_name(self, index: int) -> str:
        return "sf" + "".join(f".{v}" for v in self.sf_system.tiles[index].as_tuple())

    def tile_color(self, index: int) -> int:
        return self.sf_system.tiles[index].color
