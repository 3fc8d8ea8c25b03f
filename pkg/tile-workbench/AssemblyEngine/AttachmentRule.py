from typing import List, Tuple

from TileModel.Assembly import Assembly
from TileModel.Attachment import legal_tiles
from TileModel.Direction import Direction, Location
from TileModel.TileAssemblySystem import TileAssemblySystem


class AttachmentRule:
    """What the engine needs to know about a system: where tiles may go and which ones fit."""

    @property
    def dim(self) -> int:
        raise NotImplementedError

    @property
    def probe_order(self) -> Tuple[Direction, ...]:
        return Direction.probe_order(self.dim)

    def in_space(self, loc: Location) -> bool:
        return loc[2] == 0 if self.dim == 2 else loc[2] in (0, 1)

    def seed_assembly(self) -> Assembly:
        raise NotImplementedError

    def legal_tiles(self, asm: Assembly, loc: Location) -> List[int]:
        raise NotImplementedError

    def tile_name(self, index: int) -> str:
        raise NotImplementedError

    def tile_color(self, index: int) -> int:
        raise NotImplementedError


class ATAMRule(AttachmentRule):
    def __init__(self, system: TileAssemblySystem):
        self.system = system

    @property
    def dim(self) -> int:
        return self.system.dim

    def seed_assembly(self) -> Assembly:
        return self.system.seed_assembly()

    def legal_tiles(self, asm: Assembly, loc: Location) -> List[int]:
        return legal_tiles(self.system, asm, loc)

    def tile_name(self, index: int) -> str:
        return self.system.tileset[index].name

    def tile_color(self, index: int) -> int:
        return self.system.tileset[index].color

    def legal_set_is_final(self, asm: Assembly, loc: Location, legal: List[int]) -> bool:
        """True when no tile outside `legal` could ever become attachable at `loc`.

        Over-approximates future neighbors: an empty side can contribute a glue's strength
        whenever any tile type exposes the matching glue on the facing side.
        """
        tiles = self.system.tileset
        tau = self.system.temperature
        legal = set(legal)
        empty_sides = [d for d in self.system.sides if d.step(loc) not in asm and self.in_space(d.step(loc))]
        if not empty_sides:
            return True
        for i, tile in enumerate(tiles):
            if i in legal:
                continue
            potential = 0
            for d in self.system.sides:
                g = tile.glue(d)
                if g.strength == 0:
                    continue
                neighbor = asm.get(d.step(loc))
                if neighbor is not None:
                    if tiles[neighbor].glue(d.opposite) == g:
                        potential += g.strength
                elif d in empty_sides and tiles.with_glue(d.opposite, g):
                    potential += g.strength
            if potential >= tau:
                return False
        return True
