from dataclasses import dataclass
from typing import Dict, Tuple

from TileModel.Direction import Direction
from TileModel.Glue import Glue, NULL_GLUE


@dataclass(frozen=True)
class TileType:
    """A unit square (4 glue slots) or barely-3D cube (6 slots). Glues are stored in N E S W [U D] order."""
    name:   str
    color:  int
    glues:  Tuple[Glue, ...]

    @staticmethod
    def of(name: str, color: int, dim: int = 2, **sides: Glue) -> 'TileType':
        """`TileType.of("t", 0, N=Glue("a", 1), W=Glue("b", 1))`; missing sides are null."""
        return TileType(name, int(color), tuple(sides.get(d.name, NULL_GLUE) for d in Direction.sides(dim)))

    @property
    def dim(self) -> int:
        return 2 if len(self.glues) == 4 else 3

    def glue(self, direction: Direction) -> Glue:
        slot = direction.slot
        return self.glues[slot] if slot < len(self.glues) else NULL_GLUE

    def glue_map(self) -> Dict[Direction, Glue]:
        return {d: self.glue(d) for d in Direction.sides(self.dim)}

    def clamped(self, temperature: int) -> 'TileType':
        return TileType(self.name, self.color, tuple(g.clamped(temperature) for g in self.glues))

    def with_glue(self, direction: Direction, glue: Glue) -> 'TileType':
        glues = list(self.glues)
        glues[direction.slot] = glue
        return TileType(self.name, self.color, tuple(glues))
