from enum import Enum
from typing import Tuple

Location = Tuple[int, int, int]


class Direction(Enum):
    N = (0, 1, 0)
    E = (1, 0, 0)
    S = (0, -1, 0)
    W = (-1, 0, 0)
    U = (0, 0, 1)
    D = (0, 0, -1)

    @property
    def offset(self) -> Location:
        return self.value

    @property
    def opposite(self) -> 'Direction':
        return _OPPOSITE[self]

    @property
    def slot(self) -> int:
        """Position of this side in a tile's glue tuple (file order N E S W U D)."""
        return _SLOT[self]

    def step(self, loc: Location, distance: int = 1) -> Location:
        dx, dy, dz = self.value
        return (loc[0] + dx * distance, loc[1] + dy * distance, loc[2] + dz * distance)

    @staticmethod
    def sides(dim: int) -> Tuple['Direction', ...]:
        return FILE_ORDER_2D if dim == 2 else FILE_ORDER_3D

    @staticmethod
    def probe_order(dim: int) -> Tuple['Direction', ...]:
        return PROBE_ORDER_2D if dim == 2 else PROBE_ORDER_3D


_OPPOSITE = {
    Direction.N: Direction.S, Direction.S: Direction.N,
    Direction.E: Direction.W, Direction.W: Direction.E,
    Direction.U: Direction.D, Direction.D: Direction.U,
}
_SLOT = {d: i for i, d in enumerate([Direction.N, Direction.E, Direction.S, Direction.W, Direction.U, Direction.D])}

FILE_ORDER_2D = (Direction.N, Direction.E, Direction.S, Direction.W)
FILE_ORDER_3D = FILE_ORDER_2D + (Direction.U, Direction.D)

# +x, -x, +y, -y, then +z, -z
PROBE_ORDER_2D = (Direction.E, Direction.W, Direction.N, Direction.S)
PROBE_ORDER_3D = PROBE_ORDER_2D + (Direction.U, Direction.D)
