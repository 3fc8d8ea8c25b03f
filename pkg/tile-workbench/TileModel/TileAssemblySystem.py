from typing import Sequence, Tuple

from ConfigValidator.CustomErrors.ModelErrors import ValidationError
from TileModel.Assembly import Assembly
from TileModel.Direction import Direction, Location
from TileModel.TileSet import TileSet


class TileAssemblySystem:
    """Tile set + seed + temperature. Immutable; glue strengths above the temperature are clamped to it."""

    def __init__(self, tileset: TileSet, seed: Sequence[Tuple[Location, int]], temperature: int, dim: int = 2):
        if not isinstance(temperature, int) or isinstance(temperature, bool) or temperature < 1:
            raise ValidationError(f"temperature must be a positive integer, found {temperature!r}")
        if dim not in (2, 3):
            raise ValidationError(f"dimension must be 2 or 3, found {dim!r}")
        if len(seed) == 0:
            raise ValidationError("seed assembly is empty")

        for tile in tileset:
            if tile.dim != dim:
                raise ValidationError(f"tile {tile.name} has {len(tile.glues)} glue slots in a {dim}D system")
        seed = tuple((tuple(loc), idx) for loc, idx in seed)
        for loc, idx in seed:
            if not 0 <= idx < len(tileset):
                raise ValidationError(f"seed refers to tile index {idx} outside the tile set")
            if dim == 2 and loc[2] != 0:
                raise ValidationError(f"seed location {loc} leaves the plane in a 2D system")
            if dim == 3 and loc[2] not in (0, 1):
                raise ValidationError(f"seed location {loc} outside the planes z=0 and z=1")
        if len({loc for loc, _ in seed}) != len(seed):
            raise ValidationError("seed places two tiles at one location")

        self.__tileset = self.__clamp(tileset, temperature)
        self.__seed = seed
        self.__temperature = temperature
        self.__dim = dim

    @staticmethod
    def __clamp(tileset: TileSet, temperature: int) -> TileSet:
        if all(g.strength <= temperature for t in tileset for g in t.glues):
            return tileset
        return TileSet([t.clamped(temperature) for t in tileset], tileset.palette)

    @property
    def tileset(self) -> TileSet:
        return self.__tileset

    @property
    def seed(self) -> Tuple[Tuple[Location, int], ...]:
        return self.__seed

    @property
    def temperature(self) -> int:
        return self.__temperature

    @property
    def dim(self) -> int:
        return self.__dim

    @property
    def sides(self) -> Tuple[Direction, ...]:
        return Direction.sides(self.__dim)

    def is_singly_seeded(self) -> bool:
        return len(self.__seed) == 1

    def seed_assembly(self) -> Assembly:
        return Assembly(dict(self.__seed))

    def in_space(self, loc: Location) -> bool:
        return loc[2] == 0 if self.__dim == 2 else loc[2] in (0, 1)

    def __eq__(self, other):
        return isinstance(other, TileAssemblySystem) and \
            (self.__tileset, self.__seed, self.__temperature, self.__dim) == \
            (other.tileset, other.seed, other.temperature, other.dim)

    def __hash__(self):
        return hash((self.__tileset, self.__seed, self.__temperature, self.__dim))

    def __repr__(self):
        return f"TileAssemblySystem({len(self.__tileset)} tiles, tau={self.__temperature}, dim={self.__dim})"
