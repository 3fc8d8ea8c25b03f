from collections import Counter, defaultdict
from typing import Dict, List, Sequence, Tuple

from ConfigValidator.CustomErrors.ModelErrors import ValidationError
from TileModel.Direction import Direction
from TileModel.Glue import Glue
from TileModel.Palette import DEFAULT_PALETTE
from TileModel.TileType import TileType


class TileSet:
    """Ordered, immutable collection of tile types. Order defines which tile PaperOrder tries first."""

    def __init__(self, tiles: Sequence[TileType], palette: Sequence[str] = DEFAULT_PALETTE):
        self.__tiles = tuple(tiles)
        self.__palette = tuple(palette)

        duplicates = [name for name, count in Counter(t.name for t in self.__tiles).items() if count > 1]
        if duplicates:
            raise ValidationError(f"duplicate tile names {sorted(duplicates)}")
        if len(set(self.__palette)) != len(self.__palette):
            raise ValidationError("duplicate palette names")
        for tile in self.__tiles:
            if not 0 <= tile.color < len(self.__palette):
                raise ValidationError(f"tile {tile.name} uses color {tile.color} outside the palette")
        if len({t.dim for t in self.__tiles}) > 1:
            raise ValidationError("tiles mix 4 and 6 glue slots")

        self.__by_name = {t.name: i for i, t in enumerate(self.__tiles)}
        # (direction, glue) -> tile indices, ascending
        index: Dict[Tuple[Direction, Glue], List[int]] = defaultdict(list)
        for i, tile in enumerate(self.__tiles):
            for d in Direction.sides(tile.dim):
                g = tile.glue(d)
                if g.strength > 0:
                    index[(d, g)].append(i)
        self.__index = {k: tuple(v) for k, v in index.items()}

    @property
    def tiles(self) -> Tuple[TileType, ...]:
        return self.__tiles

    @property
    def palette(self) -> Tuple[str, ...]:
        return self.__palette

    def __len__(self):
        return len(self.__tiles)

    def __getitem__(self, i: int) -> TileType:
        return self.__tiles[i]

    def __iter__(self):
        return iter(self.__tiles)

    def __eq__(self, other):
        return isinstance(other, TileSet) and self.__tiles == other.tiles and self.__palette == other.palette

    def __hash__(self):
        return hash((self.__tiles, self.__palette))

    def index_of(self, name: str) -> int:
        try:
            return self.__by_name[name]
        except KeyError:
            raise ValidationError(f"unknown tile `{name}`")

    def with_glue(self, direction: Direction, glue: Glue) -> Tuple[int, ...]:
        """Indices of the tiles exposing `glue` (strength > 0) on side `direction`."""
        return self.__index.get((direction, glue), ())

    def glue_inventory(self) -> Counter:
        """Distinct (label, strength) glues with the number of tile sides carrying them."""
        inventory = Counter()
        for tile in self.__tiles:
            for g in tile.glues:
                if not g.is_null:
                    inventory[(g.label, g.strength)] += 1
        return inventory

    def strength_histogram(self) -> Counter:
        return Counter(g.strength for t in self.__tiles for g in t.glues)
