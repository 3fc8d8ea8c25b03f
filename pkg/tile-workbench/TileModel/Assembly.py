from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from ConfigValidator.CustomErrors.ModelErrors import OccupiedLocationError
from TileModel.Direction import Location


class Assembly:
    """Placement of tile indices on the integer lattice, remembering the order tiles were added."""

    def __init__(self, placements: Optional[Dict[Location, int]] = None):
        self.__placements: Dict[Location, int] = {}
        self.__lo: Optional[List[int]] = None
        self.__hi: Optional[List[int]] = None
        for loc, tile_index in (placements or {}).items():
            self.place(loc, tile_index)

    def place(self, loc: Location, tile_index: int):
        if loc in self.__placements:
            raise OccupiedLocationError(loc)
        self.__placements[loc] = tile_index
        if self.__lo is None:
            self.__lo, self.__hi = list(loc), list(loc)
        else:
            for axis in range(3):
                if loc[axis] < self.__lo[axis]:
                    self.__lo[axis] = loc[axis]
                elif loc[axis] > self.__hi[axis]:
                    self.__hi[axis] = loc[axis]

    def __contains__(self, loc: Location) -> bool:
        return loc in self.__placements

    def __len__(self) -> int:
        return len(self.__placements)

    def __iter__(self) -> Iterator[Location]:
        return iter(self.__placements)

    def get(self, loc: Location) -> Optional[int]:
        return self.__placements.get(loc)

    def items(self):
        """(location, tile index) pairs in insertion order."""
        return self.__placements.items()

    @property
    def insertion_order(self) -> List[Location]:
        return list(self.__placements)

    @property
    def bounds(self) -> Tuple[Tuple[int, int, int], Tuple[int, int, int]]:
        if self.__lo is None:
            raise ValueError("empty assembly has no bounds")
        return tuple(self.__lo), tuple(self.__hi)

    def copy(self) -> 'Assembly':
        return Assembly(dict(self.__placements))

    def frozen(self) -> FrozenSet[Tuple[Location, int]]:
        return frozenset(self.__placements.items())

    def layer(self, z: int) -> 'Assembly':
        return Assembly({loc: t for loc, t in self.__placements.items() if loc[2] == z})

    def __eq__(self, other):
        return isinstance(other, Assembly) and dict(self.items()) == dict(other.items())

    def __repr__(self):
        return f"Assembly({len(self)} tiles)"
