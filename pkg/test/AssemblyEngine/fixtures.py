from TileModel.Glue import Glue
from TileModel.TileAssemblySystem import TileAssemblySystem
from TileModel.TileSet import TileSet
from TileModel.TileType import TileType


def null_tile_system() -> TileAssemblySystem:
    return TileAssemblySystem(TileSet([TileType.of("lonely", 0)]), [((0, 0, 0), 0)], 1)


def sticky_system() -> TileAssemblySystem:
    """tau=1, one tile that binds to itself on every side: grows forever."""
    a = Glue("a", 1)
    return TileAssemblySystem(TileSet([TileType.of("x", 0, N=a, E=a, S=a, W=a)]), [((0, 0, 0), 0)], 1)


def east_west_system() -> TileAssemblySystem:
    a = Glue("a", 1)
    return TileAssemblySystem(TileSet([TileType.of("t", 0, E=a, W=a)]), [((0, 0, 0), 0)], 1)


def choice_system() -> TileAssemblySystem:
    """Two tile types compete for the single slot east of the seed."""
    a = Glue("a", 1)
    tiles = TileSet([
        TileType.of("seed", 0, E=a),
        TileType.of("white", 0, W=a),
        TileType.of("black", 1, W=a),
    ])
    return TileAssemblySystem(tiles, [((0, 0, 0), 0)], 1)


def tau2_square(n: int) -> TileAssemblySystem:
    """n x n square: strength-2 bottom row and left column, cooperative interior."""
    s2, a = lambda k: Glue(f"row{k}", 2), Glue("fill", 1)
    tiles = [TileType.of("corner", 1, E=s2(1), N=Glue("col1", 2))]
    for k in range(1, n):
        east = s2(k + 1) if k + 1 < n else Glue("", 0)
        tiles.append(TileType.of(f"row{k}", 0, W=s2(k), E=east, N=a))
        north = Glue(f"col{k + 1}", 2) if k + 1 < n else Glue("", 0)
        tiles.append(TileType.of(f"col{k}", 0, S=Glue(f"col{k}", 2), N=north, E=a))
    tiles.append(TileType.of("fill", 0, W=a, S=a, N=a, E=a))
    return TileAssemblySystem(TileSet(tiles), [((0, 0, 0), 0)], 2)
