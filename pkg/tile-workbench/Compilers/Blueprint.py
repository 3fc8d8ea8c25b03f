from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from ConfigValidator.CustomErrors.CompilerErrors import CertificationError, SpecError
from Patterns.Pattern import Pattern
from TileModel.Direction import Direction, Location
from TileModel.Glue import Glue, NULL_GLUE, glue_binds
from TileModel.Palette import DEFAULT_PALETTE
from TileModel.TileAssemblySystem import TileAssemblySystem
from TileModel.TileSet import TileSet
from TileModel.TileType import TileType


class Blueprint:
    """The intended terminal assembly of a construction, cell by cell.

    Cells carry a color and a role; faces carry glues and may dangle (face set, no cell behind it).
    `compile` turns every distinct (color, faces) combination into a tile type, named after the
    role of its first cell, and certifies that the resulting system grows exactly this assembly.
    `via` records the faces a cell is meant to attach by; block expansion reads it.
    """

    def __init__(self, name: str, temperature: int, dim: int = 2, palette: Sequence[str] = DEFAULT_PALETTE):
        self.name = name
        self.temperature = temperature
        self.dim = dim
        self.palette = tuple(palette)
        self.cells: Dict[Location, Tuple[int, str]] = {}
        self.faces: Dict[Tuple[Location, Direction], Glue] = {}
        self.via: Dict[Location, Tuple[Direction, ...]] = {}
        self.extras: List[Tuple[str, int, Tuple[Glue, ...]]] = []
        self.seed: Optional[Location] = None

    # ---------------------------------------------------------------- building

    def cell(self, loc: Location, color: int, role: str, via: Sequence[Direction] = ()):
        if loc in self.cells:
            raise SpecError(f"{self.name}: cell {loc} laid out twice ({self.cells[loc][1]} and {role})")
        if self.dim == 2 and loc[2] != 0 or self.dim == 3 and loc[2] not in (0, 1):
            raise SpecError(f"{self.name}: cell {loc} outside the allowed planes")
        self.cells[loc] = (int(color), role)
        self.via[loc] = tuple(via)

    def face(self, loc: Location, direction: Direction, glue: Glue):
        key = (loc, direction)
        if key in self.faces and self.faces[key] != glue:
            raise SpecError(f"{self.name}: face {direction.name} of {loc} set to {self.faces[key]} and {glue}")
        self.faces[key] = glue

    def bond(self, loc: Location, direction: Direction, glue: Glue):
        """Same glue on both sides of the edge between `loc` and its neighbor in `direction`."""
        self.face(loc, direction, glue)
        self.face(direction.step(loc), direction.opposite, glue)

    def set_seed(self, loc: Location):
        self.seed = loc

    def extra(self, role: str, color: int, **sides: Glue):
        """A tile type that no cell of the blueprint needs; it still joins the tile set."""
        self.extras.append((role, int(color), tuple(sides.get(d.name, NULL_GLUE) for d in Direction.sides(self.dim))))

    def glue_at(self, loc: Location, direction: Direction) -> Glue:
        return self.faces.get((loc, direction), NULL_GLUE)

    def color_at(self, loc: Location) -> int:
        return self.cells[loc][0]

    def __contains__(self, loc: Location) -> bool:
        return loc in self.cells

    def __len__(self):
        return len(self.cells)

    # ---------------------------------------------------------------- compiling

    def tile_key(self, loc: Location):
        color, _ = self.cells[loc]
        return color, tuple(self.glue_at(loc, d) for d in Direction.sides(self.dim))

    def compile(self, certify: bool = True) -> Tuple[TileAssemblySystem, Dict[Location, int]]:
        if self.seed is None or self.seed not in self.cells:
            raise SpecError(f"{self.name}: seed cell missing")
        index: Dict[tuple, int] = {}
        tiles: List[TileType] = []
        per_role: Dict[str, int] = {}

        def add(role, key):
            if key not in index:
                k = per_role.get(role, 0)
                per_role[role] = k + 1
                index[key] = len(tiles)
                tiles.append(TileType(f"{role}.{k}", key[0], key[1]))
            return index[key]

        layout = {loc: add(role, self.tile_key(loc)) for loc, (_, role) in self.cells.items()}
        for role, color, glues in self.extras:
            add(role, (color, glues))

        system = TileAssemblySystem(TileSet(tiles, self.palette), [(self.seed, layout[self.seed])],
                                    self.temperature, self.dim)
        if certify:
            BlueprintCertifier(self, system, layout).certify()
        return system, layout

    def pattern(self, z: Optional[int] = None) -> Pattern:
        from Patterns.AssemblyPattern import assembly_pattern, NotRectangular
        from TileModel.Assembly import Assembly
        asm = Assembly({loc: color for loc, (color, _) in self.cells.items()})
        result = assembly_pattern(asm, lambda c: c, self.palette, z=z)
        if isinstance(result, NotRectangular):
            raise SpecError(f"{self.name}: intended assembly has a hole at {result.hole}")
        return result


class BlueprintCertifier:
    """Checks that a compiled blueprint is directed and that its terminal assembly is the blueprint.

    1. growth: starting from the seed, every cell can attach with its own type.
    2. uniqueness: at every cell, no other type reaches the temperature against the neighbors
       that can be present while the cell is still empty.
    3. containment: no type reaches the temperature at an empty location next to the blueprint.
    Together these make every producible assembly a sub-assembly of the blueprint.
    """

    def __init__(self, blueprint: Blueprint, system: TileAssemblySystem, layout: Dict[Location, int]):
        self.bp = blueprint
        self.system = system
        self.layout = layout
        self.tiles = system.tileset
        self.tau = system.temperature
        self.sides = system.sides

    def certify(self):
        rank = self.__growth_ranks()
        missing = [loc for loc in self.layout if loc not in rank]
        if missing:
            raise CertificationError(self.bp.name, f"{len(missing)} cells can never attach, first {min(missing)}")
        self.__check_containment()
        self.__check_uniqueness(rank)

    def __bond(self, loc: Location, direction: Direction) -> int:
        other = direction.step(loc)
        if other not in self.layout:
            return 0
        return glue_binds(self.tiles[self.layout[loc]].glue(direction),
                          self.tiles[self.layout[other]].glue(direction.opposite))

    def __growth_ranks(self) -> Dict[Location, int]:
        """Parallel rounds of growth from the seed inside the blueprint; cell -> round."""
        rank = {self.bp.seed: 0}
        current = [self.bp.seed]
        round_number = 0
        while current:
            round_number += 1
            candidates = {d.step(loc) for loc in current for d in self.sides}
            grown = [c for c in candidates
                     if c in self.layout and c not in rank
                     and sum(self.__bond(c, d) for d in self.sides if d.step(c) in rank) >= self.tau]
            for c in grown:
                rank[c] = round_number
            current = grown
        return rank

    def __candidates(self, loc: Location, neighbors) -> Dict[int, int]:
        strength: Dict[int, int] = {}
        for d in self.sides:
            n = d.step(loc)
            if n not in neighbors:
                continue
            facing = self.tiles[self.layout[n]].glue(d.opposite)
            if facing.strength == 0:
                continue
            for t in self.tiles.with_glue(d, facing):
                strength[t] = strength.get(t, 0) + facing.strength
        return strength

    def __check_containment(self):
        outside = set()
        for loc in self.layout:
            for d in self.sides:
                n = d.step(loc)
                if n not in self.layout and self.system.in_space(n):
                    outside.add(n)
        for loc in sorted(outside):
            for t, s in self.__candidates(loc, self.layout).items():
                if s >= self.tau:
                    raise CertificationError(self.bp.name, f"tile {self.tiles[t].name} can attach outside at {loc}")

    def __placeable_without(self, cell: Location, target: Location, rank: Dict[Location, int]) -> bool:
        """Whether `target` can be grown while `cell` stays empty.

        Cells from rounds up to the cell's own never needed it. Anything else can only be
        supported through the cone of cells bonded to the target, so a fixpoint over that cone decides.
        """
        limit = rank[cell]

        def settled(loc):
            return loc != cell and rank[loc] <= limit

        if settled(target):
            return True
        cone = {target}
        stack = [target]
        while stack:
            loc = stack.pop()
            for d in self.sides:
                n = d.step(loc)
                if n in self.layout and n != cell and n not in cone and not settled(n) and self.__bond(loc, d):
                    cone.add(n)
                    stack.append(n)

        placed = set()
        pending = deque(sorted(cone))
        while pending:
            loc = pending.popleft()
            if loc in placed:
                continue
            support = sum(self.__bond(loc, d) for d in self.sides
                          if d.step(loc) in placed or d.step(loc) in self.layout and settled(d.step(loc)))
            if support >= self.tau:
                placed.add(loc)
                if loc == target:
                    return True
                pending.extend(d.step(loc) for d in self.sides if d.step(loc) in cone and d.step(loc) not in placed)
        return False

    def __rivals(self, loc: Location, own: int, neighbors) -> List[int]:
        return sorted(t for t, s in self.__candidates(loc, neighbors).items() if s >= self.tau and t != own)

    def __tainted(self, order: List[Location], position: Dict[Location, int]) -> set:
        """Cells from which a cell with a spare input is reachable along bonds to later cells.

        Cells are ordered by growth round. A later bonded neighbor of an untainted cell can never be
        present while that cell is empty: each cell on the way would need yet another later neighbor.
        """
        spare = []
        for loc in order:
            inputs = [self.__bond(loc, d) for d in self.sides
                      if d.step(loc) in position and position[d.step(loc)] < position[loc]]
            total = sum(inputs)
            if any(s and total - s >= self.tau for s in inputs):
                spare.append(loc)
        tainted = set(spare)
        stack = list(spare)
        while stack:
            loc = stack.pop()
            for d in self.sides:
                n = d.step(loc)
                if n in position and position[n] < position[loc] and n not in tainted and self.__bond(loc, d):
                    tainted.add(n)
                    stack.append(n)
        return tainted

    def __check_uniqueness(self, rank: Dict[Location, int]):
        """Neighbors from earlier rounds count as present, untainted later bonded ones as absent.

        Only when a rival still reaches the temperature are the remaining later neighbors settled one
        by one with the cone search.
        """
        order = sorted(self.layout, key=lambda c: (rank[c], c))
        position = {loc: i for i, loc in enumerate(order)}
        tainted = self.__tainted(order, position)
        for loc in order:
            if loc == self.bp.seed:
                continue
            own = self.layout[loc]
            if not self.__rivals(loc, own, self.layout):
                continue
            earlier, later = set(), set()
            for d in self.sides:
                n = d.step(loc)
                if n not in position:
                    continue
                if position[n] < position[loc]:
                    earlier.add(n)
                elif not self.__bond(loc, d) or n in tainted:
                    later.add(n)
            if not self.__rivals(loc, own, earlier | later):
                continue
            present = earlier | {n for n in later if self.__placeable_without(loc, n, rank)}
            rivals = self.__rivals(loc, own, present)
            if rivals:
                raise CertificationError(
                    self.bp.name, f"{self.tiles[rivals[0]].name} competes with {self.tiles[own].name} at {loc}")
