from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Set, Tuple, Union

from AssemblyEngine.AttachmentRule import ATAMRule
from TileModel.Assembly import Assembly
from TileModel.Direction import Location
from TileModel.TileAssemblySystem import TileAssemblySystem

FrozenAssembly = FrozenSet[Tuple[Location, int]]


@dataclass(frozen=True)
class Overflow:
    reason: str


def enumerate_terminal(system: TileAssemblySystem, max_assemblies: int,
                       max_size: int) -> Union[Set[FrozenAssembly], Overflow]:
    """Breadth-first search over producible assemblies, keyed by absolute placement.

    Attachments never lose strength, so a location whose legal set can no longer grow ends up
    holding one of those tiles in every terminal assembly. Such a location is expanded alone;
    otherwise every legal (location, tile) pair is expanded.
    """
    rule = ATAMRule(system)
    start = system.seed_assembly()
    visited = {start.frozen()}
    queue = deque([start])
    terminals: Set[FrozenAssembly] = set()

    while queue:
        asm = queue.popleft()
        options = _options(rule, asm)
        if not options:
            terminals.add(asm.frozen())
            continue
        for loc, idx in options:
            child = asm.copy()
            child.place(loc, idx)
            if len(child) > max_size:
                return Overflow(f"an assembly exceeded {max_size} tiles")
            key = child.frozen()
            if key in visited:
                continue
            visited.add(key)
            if len(visited) > max_assemblies:
                return Overflow(f"more than {max_assemblies} producible assemblies")
            queue.append(child)
    return terminals


def _options(rule: ATAMRule, asm: Assembly):
    candidates = {}
    for loc in sorted(_empty_neighbors(rule, asm)):
        legal = rule.legal_tiles(asm, loc)
        if legal:
            candidates[loc] = legal
    for loc, legal in candidates.items():
        if rule.legal_set_is_final(asm, loc, legal):
            return [(loc, idx) for idx in legal]
    return [(loc, idx) for loc, legal in candidates.items() for idx in legal]


def _empty_neighbors(rule: ATAMRule, asm: Assembly):
    empty = set()
    for loc in asm:
        for d in rule.probe_order:
            n = d.step(loc)
            if n not in asm and rule.in_space(n):
                empty.add(n)
    return empty


def thaw(frozen: FrozenAssembly) -> Assembly:
    return Assembly(dict(sorted(frozen)))
