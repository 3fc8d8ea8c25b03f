from typing import List, Tuple

from TileModel.Assembly import Assembly
from TileModel.Attachment import attachment_strength
from TileModel.Direction import Location
from TileModel.TileAssemblySystem import TileAssemblySystem


def audit_assembly(system: TileAssemblySystem, asm: Assembly) -> List[Tuple[Location, int, int]]:
    """Replays `asm` in insertion order; returns (location, tile, strength) for every placement that
    was below the temperature when it happened. The leading entries must be the seed."""
    order = list(asm.items())
    seed = list(system.seed)
    if order[:len(seed)] != seed:
        return [(loc, idx, -1) for loc, idx in order[:len(seed)]]

    replay = system.seed_assembly()
    violations = []
    for loc, idx in order[len(seed):]:
        strength = attachment_strength(system, replay, loc, system.tileset[idx])
        if strength < system.temperature:
            violations.append((loc, idx, strength))
        replay.place(loc, idx)
    return violations
