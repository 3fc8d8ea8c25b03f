from typing import List, Tuple

from AssemblyEngine.AttachmentRule import AttachmentRule
from TileModel.Assembly import Assembly


def dump_trace(rule: AttachmentRule, asm: Assembly, seed_size: int = 1) -> str:
    """One `STEP <n> <x> <y> [<z>] <tile>` line per attachment after the seed, n counted from 1."""
    lines = []
    for n, (loc, idx) in enumerate(list(asm.items())[seed_size:], start=1):
        coords = f"{loc[0]} {loc[1]}" + (f" {loc[2]}" if rule.dim == 3 else "")
        lines.append(f"STEP {n} {coords} {rule.tile_name(idx)}")
    return "".join(line + "\n" for line in lines)


def parse_trace(text: str) -> List[Tuple[int, Tuple[int, int, int], str]]:
    steps = []
    for line in text.splitlines():
        tokens = line.split()
        if not tokens:
            continue
        if tokens[0] != "STEP" or len(tokens) not in (5, 6):
            raise ValueError(f"bad trace line `{line}`")
        z = int(tokens[4]) if len(tokens) == 6 else 0
        steps.append((int(tokens[1]), (int(tokens[2]), int(tokens[3]), z), tokens[-1]))
    return steps


def first_divergence(expected: str, actual: str):
    """Index and both lines of the first differing step, or None when the traces agree."""
    a, b = expected.splitlines(), actual.splitlines()
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i, x, y
    if len(a) != len(b):
        i = min(len(a), len(b))
        return i, (a[i] if i < len(a) else None), (b[i] if i < len(b) else None)
    return None
