from enum import IntEnum
from typing import Dict, Sequence, Tuple


class Color(IntEnum):
    WHITE   = 0
    BLACK   = 1
    RED     = 2
    GREEN   = 3
    AQUA    = 4
    BLUE    = 5
    YELLOW  = 6
    FUCHSIA = 7


DEFAULT_PALETTE: Tuple[str, ...] = tuple(c.name.capitalize() for c in Color)

DEFAULT_RGB: Dict[str, Tuple[int, int, int]] = {
    "White":   (255, 255, 255),
    "Black":   (0, 0, 0),
    "Red":     (255, 0, 0),
    "Green":   (0, 128, 0),
    "Aqua":    (0, 255, 255),
    "Blue":    (0, 0, 255),
    "Yellow":  (255, 255, 0),
    "Fuchsia": (255, 0, 255),
}


def palette_to_text(palette: Sequence[str]) -> str:
    return " ".join(f"{i}={name}" for i, name in enumerate(palette))


def palette_from_tokens(tokens: Sequence[str]) -> Tuple[str, ...]:
    """Reads `idx=name` tokens; indices must be 0..k-1 in order."""
    names = []
    for expected, token in enumerate(tokens):
        idx, sep, name = token.partition("=")
        if sep != "=" or not idx.isdigit() or int(idx) != expected or name == "":
            raise ValueError(f"bad palette entry {token!r}")
        names.append(name)
    return tuple(names)
