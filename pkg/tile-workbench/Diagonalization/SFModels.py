from dataclasses import dataclass
from typing import Optional, Tuple

from ConfigValidator.CustomErrors.ConfigErrors import UniverseSpecInvalidError
from Diagonalization.CoopSets import coop_sets


@dataclass(frozen=True)
class SFTile:
    """Strength-free tile: four glue labels (0 is null), a color and a cooperation-function index."""
    n:      int = 0
    e:      int = 0
    s:      int = 0
    w:      int = 0
    color:  int = 0
    coop:   int = 0

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.n, self.e, self.s, self.w, self.color, self.coop)

    def label(self, side: str) -> int:
        return getattr(self, side.lower())


@dataclass(frozen=True)
class SFSystem:
    tiles:      Tuple[SFTile, ...]
    seed_index: int = 0

    def __post_init__(self):
        if len(self.tiles) < 1 or not 0 <= self.seed_index < len(self.tiles):
            raise ValueError("strength-free system needs >= 1 tile and a seed index inside the tile list")


DIRECT_SF = "directSF"
PAPER_FLOW = "paperFlow"


@dataclass(frozen=True)
class Universe:
    """Parameters of the enumeration sweep. Omitted step budget and pattern size derive from the system count."""
    max_tile_types: int = 1
    num_colors:     int = 8
    num_coop_sets:  int = 168
    steps:          Optional[int] = None
    patt_size:      Optional[int] = None
    mode:           str = DIRECT_SF

    def __post_init__(self):
        for name in ("max_tile_types", "num_colors", "num_coop_sets"):
            if getattr(self, name) < 1:
                raise UniverseSpecInvalidError(self.to_text(), f"{name} must be positive")
        if not 1 <= self.num_coop_sets <= len(coop_sets()):
            raise UniverseSpecInvalidError(self.to_text(), f"coops must lie in [1, {len(coop_sets())}]")
        if self.num_colors > 8:
            raise UniverseSpecInvalidError(self.to_text(), "at most 8 colors exist")
        if self.mode not in (DIRECT_SF, PAPER_FLOW):
            raise UniverseSpecInvalidError(self.to_text(), f"unknown mode {self.mode}")
        if self.patt_size is not None and self.patt_size < 2:
            raise UniverseSpecInvalidError(self.to_text(), "pattsize must be at least 2")

    def step_budget(self, num_systems: int) -> int:
        return self.steps if self.steps is not None else (2 * num_systems) ** 2

    def pattern_size(self, num_systems: int) -> int:
        return self.patt_size if self.patt_size is not None else num_systems

    def to_text(self) -> str:
        parts = [f"tiles={self.max_tile_types}", f"colors={self.num_colors}", f"coops={self.num_coop_sets}"]
        if self.steps is not None:
            parts.append(f"steps={self.steps}")
        if self.patt_size is not None:
            parts.append(f"pattsize={self.patt_size}")
        parts.append(f"mode={self.mode}")
        return ",".join(parts)

    @staticmethod
    def from_text(text: str) -> 'Universe':
        """`tiles=T,colors=C,coops=K,steps=S,pattsize=P,mode=directSF`; omitted keys keep their defaults."""
        keys = {"tiles": "max_tile_types", "colors": "num_colors", "coops": "num_coop_sets",
                "steps": "steps", "pattsize": "patt_size", "mode": "mode"}
        if text in PRESETS:
            return PRESETS[text]
        values = {}
        for item in filter(None, text.split(",")):
            key, sep, value = item.partition("=")
            if sep != "=" or key not in keys:
                raise UniverseSpecInvalidError(text, f"unknown entry `{item}`")
            if key == "mode":
                values[keys[key]] = value
            else:
                try:
                    values[keys[key]] = int(value)
                except ValueError:
                    raise UniverseSpecInvalidError(text, f"`{key}` needs an integer")
        return Universe(**values)


PRESETS = {
    "micro":        Universe(max_tile_types=1, num_colors=2, num_coop_sets=2),
    "micro-colors": Universe(max_tile_types=1, num_colors=8, num_coop_sets=2, steps=400, patt_size=16),
    "micro-coops":  Universe(max_tile_types=1, num_colors=2, num_coop_sets=8, steps=400, patt_size=16),
    "micro-full":   Universe(max_tile_types=1, num_colors=2, num_coop_sets=168, steps=36, patt_size=3),
    # the systems requiring only a north match grow one column south, and flip below the cell size
    "micro-column": Universe(max_tile_types=1, num_colors=1, num_coop_sets=168, steps=330, patt_size=320),
    "paper":        Universe(),
}
