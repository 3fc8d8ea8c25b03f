from dataclasses import dataclass, field
from typing import List

FLIP = "flip"
EMPTY_FRONTIER_EARLY = "emptyFrontierEarly"
NO_BOUNDARY_COLOR = "noBoundaryColor"
TOO_SMALL = "tooSmall"
NO_INDEX_TILE = "noIndexTile"

REASONS = (FLIP, EMPTY_FRONTIER_EARLY, NO_BOUNDARY_COLOR, TOO_SMALL, NO_INDEX_TILE)


@dataclass(frozen=True)
class BitRecord:
    serial: int
    value:  int
    reason: str


@dataclass
class BitSequence:
    """One bit per enumerated system, with the reason each bit was chosen."""
    bits:       List[int] = field(default_factory=list)
    provenance: List[BitRecord] = field(default_factory=list)

    @staticmethod
    def of(bits) -> 'BitSequence':
        """A bare sequence, every bit recorded as a flip."""
        bits = [int(b) for b in bits]
        return BitSequence(bits, [BitRecord(i, b, FLIP) for i, b in enumerate(bits)])

    def append(self, value: int, reason: str):
        self.provenance.append(BitRecord(len(self.bits), value, reason))
        self.bits.append(value)

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def to_text(self) -> str:
        return "".join(str(b) for b in self.bits)
