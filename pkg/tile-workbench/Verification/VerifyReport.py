from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class Mismatch:
    """First disagreement with the target. `location` is None when a strict color check failed."""
    location:   Optional[Tuple[int, int]]
    expected:   Optional[int]
    actual:     Optional[int]


@dataclass(frozen=True)
class VerifyReport:
    trials:             int
    all_terminal:       bool
    all_match:          bool
    distinct_terminals: int
    first_mismatch:     Optional[Mismatch]
    exhaustive:         bool

    def __post_init__(self):
        if self.all_match and not self.all_terminal:
            raise ValueError("a report cannot match on non-terminal assemblies")

    @property
    def passed(self) -> bool:
        return self.all_match

    def to_line(self) -> str:
        line = f"VERIFY {'pass' if self.passed else 'fail'} trials={self.trials} " \
               f"distinct={self.distinct_terminals} exhaustive={int(self.exhaustive)}"
        if self.first_mismatch is not None and self.first_mismatch.location is not None:
            x, y = self.first_mismatch.location
            line += f" mismatch={x},{y}"
        return line
