from typing import Dict, List, Optional

import numpy as np

from AssemblyEngine.AttachmentRule import AttachmentRule, ATAMRule
from TileModel.Assembly import Assembly
from TileModel.Direction import Location


class SimState:
    """Single-owner simulation state. The rule (and the system behind it) may be shared."""

    def __init__(self, rule: AttachmentRule, asm: Optional[Assembly] = None):
        self.rule = rule
        self.asm = asm if asm is not None else rule.seed_assembly()
        self.frontier: Dict[Location, None] = {}    # insertion ordered, FIFO by discovery
        self.steps = 0
        self.rng: Optional[np.random.Generator] = None
        self.__legal_cache: Dict[Location, List[int]] = {}

    @property
    def system(self):
        return self.rule.system if isinstance(self.rule, ATAMRule) else self.rule

    @property
    def frontier_list(self) -> List[Location]:
        return list(self.frontier)

    def legal_at(self, loc: Location) -> List[int]:
        legal = self.__legal_cache.get(loc)
        if legal is None:
            legal = self.rule.legal_tiles(self.asm, loc)
            self.__legal_cache[loc] = legal
        return legal

    def forget(self, loc: Location):
        self.__legal_cache.pop(loc, None)
