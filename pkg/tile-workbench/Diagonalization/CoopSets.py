from functools import lru_cache
from typing import List, Tuple

import numpy as np

# Match vectors are 4-bit integers: bit0 = N, bit1 = E, bit2 = S, bit3 = W.
# A cooperation function is a 16-bit truth table; bit v holds its value on match vector v.
SIDE_BITS = {"N": 1, "E": 2, "S": 4, "W": 8}


def _monotone_tables(k: int) -> List[int]:
    if k == 0:
        return [0, 1]
    half = 1 << (k - 1)
    lower = _monotone_tables(k - 1)
    # f restricted to x_k = 0 must be pointwise below f restricted to x_k = 1
    return [f0 | (f1 << half) for f0 in lower for f1 in lower if f0 & ~f1 == 0]


@lru_cache(maxsize=None)
def coop_sets() -> Tuple[int, ...]:
    """All monotone boolean functions of the four match bits, ascending by truth table."""
    return tuple(sorted(_monotone_tables(4)))


def brute_force_monotone_tables() -> np.ndarray:
    """Independent check: filter all 2^16 truth tables for monotonicity."""
    tables = np.arange(1 << 16, dtype=np.uint32)
    values = (tables[:, None] >> np.arange(16, dtype=np.uint32)) & 1
    monotone = np.ones(len(tables), dtype=bool)
    for v in range(16):
        for k in range(4):
            w = v | (1 << k)
            if w != v:
                monotone &= values[:, v] <= values[:, w]
    return tables[monotone]


def is_monotone(table: int) -> bool:
    return all(not (table >> v) & 1 or (table >> (v | 1 << k)) & 1 for v in range(16) for k in range(4))


def evaluate(coop_index: int, match_vector: int) -> bool:
    return bool((coop_sets()[coop_index] >> match_vector) & 1)


def requires(*sides: str) -> int:
    """Index of the function true exactly when every named side matches."""
    need = sum(SIDE_BITS[s] for s in sides)
    table = sum(1 << v for v in range(16) if v & need == need)
    return coop_sets().index(table)


def any_of(*families: Tuple[str, ...]) -> int:
    """Index of the function true when at least one family of sides fully matches."""
    table = 0
    for family in families:
        need = sum(SIDE_BITS[s] for s in family)
        table |= sum(1 << v for v in range(16) if v & need == need)
    return coop_sets().index(table)


CONSTANT_FALSE = 0
CONSTANT_TRUE = 167
