from dataclasses import dataclass
from typing import Union

import numpy as np


@dataclass(frozen=True)
class PaperOrder:
    """First live frontier location (FIFO), first fitting tile in tile-set order."""

    def describe(self) -> str:
        return "paper"


@dataclass(frozen=True)
class UniformRandom:
    """Uniform draw over every currently legal (location, tile) pair."""
    seed: int

    def generator(self) -> np.random.Generator:
        return np.random.default_rng(self.seed & 0xFFFFFFFFFFFFFFFF)

    def describe(self) -> str:
        return f"random:{self.seed}"


AttachmentPolicy = Union[PaperOrder, UniformRandom]


def parse_policy(text: str) -> AttachmentPolicy:
    """`paper` or `random:<seed>`."""
    if text == "paper":
        return PaperOrder()
    kind, sep, seed = text.partition(":")
    if kind == "random" and sep == ":":
        return UniformRandom(int(seed))
    raise ValueError(f"unknown policy `{text}`")
