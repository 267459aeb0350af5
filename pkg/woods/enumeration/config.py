"""Configuration for exact shortest and closest vector enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, slots=True)
class EnumerationConfig:
    """Search limits; ``float_slack`` only widens the float pruning radius."""

    node_budget: int = 200_000_000
    lll_delta: Fraction = Fraction(99, 100)
    float_slack: float = 1e-9
    max_bits: int = 256

    def __post_init__(self) -> None:
        if self.node_budget < 1:
            raise ValueError("node_budget must be positive")
        if not Fraction(1, 4) < self.lll_delta <= 1:
            raise ValueError("lll_delta must lie in (1/4, 1]")
        if self.float_slack < 0:
            raise ValueError("float_slack must be non-negative")


DEFAULT_ENUMERATION_CONFIG = EnumerationConfig()
