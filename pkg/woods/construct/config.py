"""Configuration for the counterexample engine."""

from __future__ import annotations

from dataclasses import dataclass

from woods.enumeration import DEFAULT_ENUMERATION_CONFIG
from woods.enumeration import EnumerationConfig


@dataclass(frozen=True, slots=True)
class ConstructConfig:
    d_max: int = 200
    max_bits: int = 256
    start_bits: int = 64
    derivative_samples: tuple[int, ...] = (15, 100, 10_000, 1_000_000)
    enumeration: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG

    def __post_init__(self) -> None:
        if self.d_max < 2:
            raise ValueError("d_max must be at least 2")
        if self.max_bits < 16:
            raise ValueError("max_bits must be at least 16")
