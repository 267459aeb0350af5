"""Configuration for exact scalars and certified comparisons."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class ScalarConfig:
    """Bounds used by factoring and by adaptive interval refinement."""

    factor_bound: int = 10**6
    max_bits: int = 256
    start_bits: int = 64

    def __post_init__(self) -> None:
        if self.max_bits < 16:
            raise ValueError("max_bits must be at least 16")
        if self.start_bits < 16:
            raise ValueError("start_bits must be at least 16")
        if self.factor_bound < 2:
            raise ValueError("factor_bound must be at least 2")


DEFAULT_SCALAR_CONFIG = ScalarConfig()
