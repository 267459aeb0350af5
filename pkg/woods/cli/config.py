"""Command line configuration resolved from flags, environment and ``.env``."""

from __future__ import annotations

import os
from dataclasses import dataclass
from dataclasses import replace
from enum import Enum
from pathlib import Path

from dotenv import load_dotenv

from woods.catalog.store import default_data_dir
from woods.enumeration import DEFAULT_ENUMERATION_CONFIG
from woods.enumeration import EnumerationConfig
from woods.scalar.interval import MIN_BITS


PRECISION_ENV = "WOODS_PRECISION_BITS"
BUDGET_ENV = "WOODS_ENUM_BUDGET"
DEFAULT_PRECISION_BITS = 256


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    PRETTY = "pretty"


@dataclass(frozen=True, slots=True)
class CliConfig:
    data_dir: Path
    precision_bits: int = DEFAULT_PRECISION_BITS
    enum_budget: int = DEFAULT_ENUMERATION_CONFIG.node_budget
    output: OutputFormat = OutputFormat.PRETTY
    seed: int = 0
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        if self.precision_bits < MIN_BITS:
            raise ValueError(f"precision_bits must be at least {MIN_BITS}")
        if self.enum_budget <= 0:
            raise ValueError("enum_budget must be positive")

    @property
    def enumeration(self) -> EnumerationConfig:
        return replace(
            DEFAULT_ENUMERATION_CONFIG,
            node_budget=self.enum_budget,
            max_bits=self.precision_bits,
        )

    @classmethod
    def from_env(
        cls,
        *,
        data_dir: Path | str | None = None,
        precision_bits: int | None = None,
        enum_budget: int | None = None,
        output: OutputFormat | str = OutputFormat.PRETTY,
        seed: int = 0,
        log_level: str = "WARNING",
    ) -> CliConfig:
        """Flags win over ``WOODS_*`` variables, which win over packaged defaults."""

        load_dotenv()
        env_bits = os.getenv(PRECISION_ENV)
        env_budget = os.getenv(BUDGET_ENV)
        if precision_bits is None:
            precision_bits = int(env_bits) if env_bits else DEFAULT_PRECISION_BITS
        if enum_budget is None:
            enum_budget = int(env_budget) if env_budget else DEFAULT_ENUMERATION_CONFIG.node_budget
        return cls(
            data_dir=Path(data_dir) if data_dir is not None else default_data_dir(),
            precision_bits=precision_bits,
            enum_budget=enum_budget,
            output=OutputFormat(output),
            seed=seed,
            log_level=log_level.upper(),
        )
