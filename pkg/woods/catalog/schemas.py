"""Pydantic schemas for catalog data files and scalar payloads."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict
from typing import List
from typing import Optional
from typing import Union

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import field_validator
from pydantic import model_validator


def _check_rational(value: str) -> str:
    try:
        Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"{value!r} is not a rational 'p/q'") from exc
    return value


class MonomialPayload(BaseModel):
    coeff: str
    factors: Dict[str, str] = Field(default_factory=dict)

    model_config = ConfigDict(extra="forbid")

    @field_validator("coeff")
    @classmethod
    def _coeff_rational(cls, value: str) -> str:
        return _check_rational(value)

    @field_validator("factors")
    @classmethod
    def _factor_shape(cls, value: Dict[str, str]) -> Dict[str, str]:
        for base, exponent in value.items():
            if not base.isdigit() or int(base) < 2:
                raise ValueError(f"factor base {base!r} must be an integer >= 2")
            _check_rational(exponent)
        return value


class ScalarPayload(BaseModel):
    terms: List[MonomialPayload] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid")


GramEntry = Union[int, str]


class GramFile(BaseModel):
    name: str
    dim: int = Field(..., ge=1)
    gram: List[List[GramEntry]]
    checksum: str

    model_config = ConfigDict(extra="forbid")

    @field_validator("checksum")
    @classmethod
    def _hex_digest(cls, value: str) -> str:
        if len(value) != 64 or any(c not in "0123456789abcdef" for c in value):
            raise ValueError("checksum must be a lowercase SHA-256 hex digest")
        return value

    @model_validator(mode="after")
    def _square(self) -> GramFile:
        if len(self.gram) != self.dim or any(len(row) != self.dim for row in self.gram):
            raise ValueError(f"gram must be {self.dim}x{self.dim}")
        for row in self.gram:
            for entry in row:
                if isinstance(entry, str):
                    _check_rational(entry)
        return self


class WitnessFile(BaseModel):
    lattice: str
    point: List[str]
    claimed_c: ScalarPayload
    seed: int = 0
    source: str = "deep_hole"

    model_config = ConfigDict(extra="forbid")

    @field_validator("point")
    @classmethod
    def _rational_point(cls, value: List[str]) -> List[str]:
        return [_check_rational(x) for x in value]


class CatalogIndexEntry(BaseModel):
    name: str
    dim: int = Field(..., ge=1)
    gram_file: str
    min_norm_std: str
    covering_c_std: ScalarPayload
    covering_kind: str = "lower_bound"
    witness_file: Optional[str] = None
    provenance: str = "derived"
    kissing_number: Optional[int] = None
    generated_by_minimal_vectors: bool = False
    expected_threshold: Optional[int] = None
    slow: bool = False

    model_config = ConfigDict(extra="forbid")

    @field_validator("min_norm_std")
    @classmethod
    def _min_norm_rational(cls, value: str) -> str:
        return _check_rational(value)

    @field_validator("covering_kind")
    @classmethod
    def _kind(cls, value: str) -> str:
        if value not in {"exact", "lower_bound"}:
            raise ValueError("covering_kind must be 'exact' or 'lower_bound'")
        return value


class CatalogIndex(BaseModel):
    version: int = 1
    entries: List[CatalogIndexEntry]

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def _unique_names(self) -> CatalogIndex:
        names = [entry.name for entry in self.entries]
        if len(names) != len(set(names)):
            raise ValueError("catalog entry names must be unique")
        return self
