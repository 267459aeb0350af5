"""Construction reports and their JSON and CSV row schemas."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any
from typing import Dict
from typing import List
from typing import Optional

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

from woods.catalog.schemas import MonomialPayload
from woods.catalog.schemas import ScalarPayload
from woods.covering import CoveringKind
from woods.covering import CoveringValue
from woods.scalar import ComparisonRecord
from woods.scalar import FloatInterval
from woods.scalar import MonomialScalar
from woods.scalar import Ordering3
from woods.scalar import ScalarSum
from woods.scalar import to_float_interval
from woods.wellround import WellRoundedCertificate


LOG_CONVENTION = "natural"


class IntervalPayload(BaseModel):
    lo: str
    hi: str
    bits: int

    model_config = ConfigDict(extra="forbid")


class ComparisonPayload(BaseModel):
    left: ScalarPayload
    right: ScalarPayload
    ordering: Ordering3
    bits: int
    difference: Optional[IntervalPayload] = None

    model_config = ConfigDict(extra="forbid")


class ConstructionPayload(BaseModel):
    d: int
    n: int
    m: int
    base: str
    lam: MonomialPayload
    alpha1: MonomialPayload
    alpha2: MonomialPayload
    c_lambda: ScalarPayload
    c_decimal: str
    verdict: Ordering3
    margin: IntervalPayload
    covolume: MonomialPayload
    unimodular: bool
    well_rounded: bool
    well_rounded_rank: int
    base_covering_kind: CoveringKind
    lower_bound_note: str
    covering_derivation: Dict[str, Any]
    comparisons: List[ComparisonPayload] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid")


class ThresholdRow(BaseModel):
    base: str
    dim: int
    d_max: int
    threshold: Optional[int]
    expected: Optional[int] = None
    derivative: str = ""

    model_config = ConfigDict(extra="forbid")


class ScanRowPayload(BaseModel):
    d: int
    m: int
    n: int
    lambda_bound: str
    c_lower: str
    ratio: str
    lambda_hlawka: str
    c_hlawka: str
    ratio_hlawka: str
    best_base: Optional[str] = None
    best_c: Optional[str] = None
    best_over_d: Optional[str] = None
    log_convention: str = LOG_CONVENTION

    model_config = ConfigDict(extra="forbid")


def interval_payload(interval: FloatInterval, digits: int = 20) -> IntervalPayload:
    return IntervalPayload.model_validate(interval.to_payload(digits))


def comparison_payload(record: ComparisonRecord) -> ComparisonPayload:
    return ComparisonPayload.model_validate(record.to_payload())


@dataclass(frozen=True, slots=True)
class ConstructionReport:
    d: int
    n: int
    m: int
    base: str
    lam: MonomialScalar
    alpha1: MonomialScalar
    alpha2: MonomialScalar
    c_lambda: ScalarSum
    verdict: Ordering3
    comparison: ComparisonRecord
    covolume: MonomialScalar
    well_rounded: WellRoundedCertificate
    minima: tuple[ComparisonRecord, ...]
    covering: CoveringValue
    base_kind: CoveringKind

    @property
    def unimodular(self) -> bool:
        return self.covolume.is_one()

    @property
    def margin(self) -> FloatInterval:
        if self.comparison.difference is not None:
            return self.comparison.difference
        return to_float_interval(0, 64)

    @property
    def comparisons(self) -> tuple[ComparisonRecord, ...]:
        return (*self.minima, self.comparison)

    @property
    def lower_bound_note(self) -> str:
        if self.base_kind is CoveringKind.EXACT:
            return "base covering constant is exact"
        return (
            "base covering constant is a certified lower bound; C grows with it, "
            "so a GT verdict still certifies the counterexample"
        )

    def to_payload(self) -> ConstructionPayload:
        return ConstructionPayload(
            d=self.d,
            n=self.n,
            m=self.m,
            base=self.base,
            lam=MonomialPayload.model_validate(self.lam.to_payload()),
            alpha1=MonomialPayload.model_validate(self.alpha1.to_payload()),
            alpha2=MonomialPayload.model_validate(self.alpha2.to_payload()),
            c_lambda=ScalarPayload.model_validate(self.c_lambda.to_payload()),
            c_decimal=to_float_interval(self.c_lambda, 128).decimal(20),
            verdict=self.verdict,
            margin=interval_payload(self.margin),
            covolume=MonomialPayload.model_validate(self.covolume.to_payload()),
            unimodular=self.unimodular,
            well_rounded=self.well_rounded.is_well_rounded,
            well_rounded_rank=self.well_rounded.rank_achieved,
            base_covering_kind=self.base_kind,
            lower_bound_note=self.lower_bound_note,
            covering_derivation=self.covering.derivation.to_payload(),
            comparisons=[comparison_payload(record) for record in self.comparisons],
        )
