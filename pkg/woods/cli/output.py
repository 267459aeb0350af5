"""Report payloads and the json, csv and pretty renderers."""

from __future__ import annotations

import json
from typing import Any
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence

import pandas as pd
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

from woods.catalog.schemas import ScalarPayload
from woods.cli.config import OutputFormat
from woods.construct.report import ComparisonPayload
from woods.construct.report import IntervalPayload
from woods.scalar import FloatInterval
from woods.scalar import MonomialScalar
from woods.scalar import ScalarSum
from woods.scalar import to_float_interval


PRETTY_DIGITS = 10
CERTIFIED = "(interval certified)"


class SvpPayload(BaseModel):
    lattice: str
    dim: int
    lambda1_sq: ScalarPayload
    lambda1_sq_text: str
    kissing_number: int
    blocks: List[int]
    vectors: List[List[int]]
    comparisons: List[ComparisonPayload] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid")


class CvpPayload(BaseModel):
    lattice: str
    target: List[str]
    dist_sq: ScalarPayload
    dist_sq_text: str
    count: int
    closest: List[List[int]]

    model_config = ConfigDict(extra="forbid")


class WellRoundedPayload(BaseModel):
    lattice: str
    dim: int
    is_well_rounded: bool
    rank_achieved: int
    generated_by_minimal_vectors: bool
    lambda1_sq_text: str
    spanning_subset: List[List[int]]

    model_config = ConfigDict(extra="forbid")


class CoveringCertPayload(BaseModel):
    lattice: str
    claimed: ScalarPayload
    claimed_text: str
    witness: List[str]
    dist_sq: Optional[ScalarPayload] = None
    verified: bool
    precision_bits: int
    covering_radius_lower: IntervalPayload
    comparison: Optional[ComparisonPayload] = None

    model_config = ConfigDict(extra="forbid")


class DeepHolePayload(BaseModel):
    lattice: str
    witness: List[str]
    dist_sq: ScalarPayload
    dist_sq_text: str
    covering_lower_bound: str
    restarts: int
    seed: int

    model_config = ConfigDict(extra="forbid")


class CheckPayload(BaseModel):
    name: str
    passed: bool
    detail: str

    model_config = ConfigDict(extra="forbid")


class VerificationPayload(BaseModel):
    lattice: str
    dim: int
    passed: bool
    checks: List[CheckPayload]

    model_config = ConfigDict(extra="forbid")


class CatalogRow(BaseModel):
    name: str
    dim: Optional[int] = None
    min_norm_std: str
    covering_c_std: str
    covering_kind: str
    kissing_number: Optional[int] = None
    expected_threshold: Optional[int] = None
    slow: bool = False
    provenance: str

    model_config = ConfigDict(extra="forbid")


def exact_text(value: ScalarSum | MonomialScalar) -> str:
    """``p/q`` when rational, otherwise the symbolic monomial sum."""

    if value.is_rational():
        return str(value.rational_value())
    return str(value)


def certified(value: ScalarSum | MonomialScalar | FloatInterval, bits: int = 64) -> str:
    interval = value if isinstance(value, FloatInterval) else to_float_interval(value, bits)
    return f"{interval.decimal(PRETTY_DIGITS)} {CERTIFIED}"


def render_json(payload: BaseModel | Sequence[BaseModel]) -> str:
    if isinstance(payload, BaseModel):
        data: Any = payload.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return json.dumps(data, indent=2)


def render_csv(rows: Iterable[BaseModel]) -> str:
    """One row per model; nested fields are flattened to dotted column names."""

    records = [row.model_dump(mode="json") for row in rows]
    if not records:
        return ""
    return pd.json_normalize(records).to_csv(index=False)


def render(
    payload: BaseModel | Sequence[BaseModel],
    output: OutputFormat,
    pretty: Iterable[str],
) -> str:
    if output is OutputFormat.JSON:
        return render_json(payload)
    if output is OutputFormat.CSV:
        rows = [payload] if isinstance(payload, BaseModel) else list(payload)
        return render_csv(rows).rstrip("\n")
    return "\n".join(pretty)
