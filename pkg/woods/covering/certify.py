"""Covering radius lower bounds certified by exact closest vector search."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any
from typing import Sequence

from woods.covering.values import CoveringValue
from woods.covering.values import covering_witness
from woods.enumeration import DEFAULT_ENUMERATION_CONFIG
from woods.enumeration import EnumerationConfig
from woods.enumeration import closest_vectors
from woods.errors import UndecidedComparison
from woods.lattice import BlockLattice
from woods.lattice.linalg import to_fraction
from woods.scalar import ComparisonRecord
from woods.scalar import FloatInterval
from woods.scalar import IntervalEvaluator
from woods.scalar import Ordering3
from woods.scalar import ScalarSum
from woods.scalar import certify_comparison


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CoveringCertificate:
    """Claim ``C(L) >= claimed`` backed by ``4 * dist^2(witness, L)``."""

    lattice_ref: str
    claimed: ScalarSum
    witness: tuple[Fraction, ...] | None
    dist_sq: ScalarSum | None
    verified: bool
    precision_bits: int
    comparison: ComparisonRecord | None = None

    def as_covering_value(self) -> CoveringValue:
        if not self.verified or self.witness is None:
            raise ValueError("only verified witness certificates yield covering values")
        return covering_witness(self.claimed, self.witness)

    def to_payload(self) -> dict[str, Any]:
        return {
            "lattice": self.lattice_ref,
            "claimed": self.claimed.to_payload(),
            "witness": None if self.witness is None else [str(x) for x in self.witness],
            "dist_sq": None if self.dist_sq is None else self.dist_sq.to_payload(),
            "verified": self.verified,
            "precision_bits": self.precision_bits,
            "comparison": None if self.comparison is None else self.comparison.to_payload(),
        }


def certify_lower_bound(
    lattice: BlockLattice,
    witness: Sequence[object],
    claimed: ScalarSum,
    *,
    lattice_ref: str = "",
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> CoveringCertificate:
    point = tuple(to_fraction(x) for x in witness)
    if len(point) != lattice.dim:
        raise ValueError(
            f"witness has {len(point)} coordinates, lattice has dimension {lattice.dim}"
        )
    result = closest_vectors(lattice, point, config)
    four_dist_sq = result.dist_sq * 4
    record = certify_comparison(four_dist_sq, claimed, config.max_bits)
    if record.ordering is Ordering3.UNDECIDED:
        raise UndecidedComparison(
            f"4*dist^2 = {four_dist_sq} against claimed {claimed} is undecided",
            record.bits,
        )
    verified = record.ordering in (Ordering3.GT, Ordering3.EQ)
    logger.info(
        "witness for %s: 4*dist^2 = %s, claimed %s, %s",
        lattice_ref or f"{lattice.dim}-dimensional lattice",
        four_dist_sq,
        claimed,
        "verified" if verified else "rejected",
    )
    return CoveringCertificate(
        lattice_ref=lattice_ref,
        claimed=claimed,
        witness=point,
        dist_sq=result.dist_sq,
        verified=verified,
        precision_bits=record.bits,
        comparison=record,
    )


def covering_radius_lower_bound(certificate: CoveringCertificate, bits: int = 64) -> FloatInterval:
    """Enclosure of ``sqrt(claimed) / 2``, the radius implied by a verified certificate."""

    if not certificate.verified:
        raise ValueError("certificate is not verified")
    evaluator = IntervalEvaluator(bits)
    radius = evaluator.ctx.sqrt(evaluator.scalar(certificate.claimed)) / 2
    return evaluator.enclose(radius)
