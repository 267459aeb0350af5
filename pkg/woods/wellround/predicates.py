"""Well-roundedness and generation by minimal vectors."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from woods.enumeration import DEFAULT_ENUMERATION_CONFIG
from woods.enumeration import EnumerationConfig
from woods.enumeration import MinimalVectorSet
from woods.enumeration import shortest_vectors
from woods.lattice import BlockLattice
from woods.lattice.linalg import RankAccumulator
from woods.scalar import ScalarSum
from woods.wellround.hnf import sublattice_index


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class WellRoundedCertificate:
    is_well_rounded: bool
    rank_achieved: int
    dim: int
    spanning_subset: tuple[tuple[int, ...], ...]
    lambda1_sq: ScalarSum

    def to_payload(self) -> dict[str, object]:
        return {
            "is_well_rounded": self.is_well_rounded,
            "rank_achieved": self.rank_achieved,
            "dim": self.dim,
            "lambda1_sq": self.lambda1_sq.to_payload(),
            "spanning_subset": [list(v) for v in self.spanning_subset],
        }


def well_rounded_certificate(
    lattice: BlockLattice,
    minimal: MinimalVectorSet,
) -> WellRoundedCertificate:
    """Rank of the minimal vectors; blocks are orthogonal so ranks add up blockwise."""

    accumulator = RankAccumulator(lattice.dim)
    spanning: list[tuple[int, ...]] = []
    for vector in minimal.vectors:
        if accumulator.add(vector):
            spanning.append(vector)
            if accumulator.rank == lattice.dim:
                break
    rounded = accumulator.rank == lattice.dim
    logger.debug("minimal vectors span rank %d of %d", accumulator.rank, lattice.dim)
    return WellRoundedCertificate(
        is_well_rounded=rounded,
        rank_achieved=accumulator.rank,
        dim=lattice.dim,
        spanning_subset=tuple(spanning) if rounded else (),
        lambda1_sq=minimal.lambda1_sq,
    )


def is_well_rounded(
    lattice: BlockLattice,
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> WellRoundedCertificate:
    return well_rounded_certificate(lattice, shortest_vectors(lattice, config))


def generated_by_minimal_vectors(
    lattice: BlockLattice,
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> bool:
    """True when the minimal vectors generate the whole lattice (index 1)."""

    minimal = shortest_vectors(lattice, config)
    return sublattice_index(minimal.vectors, lattice.dim) == 1
