"""Shortest and closest vectors of block lattices with exact values."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator
from typing import Sequence

from woods.enumeration.config import DEFAULT_ENUMERATION_CONFIG
from woods.enumeration.config import EnumerationConfig
from woods.enumeration.fincke_pohst import EnumerationStats
from woods.enumeration.fincke_pohst import IntVector
from woods.enumeration.fincke_pohst import block_closest_vectors
from woods.enumeration.fincke_pohst import block_shortest_vectors
from woods.errors import UndecidedComparison
from woods.lattice import BlockLattice
from woods.scalar import ComparisonRecord
from woods.scalar import MonomialScalar
from woods.scalar import Ordering3
from woods.scalar import ScalarSum
from woods.scalar import certify_comparison


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class MinimalVectorSet:
    """Squared minimum and one representative per ``+-v`` pair, in full coordinates."""

    lambda1_sq: ScalarSum
    vectors: tuple[IntVector, ...]
    blocks: tuple[int, ...]
    comparisons: tuple[ComparisonRecord, ...] = ()
    stats: tuple[EnumerationStats, ...] = ()

    @property
    def kissing_number(self) -> int:
        return 2 * len(self.vectors)


@dataclass(frozen=True, slots=True)
class CvpResult:
    """Exact squared distance; the closest points are the product of per-block choices."""

    dist_sq: ScalarSum
    block_dist_sq: tuple[Fraction, ...]
    block_closest: tuple[tuple[IntVector, ...], ...]

    @property
    def count(self) -> int:
        total = 1
        for choices in self.block_closest:
            total *= len(choices)
        return total

    def iter_closest(self) -> Iterator[IntVector]:
        for parts in itertools.product(*self.block_closest):
            yield tuple(value for part in parts for value in part)

    @property
    def closest(self) -> tuple[IntVector, ...]:
        return tuple(self.iter_closest())


def shortest_vectors(
    lattice: BlockLattice,
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> MinimalVectorSet:
    """Minimum over all blocks, comparing scaled block minima with certified intervals."""

    minima = [block_shortest_vectors(block.gram, config) for block in lattice.blocks]
    scaled = [block.scale * result.min_norm for block, result in zip(lattice.blocks, minima)]
    winners = [0]
    records: list[ComparisonRecord] = []
    for index in range(1, len(minima)):
        record = certify_comparison(scaled[index], scaled[winners[0]], config.max_bits)
        records.append(record)
        if record.ordering is Ordering3.UNDECIDED:
            raise UndecidedComparison(
                f"cannot order block minima {scaled[index]} and {scaled[winners[0]]}",
                config.max_bits,
            )
        if record.ordering is Ordering3.LT:
            winners = [index]
        elif record.ordering is Ordering3.EQ:
            winners.append(index)
    vectors: list[IntVector] = []
    for index in winners:
        vectors.extend(lattice.embed(index, v) for v in minima[index].vectors)
    lambda1_sq = ScalarSum.of(scaled[winners[0]])
    logger.debug("lambda1^2 = %s attained in blocks %s", lambda1_sq, winners)
    return MinimalVectorSet(
        lambda1_sq=lambda1_sq,
        vectors=tuple(sorted(vectors)),
        blocks=tuple(winners),
        comparisons=tuple(records),
        stats=tuple(result.stats for result in minima),
    )


def minimum_norm(
    lattice: BlockLattice,
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> ScalarSum:
    return shortest_vectors(lattice, config).lambda1_sq


def kissing_number(
    lattice: BlockLattice,
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> int:
    return shortest_vectors(lattice, config).kissing_number


def closest_vectors(
    lattice: BlockLattice,
    target: Sequence[object],
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> CvpResult:
    """Blocks are orthogonal, so the distance splits into a sum of exact block distances."""

    parts = lattice.split_vector(target)
    results = [
        block_closest_vectors(block.gram, part, config)
        for block, part in zip(lattice.blocks, parts)
    ]
    terms: list[MonomialScalar] = [
        block.scale * result.dist_sq for block, result in zip(lattice.blocks, results)
    ]
    return CvpResult(
        dist_sq=ScalarSum.of(*terms),
        block_dist_sq=tuple(result.dist_sq for result in results),
        block_closest=tuple(result.vectors for result in results),
    )
