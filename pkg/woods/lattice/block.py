"""Orthogonal direct sums of scaled Gram blocks."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from woods.lattice.gram import GramBlock
from woods.lattice.linalg import Vector
from woods.lattice.linalg import to_fraction
from woods.scalar import MonomialScalar
from woods.scalar import ScalarSum
from woods.scalar import mul
from woods.scalar import rpow


logger = logging.getLogger(__name__)

FullGram = tuple[tuple[ScalarSum, ...], ...]


@dataclass(frozen=True, slots=True)
class BlockLattice:
    """Block-diagonal lattice; block ``i`` contributes ``blocks[i].scale * blocks[i].gram``."""

    blocks: tuple[GramBlock, ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("a block lattice needs at least one block")

    @classmethod
    def single(cls, block: GramBlock) -> BlockLattice:
        return cls((block,))

    @classmethod
    def zn(cls, n: int, scale: MonomialScalar | None = None) -> BlockLattice:
        return cls((GramBlock.identity(n, scale),))

    @property
    def dim(self) -> int:
        return sum(block.dim for block in self.blocks)

    @property
    def block_dims(self) -> tuple[int, ...]:
        return tuple(block.dim for block in self.blocks)

    @property
    def block_offsets(self) -> tuple[int, ...]:
        starts = []
        position = 0
        for block in self.blocks:
            starts.append(position)
            position += block.dim
        return tuple(starts)

    @property
    def labels(self) -> tuple[str | None, ...]:
        return tuple(block.label for block in self.blocks)

    def split_vector(self, vector: Sequence[object]) -> tuple[Vector, ...]:
        if len(vector) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(vector)}")
        values = [to_fraction(v) for v in vector]
        return tuple(
            tuple(values[start : start + block.dim])
            for start, block in zip(self.block_offsets, self.blocks)
        )

    def embed(self, index: int, block_vector: Sequence[int]) -> tuple[int, ...]:
        """Place a block-local vector into full coordinates with zeros elsewhere."""

        full = [0] * self.dim
        start = self.block_offsets[index]
        full[start : start + len(block_vector)] = list(block_vector)
        return tuple(full)

    def norm(self, vector: Sequence[object]) -> ScalarSum:
        parts = self.split_vector(vector)
        return ScalarSum.of(
            *(block.scaled_norm(part) for block, part in zip(self.blocks, parts))
        )

    def full_gram(self) -> FullGram:
        zero = ScalarSum.zero()
        rows: list[tuple[ScalarSum, ...]] = []
        for start, block in zip(self.block_offsets, self.blocks):
            for i in range(block.dim):
                row = [zero] * self.dim
                for j in range(block.dim):
                    row[start + j] = ScalarSum.of(block.scale * block.gram[i][j])
                rows.append(tuple(row))
        return tuple(rows)

    @classmethod
    def from_full_gram(
        cls,
        matrix: Sequence[Sequence[ScalarSum]],
        dims: Sequence[int],
        labels: Sequence[str | None] | None = None,
    ) -> BlockLattice:
        """Recover blocks from a full Gram matrix whose block entries share one radical."""

        total = sum(dims)
        if len(matrix) != total or any(len(row) != total for row in matrix):
            raise ValueError(f"expected a {total}x{total} matrix for block dims {tuple(dims)}")
        names = list(labels) if labels is not None else [None] * len(dims)
        blocks: list[GramBlock] = []
        start = 0
        for size, label in zip(dims, names):
            stop = start + size
            for i in range(start, stop):
                for j in range(total):
                    if not start <= j < stop and not matrix[i][j].is_zero():
                        raise ValueError(f"entry ({i}, {j}) couples two blocks")
            scale = _block_radical(matrix, start, stop)
            rows = [
                [_rational_part(matrix[i][j], scale) for j in range(start, stop)]
                for i in range(start, stop)
            ]
            blocks.append(GramBlock.from_rows(rows, scale, label))
            start = stop
        return cls(tuple(blocks))


def _block_radical(matrix: Sequence[Sequence[ScalarSum]], start: int, stop: int) -> MonomialScalar:
    for i in range(start, stop):
        entry = matrix[i][i]
        if len(entry.terms) == 1:
            _, radical = entry.terms[0].radical_split()
            return MonomialScalar.of(1, radical)
    raise ValueError("diagonal entries must be single monomials")


def _rational_part(entry: ScalarSum, scale: MonomialScalar) -> Fraction:
    if entry.is_zero():
        return Fraction(0)
    if len(entry.terms) != 1:
        raise ValueError(f"entry {entry} is not a single monomial")
    quotient = entry.terms[0] / scale
    if not quotient.is_rational():
        raise ValueError(f"entry {entry} does not share the block radical {scale}")
    return quotient.rational_value()


@dataclass(frozen=True, slots=True)
class Covolume:
    value: MonomialScalar

    def is_one(self) -> bool:
        return self.value.is_one()

    def __str__(self) -> str:
        return str(self.value)


def covolume(lattice: BlockLattice) -> Covolume:
    """``prod scale_i^(d_i/2) * det(G_i)^(1/2)`` kept exact."""

    value = MonomialScalar.one()
    for block in lattice.blocks:
        value = mul(value, rpow(block.scale, Fraction(block.dim, 2)))
        value = mul(value, rpow(MonomialScalar.of(block.determinant()), Fraction(1, 2)))
    return Covolume(value)


def is_unimodular(lattice: BlockLattice) -> bool:
    return covolume(lattice).is_one()


def scale_lattice(lattice: BlockLattice, alpha: MonomialScalar) -> BlockLattice:
    """Multiply every vector by ``alpha``; block scales pick up ``alpha ** 2``."""

    if alpha.sign <= 0:
        raise ValueError("scaling factor must be positive")
    square = mul(alpha, alpha)
    return BlockLattice(
        tuple(block.with_scale(mul(block.scale, square)) for block in lattice.blocks)
    )


def direct_sum(first: BlockLattice, second: BlockLattice) -> BlockLattice:
    return BlockLattice(first.blocks + second.blocks)


def unimodular_normalize(lattice: BlockLattice) -> BlockLattice:
    factor = rpow(covolume(lattice).value, Fraction(-1, lattice.dim))
    normalized = scale_lattice(lattice, factor)
    logger.debug("normalized %d-dimensional lattice by %s", lattice.dim, factor)
    return normalized
