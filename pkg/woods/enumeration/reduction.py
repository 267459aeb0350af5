"""LLL reduction of a rational Gram matrix through fplll's Gram-mode GSO."""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache

from fpylll import GSO
from fpylll import LLL
from fpylll import IntegerMatrix

from woods.lattice import GramBlock
from woods.lattice.linalg import Matrix
from woods.lattice.linalg import clear_denominators
from woods.lattice.linalg import determinant
from woods.lattice.linalg import is_diagonal
from woods.lattice.linalg import mat_mul
from woods.lattice.linalg import transpose


logger = logging.getLogger(__name__)

IntMatrix = tuple[tuple[int, ...], ...]


def _fplll_transform(gram: Matrix, delta: Fraction) -> IntMatrix:
    """Row ``i`` of the result expresses reduced vector ``i`` in the original basis."""

    scaled, _ = clear_denominators(gram)
    n = len(scaled)
    gso = GSO.Mat(IntegerMatrix.from_matrix(scaled), U=IntegerMatrix.identity(n), gram=True)
    gso.update_gso()
    LLL.Reduction(gso, delta=float(delta))()
    return tuple(tuple(int(gso.U[i, j]) for j in range(n)) for i in range(n))


@lru_cache(maxsize=128)
def lll_reduce_gram(gram: Matrix, delta: Fraction = Fraction(99, 100)) -> tuple[IntMatrix, Matrix]:
    """Return ``(T, T^T G T)`` with unimodular integer ``T``; columns of ``T`` are the new basis.

    fplll works in floating point, so the transform is rechecked and the reduced Gram is
    recomputed exactly.
    """

    n = len(gram)
    if n == 1 or is_diagonal(gram):
        unit = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return unit, gram
    transform = transpose(_fplll_transform(gram, delta))
    as_fractions = tuple(tuple(Fraction(value) for value in row) for row in transform)
    if abs(determinant(as_fractions)) != 1:
        raise ArithmeticError("LLL returned a transform that is not unimodular")
    reduced = mat_mul(mat_mul(transpose(as_fractions), gram), as_fractions)
    logger.debug(
        "LLL on dimension %d: shortest diagonal %s -> %s",
        n,
        min(gram[i][i] for i in range(n)),
        min(reduced[i][i] for i in range(n)),
    )
    return transform, reduced


def reduce_basis(
    block: GramBlock,
    delta: Fraction = Fraction(99, 100),
) -> tuple[IntMatrix, GramBlock]:
    transform, reduced = lll_reduce_gram(block.gram, delta)
    return transform, GramBlock(reduced, block.scale, block.label)
