"""Exact rational linear algebra on small dense matrices, backed by sympy's ``DomainMatrix``."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError


Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]


def to_fraction(value: object) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an integer, Fraction or 'p/q' string, got {value!r}")


def to_matrix(rows: Iterable[Iterable[object]]) -> Matrix:
    return tuple(tuple(to_fraction(value) for value in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(matrix: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(zip(*matrix)) if matrix else ()


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    columns = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in columns) for row in a
    )


def quadratic_form(
    gram: Sequence[Sequence[Fraction]],
    vector: Sequence[Fraction | int],
) -> Fraction:
    total = Fraction(0)
    for i, xi in enumerate(vector):
        if xi == 0:
            continue
        row = gram[i]
        total += xi * sum((row[j] * xj for j, xj in enumerate(vector) if xj != 0), Fraction(0))
    return total


def is_symmetric(matrix: Sequence[Sequence[Fraction]]) -> bool:
    n = len(matrix)
    return all(len(row) == n for row in matrix) and all(
        matrix[i][j] == matrix[j][i] for i in range(n) for j in range(i + 1, n)
    )


def is_diagonal(matrix: Sequence[Sequence[Fraction]]) -> bool:
    return all(value == 0 for i, row in enumerate(matrix) for j, value in enumerate(row) if i != j)


def clear_denominators(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Return ``(M, D)`` with integer ``M = D * matrix``."""

    common = 1
    for row in matrix:
        for value in row:
            common = math.lcm(common, value.denominator)
    return [[int(value * common) for value in row] for row in matrix], common


def to_domain_matrix(rows: Sequence[Sequence[Fraction | int | str]], ncols: int) -> DomainMatrix:
    entries = []
    for row in rows:
        values = [to_fraction(value) for value in row]
        entries.append([(value.numerator, value.denominator) for value in values])
    return DomainMatrix.from_list(entries, QQ) if entries else DomainMatrix([], (0, ncols), QQ)


def from_domain(value: object) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))  # type: ignore[attr-defined]


def from_domain_matrix(matrix: DomainMatrix) -> Matrix:
    return tuple(tuple(from_domain(value) for value in row) for row in matrix.to_list())


def leading_minors(matrix: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Leading principal minors, stopping after the first one that vanishes."""

    n = len(matrix)
    full = to_domain_matrix(matrix, n)
    minors: list[Fraction] = []
    for k in range(1, n + 1):
        minor = from_domain(full.extract(list(range(k)), list(range(k))).det())
        minors.append(minor)
        if minor == 0:
            break
    return minors


def is_positive_definite(matrix: Sequence[Sequence[Fraction]]) -> bool:
    if not matrix or not is_symmetric(matrix):
        return False
    if is_diagonal(matrix):
        return all(matrix[i][i] > 0 for i in range(len(matrix)))
    minors = leading_minors(matrix)
    return len(minors) == len(matrix) and all(minor > 0 for minor in minors)


def determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    if not matrix:
        return Fraction(1)
    return from_domain(to_domain_matrix(matrix, len(matrix)).det())


class RankAccumulator:
    """Incremental rank over the rationals; kept rows stay in reduced row echelon form."""

    def __init__(self, dim: int) -> None:
        self.dim = dim
        self._echelon = DomainMatrix([], (0, dim), QQ)

    @property
    def rank(self) -> int:
        return self._echelon.shape[0]

    def add(self, vector: Sequence[Fraction | int]) -> bool:
        """Insert ``vector``; return True when it increases the rank."""

        if len(vector) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(vector)}")
        stacked = self._echelon.vstack(to_domain_matrix([vector], self.dim))
        echelon, pivots = stacked.rref()
        if len(pivots) == self.rank:
            return False
        self._echelon = echelon.extract(list(range(len(pivots))), list(range(self.dim)))
        return True


def rational_rank(vectors: Iterable[Sequence[Fraction | int]], dim: int) -> int:
    accumulator = RankAccumulator(dim)
    for vector in vectors:
        accumulator.add(vector)
        if accumulator.rank == dim:
            break
    return accumulator.rank


def solve_left(rows: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Vector:
    """Solve ``c . rows = target`` exactly; the rows must be linearly independent."""

    k = len(rows)
    system = [[rows[i][j] for i in range(k)] + [target[j]] for j in range(len(target))]
    echelon, pivots = to_domain_matrix(system, k + 1).rref()
    if k in pivots:
        raise ValueError("target is not in the span of the rows")
    if len(pivots) < k:
        raise ValueError("rows are linearly dependent")
    solved = echelon.to_list()
    return tuple(from_domain(solved[i][k]) for i in range(k))


def inverse(matrix: Sequence[Sequence[Fraction]]) -> Matrix:
    try:
        return from_domain_matrix(to_domain_matrix(matrix, len(matrix)).inv())
    except DMNonInvertibleMatrixError as exc:
        raise ValueError("matrix is singular") from exc
