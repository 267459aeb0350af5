"""Rational Gram blocks carrying an exact monomial scale."""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable
from typing import Sequence

from woods.errors import NotPositiveDefinite
from woods.lattice.linalg import Matrix
from woods.lattice.linalg import determinant
from woods.lattice.linalg import identity as identity_matrix
from woods.lattice.linalg import is_positive_definite
from woods.lattice.linalg import quadratic_form
from woods.lattice.linalg import to_matrix
from woods.scalar import MonomialScalar


@lru_cache(maxsize=256)
def _positive_definite(gram: Matrix) -> bool:
    return is_positive_definite(gram)


@lru_cache(maxsize=256)
def _determinant(gram: Matrix) -> Fraction:
    return determinant(gram)


@dataclass(frozen=True, slots=True)
class GramBlock:
    """Gram matrix ``scale * gram`` of one orthogonal summand."""

    gram: Matrix
    scale: MonomialScalar = MonomialScalar.one()
    label: str | None = None

    def __post_init__(self) -> None:
        if not self.gram:
            raise ValueError("a Gram block needs at least one row")
        if self.scale.sign <= 0:
            raise ValueError("block scale must be positive")
        if not _positive_definite(self.gram):
            name = self.label or f"{self.dim}-dimensional block"
            raise NotPositiveDefinite(f"Gram matrix of {name} is not symmetric positive definite")

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Iterable[object]],
        scale: MonomialScalar | None = None,
        label: str | None = None,
    ) -> GramBlock:
        return cls(to_matrix(rows), scale or MonomialScalar.one(), label)

    @classmethod
    def identity(
        cls,
        n: int,
        scale: MonomialScalar | None = None,
        label: str | None = None,
    ) -> GramBlock:
        if n < 1:
            raise ValueError("identity block needs n >= 1")
        return cls(identity_matrix(n), scale or MonomialScalar.one(), label or f"Z^{n}")

    @property
    def dim(self) -> int:
        return len(self.gram)

    def determinant(self) -> Fraction:
        """Determinant of the unscaled rational Gram matrix."""

        return _determinant(self.gram)

    def norm(self, vector: Sequence[Fraction | int]) -> Fraction:
        """Unscaled squared norm ``x^T G x``."""

        if len(vector) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(vector)}")
        return quadratic_form(self.gram, vector)

    def inner(self, u: Sequence[Fraction | int], v: Sequence[Fraction | int]) -> Fraction:
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates")
        return sum(
            (u[i] * self.gram[i][j] * v[j] for i in range(self.dim) for j in range(self.dim)),
            Fraction(0),
        )

    def scaled_entry(self, i: int, j: int) -> MonomialScalar:
        return self.scale * self.gram[i][j]

    def scaled_norm(self, vector: Sequence[Fraction | int]) -> MonomialScalar:
        return self.scale * self.norm(vector)

    def with_scale(self, scale: MonomialScalar) -> GramBlock:
        return replace(self, scale=scale)

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for row in self.gram for value in row)
