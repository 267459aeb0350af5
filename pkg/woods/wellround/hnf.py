"""Hermite normal form of generated sublattices of Z^n."""

from __future__ import annotations

import math
from typing import Iterable
from typing import Sequence

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form


Basis = tuple[tuple[int, ...], ...]


def hnf_basis(vectors: Sequence[Sequence[int]], dim: int) -> Basis:
    """Basis of the lattice spanned by ``vectors`` in Hermite normal form.

    Basis vectors are the columns of sympy's column-style HNF: upper triangular with positive
    pivots, every entry right of a pivot reduced into ``[0, pivot)``. Zero vectors are dropped.
    """

    columns = [tuple(int(value) for value in vector) for vector in vectors if any(vector)]
    if not columns:
        return ()
    generators = Matrix(dim, len(columns), lambda i, j: columns[j][i])
    reduced = hermite_normal_form(generators)
    return tuple(
        tuple(int(reduced[i, j]) for i in range(dim)) for j in range(reduced.shape[1])
    )


class IntegerLattice:
    """Sublattice of ``Z^dim`` kept as its Hermite normal form basis."""

    def __init__(self, dim: int) -> None:
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self._basis: Basis = ()

    @property
    def rank(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> Basis:
        return self._basis

    def _check(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(vector)}")
        return tuple(int(value) for value in vector)

    def add_vector(self, vector: Sequence[int]) -> bool:
        """Add a generator; return True when the lattice changed."""

        return self.extend([vector])

    def extend(self, vectors: Iterable[Sequence[int]]) -> bool:
        added = [self._check(vector) for vector in vectors]
        basis = hnf_basis(self._basis + tuple(added), self.dim)
        changed = basis != self._basis
        self._basis = basis
        return changed

    def index_in_ambient(self) -> int | None:
        """Index in ``Z^dim``, or None when the rank is deficient."""

        if self.rank < self.dim:
            return None
        return math.prod(self._basis[i][i] for i in range(self.dim))

    def contains(self, vector: Sequence[int]) -> bool:
        return hnf_basis(self._basis + (self._check(vector),), self.dim) == self._basis


def sublattice_index(vectors: Iterable[Sequence[int]], dim: int) -> int | None:
    """Index of the lattice generated by ``vectors`` in ``Z^dim``; None if not of full rank.

    Generators are folded in batches of ``dim`` and the scan stops once the index reaches 1.
    """

    lattice = IntegerLattice(dim)
    batch: list[Sequence[int]] = []
    for vector in vectors:
        batch.append(vector)
        if len(batch) == dim:
            lattice.extend(batch)
            batch = []
            if lattice.index_in_ambient() == 1:
                return 1
    lattice.extend(batch)
    return lattice.index_in_ambient()
