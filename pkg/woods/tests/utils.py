from __future__ import annotations

import itertools
import math
from fractions import Fraction
from random import Random
from typing import Sequence

from woods.lattice.linalg import Matrix
from woods.lattice.linalg import inverse
from woods.lattice.linalg import quadratic_form
from woods.lattice.linalg import to_matrix


def random_gram(rng: Random, n: int, spread: int = 2) -> Matrix:
    """``B B^T`` for a random lower triangular integer ``B`` with nonzero diagonal."""

    basis = [[0] * n for _ in range(n)]
    for i in range(n):
        basis[i][i] = rng.randint(1, 3)
        for j in range(i):
            basis[i][j] = rng.randint(-spread, spread)
    gram = [
        [sum(basis[i][k] * basis[j][k] for k in range(n)) for j in range(n)] for i in range(n)
    ]
    return to_matrix(gram)


def _ranges(gram: Matrix, center: Sequence[Fraction], radius_sq: Fraction) -> list[range]:
    inv = inverse(gram)
    spans = []
    for i, c in enumerate(center):
        reach = math.sqrt(float(radius_sq * inv[i][i])) + 1
        spans.append(range(math.floor(float(c) - reach), math.ceil(float(c) + reach) + 1))
    return spans


def brute_force_minimum(gram: Matrix) -> tuple[Fraction, set[tuple[int, ...]]]:
    """Exact minimum and every minimal vector, ``+-`` pairs included."""

    n = len(gram)
    upper = min(gram[i][i] for i in range(n))
    best = upper
    found: set[tuple[int, ...]] = set()
    for point in itertools.product(*_ranges(gram, [Fraction(0)] * n, upper)):
        if not any(point):
            continue
        value = quadratic_form(gram, point)
        if value < best:
            best, found = value, {point}
        elif value == best:
            found.add(point)
    return best, found


def brute_force_closest(
    gram: Matrix,
    target: Sequence[Fraction],
) -> tuple[Fraction, set[tuple[int, ...]]]:
    rounded = [round(t) for t in target]
    best = quadratic_form(gram, [a - t for a, t in zip(rounded, target)])
    found = {tuple(rounded)}
    for point in itertools.product(*_ranges(gram, target, best)):
        value = quadratic_form(gram, [a - t for a, t in zip(point, target)])
        if value < best:
            best, found = value, {point}
        elif value == best:
            found.add(point)
    return best, found


def canonical(vectors: set[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """One representative per ``+-`` pair, first nonzero coordinate positive."""

    result = set()
    for vector in vectors:
        first = next(v for v in vector if v != 0)
        result.add(vector if first > 0 else tuple(-v for v in vector))
    return result
