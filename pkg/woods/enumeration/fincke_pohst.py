"""Fincke-Pohst enumeration with float pruning and an exact integer recheck."""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable
from typing import Sequence

import numpy as np

from woods.enumeration.config import DEFAULT_ENUMERATION_CONFIG
from woods.enumeration.config import EnumerationConfig
from woods.enumeration.reduction import IntMatrix
from woods.enumeration.reduction import lll_reduce_gram
from woods.errors import EnumerationBudgetExceeded
from woods.lattice.linalg import Matrix
from woods.lattice.linalg import clear_denominators
from woods.lattice.linalg import inverse
from woods.lattice.linalg import is_diagonal
from woods.lattice.linalg import quadratic_form


logger = logging.getLogger(__name__)

IntVector = tuple[int, ...]

_INT64_LIMIT = 2**62


@dataclass(frozen=True, slots=True)
class EnumerationStats:
    nodes: int
    candidates: int


@dataclass(frozen=True, slots=True)
class BlockMinimum:
    """Minimum of ``x^T G x`` over nonzero ``x`` and one vector per ``+-`` pair."""

    min_norm: Fraction
    vectors: tuple[IntVector, ...]
    stats: EnumerationStats


@dataclass(frozen=True, slots=True)
class BlockClosest:
    dist_sq: Fraction
    vectors: tuple[IntVector, ...]
    stats: EnumerationStats


def cholesky_form(gram: Matrix) -> tuple[list[float], list[list[float]]]:
    """Float ``q`` with ``x^T G x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2``."""

    n = len(gram)
    q = [[float(value) for value in row] for row in gram]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return [q[i][i] for i in range(n)], q


def _search(
    gram: Matrix,
    center: Sequence[float],
    radius: float,
    config: EnumerationConfig,
    accept: Callable[[IntVector, float], float],
    *,
    half_space: bool,
) -> int:
    """Visit every integer ``x`` with ``Q(x - center) <= radius`` up to float slack.

    ``accept`` returns the radius to keep searching with, which may only shrink. With
    ``half_space`` the search is around the origin and yields one vector per ``+-`` pair.
    """

    diag, q = cholesky_form(gram)
    n = len(gram)
    x = [0] * n
    slack = config.float_slack
    budget = config.node_budget
    nodes = 0
    bound = radius

    def limit() -> float:
        return bound * (1 + slack) + slack

    def visit(level: int, used: float, outer_zero: bool) -> None:
        nonlocal nodes, bound
        nodes += 1
        if nodes > budget:
            raise EnumerationBudgetExceeded(budget)
        c = center[level]
        row = q[level]
        for j in range(level + 1, n):
            c -= row[j] * (x[j] - center[j])
        room = limit() - used
        if room < 0:
            return
        span = math.sqrt(room / diag[level])
        lo = math.ceil(c - span)
        hi = math.floor(c + span)
        if half_space and outer_zero:
            lo = max(lo, 0)
        for v in sorted(range(lo, hi + 1), key=lambda value: abs(value - c)):
            total = used + diag[level] * (v - c) ** 2
            if total > limit():
                break
            x[level] = v
            if level == 0:
                if half_space and outer_zero and v == 0:
                    continue
                bound = min(bound, accept(tuple(x), total))
            else:
                visit(level - 1, total, outer_zero and v == 0)
        x[level] = 0

    visit(n - 1, 0.0, True)
    return nodes


def _fits_int64(*bounds: int) -> bool:
    return math.prod(bounds) < _INT64_LIMIT


def _exact_norms(gram_int: list[list[int]], points: np.ndarray) -> np.ndarray:
    """Integer ``p^T G p`` per row, exact in int64 when the entries allow it."""

    n = len(gram_int)
    g_max = max((abs(value) for row in gram_int for value in row), default=0)
    p_max = int(np.abs(points).max()) if points.size else 0
    if _fits_int64(max(p_max, 1) ** 2, max(g_max, 1), n * n):
        matrix = np.array(gram_int, dtype=np.int64)
        data = points.astype(np.int64)
    else:
        matrix = np.array(gram_int, dtype=object)
        data = points.astype(object)
    return np.einsum("ij,jk,ik->i", data, matrix, data)


def _to_original(transform: IntMatrix, points: np.ndarray) -> list[IntVector]:
    """Map reduced coordinates ``y`` to original ones ``T y``."""

    n = len(transform)
    t_max = max((abs(value) for row in transform for value in row), default=1)
    p_max = int(np.abs(points).max()) if points.size else 0
    dtype: type = np.int64 if _fits_int64(max(t_max, 1), max(p_max, 1), n) else object
    mapped = points.astype(dtype) @ np.array(transform, dtype=dtype).T
    return [tuple(int(v) for v in row) for row in mapped]


def canonical_sign(vector: IntVector) -> IntVector:
    for value in vector:
        if value != 0:
            return vector if value > 0 else tuple(-v for v in vector)
    return vector


def _diagonal_minimum(gram: Matrix) -> BlockMinimum:
    n = len(gram)
    smallest = min(gram[i][i] for i in range(n))
    vectors = tuple(
        tuple(int(i == j) for j in range(n)) for i in range(n) if gram[i][i] == smallest
    )
    return BlockMinimum(smallest, vectors, EnumerationStats(n, n))


@lru_cache(maxsize=64)
def _shortest(gram: Matrix, config: EnumerationConfig) -> BlockMinimum:
    if is_diagonal(gram):
        return _diagonal_minimum(gram)
    transform, reduced = lll_reduce_gram(gram, config.lll_delta)
    found: list[IntVector] = []

    def accept(point: IntVector, value: float) -> float:
        found.append(point)
        return value

    upper = min(reduced[i][i] for i in range(len(reduced)))
    nodes = _search(reduced, [0.0] * len(reduced), float(upper), config, accept, half_space=True)
    points = np.array(found, dtype=object)
    gram_int, common = clear_denominators(reduced)
    norms = _exact_norms(gram_int, points)
    best = min(int(v) for v in norms)
    keep = points[np.array([int(v) == best for v in norms])]
    vectors = sorted(canonical_sign(v) for v in _to_original(transform, keep))
    logger.debug(
        "block SVP in dimension %d: %d nodes, %d candidates, %d minimal pairs",
        len(gram),
        nodes,
        len(found),
        len(vectors),
    )
    return BlockMinimum(Fraction(best, common), tuple(vectors), EnumerationStats(nodes, len(found)))


def block_shortest_vectors(
    gram: Matrix,
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> BlockMinimum:
    """Exact minimum of a rational Gram block; results are memoised per Gram matrix."""

    return _shortest(gram, config)


def _diagonal_closest(gram: Matrix, target: Sequence[Fraction]) -> BlockClosest:
    choices: list[tuple[int, ...]] = []
    dist_sq = Fraction(0)
    for i, t in enumerate(target):
        low = math.floor(t)
        if t - low == Fraction(1, 2):
            choices.append((low, low + 1))
        elif t - low < Fraction(1, 2):
            choices.append((low,))
        else:
            choices.append((low + 1,))
        dist_sq += gram[i][i] * (choices[-1][0] - t) ** 2
    vectors = tuple(itertools.product(*choices))
    return BlockClosest(dist_sq, vectors, EnumerationStats(len(target), len(vectors)))


def _babai(gram: Matrix, target: Sequence[Fraction]) -> IntVector:
    _, q = cholesky_form(gram)
    n = len(gram)
    x = [0] * n
    for level in range(n - 1, -1, -1):
        c = float(target[level])
        for j in range(level + 1, n):
            c -= q[level][j] * (x[j] - float(target[j]))
        x[level] = round(c)
    return tuple(x)


def _reduced_target(
    gram: Matrix,
    target: Sequence[Fraction],
    config: EnumerationConfig,
) -> tuple[IntMatrix, Matrix, tuple[Fraction, ...]]:
    """LLL-reduce and express ``target`` in the reduced basis, ``T^-1 t``."""

    n = len(gram)
    transform, reduced = lll_reduce_gram(gram, config.lll_delta)
    unimodular_inverse = _inverse(transform)
    local = tuple(
        sum((unimodular_inverse[i][j] * target[j] for j in range(n)), Fraction(0))
        for i in range(n)
    )
    return transform, reduced, local


@lru_cache(maxsize=128)
def _inverse(transform: IntMatrix) -> Matrix:
    return inverse(tuple(tuple(Fraction(v) for v in row) for row in transform))


def block_closest_vectors(
    gram: Matrix,
    target: Sequence[Fraction],
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> BlockClosest:
    """Exact squared distance from ``target`` to the lattice and every closest point."""

    n = len(gram)
    if len(target) != n:
        raise ValueError(f"expected a target with {n} coordinates")
    target = tuple(Fraction(t) for t in target)
    if is_diagonal(gram):
        return _diagonal_closest(gram, target)
    transform, reduced, local = _reduced_target(gram, target, config)
    start = _babai(reduced, local)
    initial = quadratic_form(reduced, [a - b for a, b in zip(start, local)])
    found: list[IntVector] = []

    def accept(point: IntVector, value: float) -> float:
        found.append(point)
        return value

    center = [float(t) for t in local]
    nodes = _search(reduced, center, float(initial), config, accept, half_space=False)
    if not found:
        found.append(start)

    denominator = math.lcm(*(t.denominator for t in local))
    shift = [int(t * denominator) for t in local]
    points = np.array(found, dtype=object)
    offsets = points * denominator - np.array(shift, dtype=object)
    gram_int, common = clear_denominators(reduced)
    distances = _exact_norms(gram_int, offsets)
    best = min(int(v) for v in distances)
    keep = points[np.array([int(v) == best for v in distances])]
    vectors = tuple(sorted(_to_original(transform, keep)))
    logger.debug(
        "block CVP in dimension %d: %d nodes, %d candidates, %d closest",
        n,
        nodes,
        len(found),
        len(vectors),
    )
    dist_sq = Fraction(best, common * denominator * denominator)
    return BlockClosest(dist_sq, vectors, EnumerationStats(nodes, len(found)))


def block_points_within(
    gram: Matrix,
    target: Sequence[Fraction],
    radius_sq: float,
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> tuple[IntVector, ...]:
    """Lattice points with ``Q(x - target) <= radius_sq`` by float pruning only."""

    target = tuple(Fraction(t) for t in target)
    transform, reduced, local = _reduced_target(gram, target, config)
    found: list[IntVector] = []

    def accept(point: IntVector, value: float) -> float:
        found.append(point)
        return radius_sq

    center = [float(t) for t in local]
    _search(reduced, center, radius_sq, config, accept, half_space=False)
    if not found:
        return ()
    return tuple(sorted(_to_original(transform, np.array(found, dtype=object))))
