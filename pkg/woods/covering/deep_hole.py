"""Seeded local search for points far from a lattice."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable
from typing import Sequence

import numpy as np

from woods.enumeration import DEFAULT_ENUMERATION_CONFIG
from woods.enumeration import EnumerationConfig
from woods.enumeration import block_closest_vectors
from woods.enumeration import block_points_within
from woods.enumeration import closest_vectors
from woods.lattice import BlockLattice
from woods.lattice import GramBlock
from woods.scalar import ScalarSum


logger = logging.getLogger(__name__)

Point = tuple[Fraction, ...]

_GOLDEN = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True, slots=True)
class DeepHoleConfig:
    sweeps: int = 3
    golden_iterations: int = 40
    line_samples: int = 8
    initial_step: Fraction = Fraction(1, 2)
    snap_denominators: tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 24)
    max_denominator: int = 1 << 24
    active_tolerance: float = 1e-6

    def __post_init__(self) -> None:
        if self.sweeps < 1:
            raise ValueError("sweeps must be positive")
        if self.golden_iterations < 1 or self.line_samples < 2:
            raise ValueError("line search needs golden_iterations >= 1 and line_samples >= 2")
        if self.initial_step <= 0:
            raise ValueError("initial_step must be positive")


@dataclass(frozen=True, slots=True)
class DeepHoleResult:
    """Best point found; a lower-bound witness, never a claim of optimality."""

    witness: Point
    dist_sq: ScalarSum
    restarts: int
    seed: int

    @property
    def covering_lower_bound(self) -> ScalarSum:
        return self.dist_sq * 4


def golden_section_max(
    objective: Callable[[float], float],
    low: float,
    high: float,
    iterations: int,
) -> float:
    a, b = low, high
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = objective(c), objective(d)
    for _ in range(iterations):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = objective(d)
    return (a + b) / 2


class DeepHoleSearch:
    """Golden-section ascent of the distance to the lattice.

    The squared distance to an orthogonal sum is the sum of the block distances, so every block
    is searched on its own and the block optima are concatenated.
    """

    def __init__(
        self,
        config: DeepHoleConfig | None = None,
        enumeration: EnumerationConfig | None = None,
    ) -> None:
        self.config = config or DeepHoleConfig()
        self.enumeration = enumeration or DEFAULT_ENUMERATION_CONFIG

    def run(
        self,
        lattice: BlockLattice,
        restarts: int = 4,
        seed: int = 0,
        starts: Sequence[Sequence[object]] = (),
    ) -> DeepHoleResult:
        if restarts < 1 and not starts:
            raise ValueError("need at least one restart or start point")
        split_starts = [lattice.split_vector(start) for start in starts]
        witness: list[Fraction] = []
        for index, block in enumerate(lattice.blocks):
            block_starts = [parts[index] for parts in split_starts]
            witness.extend(self._search_block(block, restarts, seed + 7919 * index, block_starts))
        point = tuple(witness)
        dist_sq = closest_vectors(lattice, point, self.enumeration).dist_sq
        logger.info("deep hole search: dist^2 = %s at %s", dist_sq, point)
        return DeepHoleResult(point, dist_sq, restarts + len(starts), seed)

    def _search_block(
        self,
        block: GramBlock,
        restarts: int,
        seed: int,
        starts: Sequence[Point],
    ) -> Point:
        candidates = list(starts)
        denominator = 1 << 16
        for index in range(restarts):
            rng = Random(seed * 1_000_003 + index)
            candidates.append(
                tuple(Fraction(rng.randrange(denominator), denominator) for _ in range(block.dim))
            )
        best: tuple[Point, Fraction] | None = None
        for start in candidates:
            point, dist_sq = self._snap(block, self._ascend(block, start))
            logger.debug("start %s reached dist^2 = %s", start, dist_sq)
            if best is None or dist_sq > best[1]:
                best = (point, dist_sq)
        if best is None:
            raise RuntimeError("deep hole search ran without start points")
        return best[0]

    def _exact(self, block: GramBlock, point: Point) -> Fraction:
        return block_closest_vectors(block.gram, point, self.enumeration).dist_sq

    def _rational(self, value: float) -> Fraction:
        return Fraction(value).limit_denominator(self.config.max_denominator)

    def _line_search(
        self,
        block: GramBlock,
        point: Point,
        direction: Sequence[float],
        step: float,
    ) -> Point:
        """Grid sample ``[-step, step]``, then refine around the best sample."""

        def at(t: float) -> Point:
            return tuple(self._rational(float(x) + t * u) for x, u in zip(point, direction))

        def value(t: float) -> float:
            return float(self._exact(block, at(t)))

        samples = self.config.line_samples
        grid = [-step + 2 * step * k / samples for k in range(samples + 1)]
        centre = max(grid, key=value)
        spacing = 2 * step / samples
        t = golden_section_max(
            value, centre - spacing, centre + spacing, self.config.golden_iterations
        )
        moved = at(t)
        return moved if self._exact(block, moved) > self._exact(block, point) else point

    def _ascend(self, block: GramBlock, start: Point) -> Point:
        point = start
        step = float(self.config.initial_step)
        for _ in range(self.config.sweeps):
            for axis in range(block.dim):
                direction = [float(i == axis) for i in range(block.dim)]
                point = self._line_search(block, point, direction, step)
            point = self._escape(block, point, step)
            step /= 2
        return point

    def _escape(self, block: GramBlock, point: Point, step: float) -> Point:
        """Slide along the face equidistant from the nearly closest lattice points."""

        dist_sq = float(self._exact(block, point))
        radius = dist_sq * (1 + self.config.active_tolerance) + self.config.active_tolerance
        active = np.array(
            block_points_within(block.gram, point, radius, self.enumeration), dtype=float
        )
        if len(active) == 0:
            return point
        x = np.array([float(v) for v in point])
        centroid = active.mean(axis=0)
        gram = np.array([[float(v) for v in row] for row in block.gram])
        if len(active) == 1:
            direction = x - centroid
        else:
            constraints = (active[1:] - active[0]) @ gram
            _, singular, vt = np.linalg.svd(constraints)
            rank = int(np.sum(singular > 1e-9 * max(singular.max(), 1.0)))
            null = vt[rank:]
            if len(null) == 0:
                return point
            direction = null.T @ (null @ (x - centroid))
            if np.linalg.norm(direction) < 1e-12:
                direction = null[0]
        norm = float(np.linalg.norm(direction))
        if norm < 1e-12:
            return point
        return self._line_search(block, point, list(direction / norm), step)

    def _snap(self, block: GramBlock, point: Point) -> tuple[Point, Fraction]:
        """Round to the first small denominator whose exact distance does not drop."""

        exact = self._exact(block, point)
        for denominator in self.config.snap_denominators:
            snapped = tuple(Fraction(round(x * denominator), denominator) for x in point)
            value = self._exact(block, snapped)
            if value >= exact:
                return snapped, value
        return point, exact


def deep_hole_search(
    lattice: BlockLattice,
    restarts: int = 4,
    seed: int = 0,
    config: DeepHoleConfig | None = None,
    enumeration: EnumerationConfig | None = None,
) -> DeepHoleResult:
    return DeepHoleSearch(config, enumeration).run(lattice, restarts, seed)
