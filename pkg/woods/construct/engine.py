"""Mixing a base lattice with a scaled integer lattice into well-rounded unimodular lattices."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from woods.catalog import PARAMETRIC_ZN
from woods.catalog import Catalog
from woods.catalog import UnimodularConstants
from woods.construct.config import ConstructConfig
from woods.construct.report import ConstructionReport
from woods.covering import covering_scale
from woods.covering import covering_sum
from woods.covering import covering_Zn
from woods.enumeration import shortest_vectors
from woods.errors import ConstructionFailed
from woods.errors import UndecidedComparison
from woods.lattice import BlockLattice
from woods.lattice import covolume
from woods.lattice import direct_sum
from woods.lattice import scale_lattice
from woods.lattice import unimodular_normalize
from woods.scalar import ComparisonRecord
from woods.scalar import FloatInterval
from woods.scalar import IntervalEvaluator
from woods.scalar import MonomialScalar
from woods.scalar import Ordering3
from woods.scalar import ScalarSum
from woods.scalar import certified_sign
from woods.scalar import certify_comparison
from woods.scalar import rpow
from woods.scalar import to_float_interval
from woods.wellround import well_rounded_certificate


logger = logging.getLogger(__name__)


def mix_weights(n: int, m: int, lam: MonomialScalar) -> tuple[MonomialScalar, MonomialScalar]:
    """``alpha1 = lam^(-m/(n+m))`` and ``alpha2 = lam^(n/(n+m))``.

    These are the only weights with ``alpha1^n alpha2^m = 1`` and ``lam * alpha1 = alpha2``.
    """

    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if lam.sign <= 0:
        raise ValueError("lambda must be positive")
    return rpow(lam, Fraction(-m, n + m)), rpow(lam, Fraction(n, n + m))


def c_formula(c_base: ScalarSum, lam: MonomialScalar, n: int, m: int) -> ScalarSum:
    """``C_base lam^(-2m/(n+m)) + m lam^(2n/(n+m))``."""

    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    base_term = c_base * rpow(lam, Fraction(-2 * m, n + m))
    integer_term = rpow(lam, Fraction(2 * n, n + m)) * m
    return base_term + integer_term


@dataclass(frozen=True, slots=True)
class Assessment:
    """Formula value against ``d`` without building the lattice."""

    base: str
    d: int
    n: int
    m: int
    c_lambda: ScalarSum
    comparison: ComparisonRecord

    @property
    def verdict(self) -> Ordering3:
        return self.comparison.ordering

    @property
    def margin(self) -> FloatInterval:
        if self.comparison.difference is not None:
            return self.comparison.difference
        return to_float_interval(0, 64)


@dataclass(frozen=True, slots=True)
class ThresholdResult:
    base: str
    d_max: int
    threshold: int | None
    derivative: tuple[tuple[int, Ordering3], ...]
    comparisons: int

    def to_payload(self) -> dict[str, Any]:
        return {
            "base": self.base,
            "d_max": self.d_max,
            "threshold": self.threshold,
            "derivative": [{"m": m, "sign": sign.value} for m, sign in self.derivative],
            "comparisons": self.comparisons,
        }


class CounterexampleEngine:
    """Builds and certifies the mixed lattices ``alpha1 B + alpha2 Z^m`` for catalog bases."""

    def __init__(
        self,
        catalog: Catalog | None = None,
        config: ConstructConfig | None = None,
    ) -> None:
        self.catalog = catalog or Catalog()
        self.config = config or ConstructConfig()

    def constants(self, base: str, n: int | None = None) -> UnimodularConstants:
        if base == PARAMETRIC_ZN and n is None:
            n = 1
        return self.catalog.unimodular(base, n)

    def _split(self, constants: UnimodularConstants, d: int) -> tuple[int, int]:
        n = constants.dim
        if d <= n:
            raise ValueError(f"d = {d} must exceed the base dimension {n}")
        return n, d - n

    def _compare(self, value: ScalarSum, d: int) -> ComparisonRecord:
        record = certify_comparison(value, d, self.config.max_bits, self.config.start_bits)
        if record.ordering is Ordering3.UNDECIDED:
            raise UndecidedComparison(f"C = {value} against d = {d}", record.bits)
        return record

    def assess(self, base: str, d: int, n: int | None = None) -> Assessment:
        constants = self.constants(base, n)
        dim, m = self._split(constants, d)
        value = c_formula(constants.covering.c, constants.lam, dim, m)
        return Assessment(constants.name, d, dim, m, value, self._compare(value, d))

    def build(
        self,
        base: str,
        d: int,
        n: int | None = None,
    ) -> tuple[ConstructionReport, BlockLattice]:
        constants = self.constants(base, n)
        dim, m = self._split(constants, d)
        lam = constants.lam
        alpha1, alpha2 = mix_weights(dim, m, lam)
        size = constants.dim if base == PARAMETRIC_ZN else None
        base_lattice = unimodular_normalize(self.catalog.lattice(base, size))
        lattice = direct_sum(
            scale_lattice(base_lattice, alpha1),
            scale_lattice(BlockLattice.zn(m), alpha2),
        )
        cov = covolume(lattice)
        if not cov.value.is_one():
            logger.warning("%s + Z^%d in dimension %d has covolume %s", base, m, d, cov)
            raise ConstructionFailed("covolume", f"expected 1, got {cov}")
        minimal = shortest_vectors(lattice, self.config.enumeration)
        rounded = well_rounded_certificate(lattice, minimal)
        if not rounded.is_well_rounded:
            logger.warning("%s + Z^%d in dimension %d is not well-rounded", base, m, d)
            raise ConstructionFailed(
                "well_rounded",
                f"minimal vectors span rank {rounded.rank_achieved} of {rounded.dim}",
            )
        covering = covering_sum(
            covering_scale(constants.covering, alpha1),
            covering_scale(covering_Zn(m), alpha2),
        )
        value = c_formula(constants.covering.c, lam, dim, m)
        if value != covering.c:
            raise ConstructionFailed(
                "covering", f"closed form {value} disagrees with the derivation {covering.c}"
            )
        record = self._compare(value, d)
        report = ConstructionReport(
            d=d,
            n=dim,
            m=m,
            base=constants.name,
            lam=lam,
            alpha1=alpha1,
            alpha2=alpha2,
            c_lambda=value,
            verdict=record.ordering,
            comparison=record,
            covolume=cov.value,
            well_rounded=rounded,
            minima=minimal.comparisons,
            covering=covering,
            base_kind=constants.covering.kind,
        )
        logger.info(
            "built %s + Z^%d in dimension %d: C = %s, verdict %s",
            base,
            m,
            d,
            value,
            record.ordering.value,
        )
        return report, lattice

    def derivative_sign(
        self,
        base: str,
        m: int,
        n: int | None = None,
    ) -> tuple[Ordering3, FloatInterval | None]:
        """Sign of ``f'(m)`` for ``f(m) = C(m) - (n + m)`` with the base dimension fixed."""

        if m < 1:
            raise ValueError("m must be positive")
        constants = self.constants(base, n)
        dim = constants.dim
        lam = constants.lam
        if lam.is_one():
            return Ordering3.EQ, None
        total = dim + m
        k = Fraction(2 * dim, total * total)
        decay = constants.covering.c * rpow(lam, Fraction(-2 * m, total))
        growth = rpow(lam, Fraction(2 * dim, total))

        def expression(evaluator: IntervalEvaluator) -> Any:
            log_lam = evaluator.ln_monomial(lam)
            slope = evaluator.rational(k) * log_lam
            return (
                -evaluator.scalar(decay) * slope
                + evaluator.monomial(growth) * (1 - m * slope)
                - 1
            )

        sign, enclosure = certified_sign(expression, self.config.max_bits, self.config.start_bits)
        if sign is Ordering3.UNDECIDED:
            raise UndecidedComparison(f"derivative sign for {base} at m = {m}", enclosure.bits)
        return sign, enclosure

    def threshold(
        self,
        base: str,
        d_max: int | None = None,
        n: int | None = None,
    ) -> ThresholdResult:
        """Least ``d0`` with a GT verdict for every ``d`` in ``[d0, d_max]``."""

        d_max = d_max or self.config.d_max
        constants = self.constants(base, n)
        start = constants.dim + 1
        threshold: int | None = None
        count = 0
        for d in range(d_max, start - 1, -1):
            count += 1
            if self.assess(base, d, n).verdict is not Ordering3.GT:
                break
            threshold = d
        derivative = tuple(
            (m, self.derivative_sign(base, m, n)[0]) for m in self.config.derivative_samples
        )
        logger.info("threshold for %s up to %d: %s", constants.name, d_max, threshold)
        return ThresholdResult(constants.name, d_max, threshold, derivative, count)

    def best_construction(self, d: int) -> Assessment | None:
        """Largest certified ``C`` among catalog bases of dimension below ``d``."""

        best: Assessment | None = None
        for entry in self.catalog.bases():
            if entry.dim >= d:
                continue
            candidate = self.assess(entry.name, d)
            if best is None:
                best = candidate
                continue
            record = certify_comparison(candidate.c_lambda, best.c_lambda, self.config.max_bits)
            if record.ordering is Ordering3.GT:
                best = candidate
        return best

    def hermite_constant(self, base: str, n: int | None = None) -> MonomialScalar:
        """Squared minimum at covolume one."""

        return self.constants(base, n).lambda_sq


def build(base: str, d: int, n: int | None = None) -> tuple[ConstructionReport, BlockLattice]:
    return CounterexampleEngine().build(base, d, n)


def threshold(base: str, d_max: int = 200, n: int | None = None) -> ThresholdResult:
    return CounterexampleEngine().threshold(base, d_max, n)


def derivative_sign(base: str, m: int, n: int | None = None) -> Ordering3:
    return CounterexampleEngine().derivative_sign(base, m, n)[0]

