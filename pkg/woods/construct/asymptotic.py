"""Minkowski-type bounds and the asymptotic growth scan of ``C`` against ``d^2 / log d``."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any
from typing import Iterable

from woods.construct.engine import Assessment
from woods.construct.engine import CounterexampleEngine
from woods.construct.report import ScanRowPayload
from woods.errors import UndecidedComparison
from woods.scalar import DEFAULT_SCALAR_CONFIG
from woods.scalar import FloatInterval
from woods.scalar import IntervalEvaluator
from woods.scalar import to_float_interval
from woods.scalar.interval import mpf_to_fraction


logger = logging.getLogger(__name__)


def ball_volume_parts(n: int) -> tuple[Fraction, int]:
    """``(q, k)`` with ``V_n = q * pi^k`` for the unit ball in dimension ``n``."""

    if n < 1:
        raise ValueError("n must be positive")
    k = n // 2
    if n % 2 == 0:
        return Fraction(1, math.factorial(k)), k
    return Fraction(2 * math.factorial(k) * 4**k, math.factorial(n)), k


def _log_volume(evaluator: IntervalEvaluator, n: int) -> Any:
    q, k = ball_volume_parts(n)
    value = evaluator.ln(evaluator.rational(q))
    if k:
        value = value + k * evaluator.ln(evaluator.pi())
    return value


def _convex_body(evaluator: IntervalEvaluator, n: int) -> Any:
    return 2 * evaluator.exp(-_log_volume(evaluator, n) / n)


def _hlawka(evaluator: IntervalEvaluator, n: int) -> Any:
    return evaluator.exp((evaluator.ln(evaluator.rational(2)) - _log_volume(evaluator, n)) / n)


def minkowski_lambda_bound(n: int, bits: int = 64) -> FloatInterval:
    """``2 V_n^(-1/n)``; at covolume one this is Minkowski's convex-body value for ``lambda_1``."""

    evaluator = IntervalEvaluator(bits)
    return evaluator.enclose(_convex_body(evaluator, n))


def minkowski_hlawka_bound(n: int, bits: int = 64) -> FloatInterval:
    """``(2 / V_n)^(1/n)``; some unimodular lattice in dimension ``n`` reaches this ``lambda_1``."""

    evaluator = IntervalEvaluator(bits)
    return evaluator.enclose(_hlawka(evaluator, n))


def split_dimension(d: int, max_bits: int = DEFAULT_SCALAR_CONFIG.max_bits) -> tuple[int, int]:
    """``m = floor(d / ln d)`` certified by intervals, and ``n = d - m``."""

    if d < 4:
        raise ValueError("the split needs d >= 4")
    bits = 64
    while True:
        evaluator = IntervalEvaluator(bits)
        enclosure = evaluator.enclose(evaluator.rational(d) / evaluator.ln(evaluator.rational(d)))
        low = math.floor(mpf_to_fraction(enclosure.lo))
        if low == math.floor(mpf_to_fraction(enclosure.hi)):
            return low, d - low
        if bits >= max_bits:
            raise UndecidedComparison(f"floor(d / ln d) for d = {d}", bits)
        bits = min(2 * bits, max_bits)


@dataclass(frozen=True, slots=True)
class ScanRow:
    d: int
    m: int
    n: int
    lambda_bound: FloatInterval
    c_lower: FloatInterval
    ratio: FloatInterval
    lambda_hlawka: FloatInterval
    c_hlawka: FloatInterval
    ratio_hlawka: FloatInterval
    best: Assessment | None = None

    def to_payload(self, digits: int = 10) -> ScanRowPayload:
        best_c = best_ratio = None
        if self.best is not None:
            value = to_float_interval(self.best.c_lambda, 64)
            best_c = value.decimal(digits)
            ratio = to_float_interval(self.best.c_lambda * Fraction(1, self.d), 64)
            best_ratio = ratio.decimal(digits)
        return ScanRowPayload(
            d=self.d,
            m=self.m,
            n=self.n,
            lambda_bound=self.lambda_bound.decimal(digits),
            c_lower=self.c_lower.decimal(digits),
            ratio=self.ratio.decimal(digits),
            lambda_hlawka=self.lambda_hlawka.decimal(digits),
            c_hlawka=self.c_hlawka.decimal(digits),
            ratio_hlawka=self.ratio_hlawka.decimal(digits),
            best_base=None if self.best is None else self.best.base,
            best_c=best_c,
            best_over_d=best_ratio,
        )


def scan_row(d: int, bits: int = 64, engine: CounterexampleEngine | None = None) -> ScanRow:
    m, n = split_dimension(d)
    evaluator = IntervalEvaluator(bits)
    scale = evaluator.rational(Fraction(d * d)) / evaluator.ln(evaluator.rational(d))
    exponent = evaluator.rational(Fraction(2 * n, d))

    def chain(lam: Any) -> tuple[Any, Any]:
        c_lower = m * evaluator.exp(exponent * evaluator.ln(lam))
        return c_lower, c_lower / scale

    convex = _convex_body(evaluator, n)
    hlawka = _hlawka(evaluator, n)
    c_convex, ratio_convex = chain(convex)
    c_hlawka, ratio_hlawka = chain(hlawka)
    best = engine.best_construction(d) if engine is not None else None
    row = ScanRow(
        d=d,
        m=m,
        n=n,
        lambda_bound=evaluator.enclose(convex),
        c_lower=evaluator.enclose(c_convex),
        ratio=evaluator.enclose(ratio_convex),
        lambda_hlawka=evaluator.enclose(hlawka),
        c_hlawka=evaluator.enclose(c_hlawka),
        ratio_hlawka=evaluator.enclose(ratio_hlawka),
        best=best,
    )
    logger.debug("scan d = %d: m = %d, ratio %s", d, m, row.ratio)
    return row


def asymptotic_scan(
    d_list: Iterable[int],
    bits: int = 64,
    engine: CounterexampleEngine | None = None,
) -> list[ScanRow]:
    """Rows in ``d`` order; pass an engine to add the best catalog construction per ``d``."""

    return [scan_row(d, bits, engine) for d in sorted(set(d_list))]
