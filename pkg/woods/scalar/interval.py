"""Rigorous interval enclosures and certified comparisons of exact scalars."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any
from typing import Callable

import mpmath
from mpmath import libmp
from mpmath.ctx_iv import MPIntervalContext

from woods.scalar.config import DEFAULT_SCALAR_CONFIG
from woods.scalar.monomial import MonomialScalar
from woods.scalar.monomial import RationalLike
from woods.scalar.sums import ScalarSum


logger = logging.getLogger(__name__)

MIN_BITS = 16


class Ordering3(str, Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    UNDECIDED = "UNDECIDED"

    def flipped(self) -> Ordering3:
        if self is Ordering3.LT:
            return Ordering3.GT
        if self is Ordering3.GT:
            return Ordering3.LT
        return self


def mpf_to_fraction(value: mpmath.mpf) -> Fraction:
    """Exact rational value of a finite binary float."""

    man, exp = value.man_exp
    if man == 0:
        return Fraction(0)
    return Fraction(int(man)) * Fraction(2) ** int(exp)


@dataclass(frozen=True, slots=True)
class FloatInterval:
    """Closed interval ``[lo, hi]`` with exact binary endpoints."""

    lo: mpmath.mpf
    hi: mpmath.mpf
    bits: int

    @property
    def width(self) -> mpmath.mpf:
        return self.hi - self.lo

    def contains(self, value: RationalLike | float) -> bool:
        target = Fraction(value)
        return mpf_to_fraction(self.lo) <= target <= mpf_to_fraction(self.hi)

    def intersects(self, other: FloatInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def within(self, low: RationalLike | float, high: RationalLike | float) -> bool:
        """True when the whole interval lies strictly inside ``(low, high)``."""

        lower = mpf_to_fraction(self.lo)
        upper = mpf_to_fraction(self.hi)
        return Fraction(low) < lower and upper < Fraction(high)

    def sign(self) -> Ordering3:
        if self.lo > 0:
            return Ordering3.GT
        if self.hi < 0:
            return Ordering3.LT
        return Ordering3.UNDECIDED

    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)

    def decimal(self, digits: int = 10) -> str:
        return mpmath.nstr((self.lo + self.hi) / 2, digits)

    def to_payload(self, digits: int = 20) -> dict[str, Any]:
        return {
            "lo": mpmath.nstr(self.lo, digits),
            "hi": mpmath.nstr(self.hi, digits),
            "bits": self.bits,
        }

    def __str__(self) -> str:
        return f"[{mpmath.nstr(self.lo, 12)}, {mpmath.nstr(self.hi, 12)}]"


class IntervalEvaluator:
    """Outward-rounded evaluation at a fixed working precision.

    Each evaluator owns its interval context, so evaluators can be used from several
    threads at once.
    """

    def __init__(self, bits: int) -> None:
        if bits < MIN_BITS:
            raise ValueError(f"bits must be at least {MIN_BITS}")
        self.bits = bits
        self.ctx = MPIntervalContext()
        self.ctx.prec = bits

    def rational(self, value: RationalLike) -> Any:
        value = Fraction(value)
        numerator = self.ctx.mpf(value.numerator)
        if value.denominator == 1:
            return numerator
        return numerator / self.ctx.mpf(value.denominator)

    def ln_prime(self, prime: int) -> Any:
        return self.ctx.ln(self.ctx.mpf(prime))

    def monomial(self, term: MonomialScalar) -> Any:
        multiplier, radical = term.radical_split()
        value = self.rational(multiplier)
        for prime, exponent in radical:
            value = value * self.ctx.exp(self.ln_prime(prime) * self.rational(exponent))
        return value

    def scalar(self, value: ScalarSum | MonomialScalar | RationalLike) -> Any:
        total = self.ctx.mpf(0)
        for term in ScalarSum.of(value).terms:
            total = total + self.monomial(term)
        return total

    def ln_monomial(self, term: MonomialScalar) -> Any:
        if term.coeff <= 0:
            raise ValueError("logarithm of a nonpositive monomial")
        value = self.ctx.ln(self.rational(term.coeff)) if term.coeff != 1 else self.ctx.mpf(0)
        for prime, exponent in term.factors:
            value = value + self.ln_prime(prime) * self.rational(exponent)
        return value

    def pi(self) -> Any:
        low = libmp.mpf_pi(self.bits, libmp.round_floor)
        high = libmp.mpf_pi(self.bits, libmp.round_ceiling)
        return self.ctx.make_mpf((low, high))

    def exp(self, value: Any) -> Any:
        return self.ctx.exp(value)

    def ln(self, value: Any) -> Any:
        return self.ctx.ln(value)

    def enclose(self, value: Any) -> FloatInterval:
        low, high = value._mpi_
        return FloatInterval(mpmath.mp.make_mpf(low), mpmath.mp.make_mpf(high), self.bits)


def to_float_interval(value: ScalarSum | MonomialScalar | RationalLike, bits: int) -> FloatInterval:
    """Rigorous enclosure of ``value`` computed with ``bits`` of working precision."""

    evaluator = IntervalEvaluator(bits)
    return evaluator.enclose(evaluator.scalar(value))


def interval_log(term: MonomialScalar, bits: int) -> FloatInterval:
    """Rigorous enclosure of ``ln(term)`` for a positive monomial."""

    evaluator = IntervalEvaluator(bits)
    return evaluator.enclose(evaluator.ln_monomial(term))


def certified_sign(
    expression: Callable[[IntervalEvaluator], Any],
    max_bits: int = DEFAULT_SCALAR_CONFIG.max_bits,
    start_bits: int = DEFAULT_SCALAR_CONFIG.start_bits,
) -> tuple[Ordering3, FloatInterval]:
    """Sign of an interval expression, doubling the precision until it is separated from 0.

    Intervals never prove equality: an enclosure straddling zero at ``max_bits`` is UNDECIDED.
    """

    if max_bits < MIN_BITS:
        raise ValueError(f"max_bits must be at least {MIN_BITS}")
    bits = max(MIN_BITS, min(start_bits, max_bits))
    while True:
        evaluator = IntervalEvaluator(bits)
        enclosure = evaluator.enclose(expression(evaluator))
        ordering = enclosure.sign()
        if ordering is not Ordering3.UNDECIDED or bits >= max_bits:
            return ordering, enclosure
        logger.debug("sign unresolved at %d bits, enclosure %s", bits, enclosure)
        bits = min(2 * bits, max_bits)


@dataclass(frozen=True, slots=True)
class ComparisonRecord:
    """One certified comparison, replayable from its payload."""

    left: ScalarSum
    right: ScalarSum
    ordering: Ordering3
    bits: int
    difference: FloatInterval | None = None

    @property
    def symbolic(self) -> bool:
        return self.difference is None

    def to_payload(self) -> dict[str, Any]:
        return {
            "left": self.left.to_payload(),
            "right": self.right.to_payload(),
            "ordering": self.ordering.value,
            "bits": self.bits,
            "difference": None if self.difference is None else self.difference.to_payload(),
        }

    @classmethod
    def from_payload(cls, payload: dict[str, Any]) -> ComparisonRecord:
        return cls(
            left=ScalarSum.from_payload(payload["left"]),
            right=ScalarSum.from_payload(payload["right"]),
            ordering=Ordering3(payload["ordering"]),
            bits=int(payload["bits"]),
        )


def certify_comparison(
    a: ScalarSum | MonomialScalar | RationalLike,
    b: ScalarSum | MonomialScalar | RationalLike,
    max_bits: int = DEFAULT_SCALAR_CONFIG.max_bits,
    start_bits: int = DEFAULT_SCALAR_CONFIG.start_bits,
) -> ComparisonRecord:
    left = ScalarSum.of(a)
    right = ScalarSum.of(b)
    if max_bits < MIN_BITS:
        raise ValueError(f"max_bits must be at least {MIN_BITS}")
    difference = left - right
    if difference.is_zero():
        return ComparisonRecord(left, right, Ordering3.EQ, 0)
    ordering, enclosure = certified_sign(
        lambda evaluator: evaluator.scalar(difference), max_bits, start_bits
    )
    if ordering is Ordering3.UNDECIDED:
        logger.warning("comparison undecided at %d bits: %s vs %s", max_bits, left, right)
    return ComparisonRecord(left, right, ordering, enclosure.bits, enclosure)


def compare(
    a: ScalarSum | MonomialScalar | RationalLike,
    b: ScalarSum | MonomialScalar | RationalLike,
    max_bits: int = DEFAULT_SCALAR_CONFIG.max_bits,
) -> Ordering3:
    """LT/GT from a separating enclosure, EQ only from symbolic cancellation."""

    return certify_comparison(a, b, max_bits).ordering


def replay(record: ComparisonRecord) -> bool:
    """Re-run a recorded comparison at its recorded precision and check the outcome."""

    if record.ordering is Ordering3.EQ:
        return (record.left - record.right).is_zero()
    bits = max(record.bits, MIN_BITS)
    return certify_comparison(record.left, record.right, bits, bits).ordering is record.ordering
