from __future__ import annotations

from fractions import Fraction

import pytest

from woods.errors import NonRepresentablePower
from woods.scalar import ComparisonRecord
from woods.scalar import IntervalEvaluator
from woods.scalar import MonomialScalar
from woods.scalar import Ordering3
from woods.scalar import ScalarSum
from woods.scalar import certified_sign
from woods.scalar import certify_comparison
from woods.scalar import compare
from woods.scalar import factor_integer
from woods.scalar import interval_log
from woods.scalar import replay
from woods.scalar import rpow
from woods.scalar import to_float_interval


SQRT2 = MonomialScalar.prime_power(2, Fraction(1, 2))


def test_factor_integer_splits_prime_powers() -> None:
    assert factor_integer(360) == (((2, 3), (3, 2), (5, 1)), 1)
    assert factor_integer(1) == ((), 1)
    with pytest.raises(ValueError):
        factor_integer(0)


def test_monomial_is_canonical() -> None:
    twelve = MonomialScalar.of(12)
    assert twelve.coeff == 1
    assert twelve.factors == ((2, 2), (3, 1))
    assert MonomialScalar.of(3, {4: Fraction(1, 2)}) == MonomialScalar.of(6)
    assert MonomialScalar.of(1, {6: Fraction(1, 2)}) == rpow(MonomialScalar.of(6), Fraction(1, 2))

    negative = MonomialScalar.of(Fraction(-3, 4))
    assert negative.sign == -1
    assert negative.coeff == -1
    assert negative.factors == ((2, -2), (3, 1))


def test_monomial_arithmetic() -> None:
    assert SQRT2 * SQRT2 == MonomialScalar.of(2)
    assert (SQRT2**4).rational_value() == 4
    assert rpow(MonomialScalar.of(4), Fraction(1, 2)) == MonomialScalar.of(2)
    assert MonomialScalar.of(8) / MonomialScalar.of(2) == MonomialScalar.of(4)
    assert MonomialScalar.of(5).reciprocal().rational_value() == Fraction(1, 5)
    assert MonomialScalar.of(1).is_one()
    assert not SQRT2.is_rational()


def test_radical_split_keeps_fractional_exponents() -> None:
    value = MonomialScalar.of(3, {2: Fraction(5, 2)})
    assert value.radical_split() == (Fraction(12), ((2, Fraction(1, 2)),))


def test_rpow_preconditions() -> None:
    with pytest.raises(ValueError):
        rpow(MonomialScalar.of(-2), Fraction(1, 2))
    assert rpow(SQRT2, 0).is_one()


def test_unfactorable_root_is_rejected() -> None:
    with pytest.raises(NonRepresentablePower):
        MonomialScalar.of(1, {1000003 * 1000033: Fraction(1, 2)}, bound=1000)


def test_monomial_payload_round_trip() -> None:
    value = MonomialScalar.of(Fraction(-7, 3), {2: Fraction(2, 5), 5: Fraction(-1, 3)})
    assert MonomialScalar.from_payload(value.to_payload()) == value


def test_scalar_sum_merges_like_radicals() -> None:
    sqrt8 = rpow(MonomialScalar.of(8), Fraction(1, 2))
    total = ScalarSum.of(SQRT2, sqrt8)
    assert total == ScalarSum.of(MonomialScalar.of(3, {2: Fraction(1, 2)}))
    assert len(total.terms) == 1
    assert (ScalarSum.of(SQRT2) - SQRT2).is_zero()
    assert str(ScalarSum.zero()) == "0"
    assert ScalarSum.of(Fraction(1, 2), Fraction(1, 3)).rational_value() == Fraction(5, 6)


def test_scalar_sum_products_distribute() -> None:
    total = ScalarSum.of(1, SQRT2) * ScalarSum.of(1, SQRT2)
    assert total == ScalarSum.of(3, MonomialScalar.of(2, {2: Fraction(1, 2)}))


def test_compare_uses_intervals_for_irrationals() -> None:
    assert compare(SQRT2, Fraction(141421, 100000)) is Ordering3.GT
    assert compare(SQRT2, Fraction(141422, 100000)) is Ordering3.LT


def test_equality_is_only_symbolic() -> None:
    sqrt6 = MonomialScalar.of(1, {6: Fraction(1, 2)})
    sqrt3 = rpow(MonomialScalar.of(3), Fraction(1, 2))
    record = certify_comparison(sqrt6, SQRT2 * sqrt3)
    assert record.ordering is Ordering3.EQ
    assert record.symbolic
    assert record.bits == 0


def test_comparison_records_replay() -> None:
    c_lambda15 = ScalarSum.of(MonomialScalar.of(7, {2: Fraction(2, 5)}))
    record = certify_comparison(c_lambda15, 9)
    assert record.ordering is Ordering3.GT
    assert record.difference is not None and record.difference.within(0.2, 0.3)
    assert replay(record)
    assert replay(ComparisonRecord.from_payload(record.to_payload()))


def test_certified_sign_reports_undecided() -> None:
    ordering, enclosure = certified_sign(
        lambda evaluator: evaluator.ctx.mpf([-1, 1]), max_bits=32, start_bits=16
    )
    assert ordering is Ordering3.UNDECIDED
    assert enclosure.bits == 32


def test_intervals_enclose_their_values() -> None:
    third = to_float_interval(Fraction(1, 3), 64)
    assert third.contains(Fraction(1, 3))
    assert third.width < 1e-15
    evaluator = IntervalEvaluator(64)
    assert evaluator.enclose(evaluator.pi()).within(3.14159265, 3.14159266)
    assert interval_log(MonomialScalar.of(8), 64).within(2.0794, 2.0795)
    assert to_float_interval(SQRT2, 128).decimal(10) == "1.414213562"


def test_evaluator_rejects_low_precision() -> None:
    with pytest.raises(ValueError):
        IntervalEvaluator(8)


@pytest.mark.parametrize(
    ("ordering", "flipped"),
    [
        (Ordering3.LT, Ordering3.GT),
        (Ordering3.GT, Ordering3.LT),
        (Ordering3.EQ, Ordering3.EQ),
        (Ordering3.UNDECIDED, Ordering3.UNDECIDED),
    ],
)
def test_ordering_flip(ordering: Ordering3, flipped: Ordering3) -> None:
    assert ordering.flipped() is flipped
