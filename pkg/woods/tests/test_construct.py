from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest

import woods.construct.engine as engine_module
from woods.catalog import Catalog
from woods.construct import ConstructConfig
from woods.construct import CounterexampleEngine
from woods.construct import asymptotic_scan
from woods.construct import ball_volume_parts
from woods.construct import c_formula
from woods.construct import minkowski_hlawka_bound
from woods.construct import minkowski_lambda_bound
from woods.construct import mix_weights
from woods.construct import split_dimension
from woods.construct import threshold
from woods.covering import CoveringKind
from woods.enumeration import MinimalVectorSet
from woods.errors import ConstructionFailed
from woods.errors import WoodsError
from woods.lattice import BlockLattice
from woods.lattice import Covolume
from woods.lattice import covolume
from woods.scalar import MonomialScalar
from woods.scalar import Ordering3
from woods.scalar import ScalarSum
from woods.wellround import WellRoundedCertificate
from woods.wellround import well_rounded_certificate


LAMBDA15_LAM = MonomialScalar.prime_power(2, Fraction(7, 10))


def test_mix_weights_balance_the_minima() -> None:
    alpha1, alpha2 = mix_weights(15, 15, LAMBDA15_LAM)
    assert alpha1 == MonomialScalar.prime_power(2, Fraction(-7, 20))
    assert alpha2 == MonomialScalar.prime_power(2, Fraction(7, 20))
    assert (alpha1**15 * alpha2**15).is_one()
    assert LAMBDA15_LAM * alpha1 == alpha2
    with pytest.raises(ValueError):
        mix_weights(15, 0, LAMBDA15_LAM)
    with pytest.raises(ValueError):
        mix_weights(1, 1, MonomialScalar.of(-2))


def test_c_formula_closed_form() -> None:
    c_base = ScalarSum.of(MonomialScalar.of(7, {2: Fraction(2, 5)}))
    value = c_formula(c_base, LAMBDA15_LAM, 15, 15)
    expected = ScalarSum.of(
        MonomialScalar.of(7, {2: Fraction(-3, 10)}),
        MonomialScalar.of(15, {2: Fraction(7, 10)}),
    )
    assert value == expected
    assert c_formula(ScalarSum.of(3), MonomialScalar.one(), 3, 4) == ScalarSum.of(7)


def test_lambda15_crosses_at_thirty(engine: CounterexampleEngine) -> None:
    above = engine.assess("Lambda15", 30)
    assert (above.n, above.m) == (15, 15)
    assert above.verdict is Ordering3.GT
    assert above.margin.within(0.0533, 0.0534)
    below = engine.assess("Lambda15", 29)
    assert below.verdict is Ordering3.LT
    assert below.margin.sign() is Ordering3.LT


def test_integer_lattice_is_exactly_balanced(engine: CounterexampleEngine) -> None:
    assessment = engine.assess("Z", 5, 1)
    assert assessment.c_lambda == ScalarSum.of(5)
    assert assessment.verdict is Ordering3.EQ
    assert assessment.comparison.symbolic


def test_dimension_must_exceed_base(engine: CounterexampleEngine) -> None:
    with pytest.raises(ValueError):
        engine.assess("Lambda15", 15)


@pytest.mark.parametrize("name", ["Lambda15", "Lambda23", "BW16", "O23", "Leech"])
def test_thresholds_match_catalog(
    engine: CounterexampleEngine,
    catalog: Catalog,
    name: str,
) -> None:
    expected = catalog.entry(name).expected_threshold
    assert expected is not None
    result = engine.threshold(name, expected + 5)
    assert result.threshold == expected
    assert result.comparisons == 7
    assert all(sign is Ordering3.GT for _, sign in result.derivative)
    assert result.to_payload()["threshold"] == expected


def test_threshold_absent_below_crossing() -> None:
    result = threshold("Lambda15", 29)
    assert result.threshold is None
    assert result.comparisons == 1


def test_threshold_never_reached_for_integer_lattice(engine: CounterexampleEngine) -> None:
    result = engine.threshold("Z", 12, 3)
    assert result.threshold is None
    assert result.derivative[0][1] is Ordering3.EQ


@pytest.mark.parametrize("m", [1, 15, 100, 10_000])
def test_lambda15_derivative_is_positive(engine: CounterexampleEngine, m: int) -> None:
    sign, enclosure = engine.derivative_sign("Lambda15", m)
    assert sign is Ordering3.GT
    assert enclosure is not None and enclosure.sign() is Ordering3.GT


def test_build_mixed_d4(engine: CounterexampleEngine) -> None:
    report, lattice = engine.build("D4", 6)
    assert lattice.dim == 6
    assert report.c_lambda == ScalarSum.of(MonomialScalar.prime_power(2, Fraction(7, 3)))
    assert report.verdict is Ordering3.LT
    assert report.unimodular
    assert report.well_rounded.is_well_rounded
    assert report.covering.derivation.evaluate() == report.c_lambda
    assert report.base_kind is CoveringKind.LOWER_BOUND
    payload = report.to_payload()
    assert payload.verdict is Ordering3.LT
    assert payload.well_rounded_rank == 6
    assert payload.comparisons[-1].ordering is Ordering3.LT


def test_build_integer_lattice(engine: CounterexampleEngine) -> None:
    report, _ = engine.build("Z", 4, 2)
    assert report.alpha1.is_one() and report.alpha2.is_one()
    assert report.verdict is Ordering3.EQ
    assert report.lower_bound_note == "base covering constant is exact"


def test_best_construction_prefers_a_counterexample(engine: CounterexampleEngine) -> None:
    best = engine.best_construction(40)
    assert best is not None
    assert best.verdict is Ordering3.GT
    for entry in engine.catalog.bases():
        other = engine.assess(entry.name, 40).margin
        assert other.midpoint() <= best.margin.midpoint()
    assert engine.best_construction(10) is None


def test_ball_volume_parts() -> None:
    assert ball_volume_parts(1) == (Fraction(2), 0)
    assert ball_volume_parts(2) == (Fraction(1), 1)
    assert ball_volume_parts(3) == (Fraction(4, 3), 1)
    assert ball_volume_parts(4) == (Fraction(1, 2), 2)
    with pytest.raises(ValueError):
        ball_volume_parts(0)


def test_minkowski_bounds() -> None:
    assert minkowski_lambda_bound(2).within(1.12837, 1.12838)
    assert minkowski_lambda_bound(1).within(0.99999, 1.00001)
    assert minkowski_hlawka_bound(2).within(0.79788, 0.79789)


@pytest.mark.parametrize(("d", "m"), [(30, 8), (100, 21), (1000, 144)])
def test_split_dimension(d: int, m: int) -> None:
    assert split_dimension(d) == (m, d - m)


def test_scan_rows_are_sorted_and_unique(engine: CounterexampleEngine) -> None:
    rows = asymptotic_scan([200, 100, 100])
    assert [row.d for row in rows] == [100, 200]
    assert rows[0].c_lower.sign() is Ordering3.GT
    payload = rows[1].to_payload()
    assert payload.best_base is None
    assert payload.log_convention == "natural"

    with_catalog = asymptotic_scan([40], engine=engine)[0].to_payload()
    assert with_catalog.best_base in {"Lambda15", "Lambda23", "BW16", "O23", "Leech"}
    assert with_catalog.best_c is not None


def test_config_validation() -> None:
    with pytest.raises(ValueError):
        ConstructConfig(d_max=1)
    with pytest.raises(ValueError):
        ConstructConfig(max_bits=8)


@pytest.mark.slow
def test_build_lambda15_counterexample(engine: CounterexampleEngine) -> None:
    report, lattice = engine.build("Lambda15", 30)
    assert lattice.dim == 30
    assert report.verdict is Ordering3.GT
    assert report.unimodular
    assert report.well_rounded.is_well_rounded
    assert report.margin.within(0.0533, 0.0534)


def test_hermite_constants(engine: CounterexampleEngine) -> None:
    assert engine.hermite_constant("Leech") == MonomialScalar.of(4)
    assert engine.hermite_constant("Lambda15") == MonomialScalar.prime_power(2, Fraction(7, 5))
    assert engine.hermite_constant("Z", 7).is_one()


THRESHOLDS = [("Lambda15", 30), ("Lambda23", 31), ("BW16", 33), ("O23", 36), ("Leech", 38)]


@pytest.mark.parametrize(("name", "expected"), THRESHOLDS)
def test_verdict_flips_once_up_to_d_max(
    engine: CounterexampleEngine,
    name: str,
    expected: int,
) -> None:
    dim = engine.constants(name).dim
    for d in range(dim + 1, engine.config.d_max + 1):
        verdict = engine.assess(name, d).verdict
        assert verdict is (Ordering3.GT if d >= expected else Ordering3.LT), d
    assert engine.threshold(name).threshold == expected


@pytest.mark.parametrize(("d", "n"), [(3, 2), (4, 2), (5, 3), (6, 1)])
def test_built_integer_lattices_are_unimodular_and_well_rounded(
    engine: CounterexampleEngine,
    d: int,
    n: int,
) -> None:
    report, lattice = engine.build("Z", d, n)
    assert covolume(lattice).is_one()
    assert report.covolume.is_one()
    assert report.well_rounded.is_well_rounded
    assert report.well_rounded.rank_achieved == d


def test_build_rejects_a_lattice_that_is_not_well_rounded(
    engine: CounterexampleEngine,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    def deficient(lattice: BlockLattice, minimal: MinimalVectorSet) -> WellRoundedCertificate:
        certificate = well_rounded_certificate(lattice, minimal)
        return replace(
            certificate,
            is_well_rounded=False,
            rank_achieved=lattice.dim - 1,
            spanning_subset=(),
        )

    monkeypatch.setattr(engine_module, "well_rounded_certificate", deficient)
    with pytest.raises(ConstructionFailed) as info:
        engine.build("Z", 3, 2)
    assert info.value.check == "well_rounded"


def test_build_rejects_a_covolume_other_than_one(
    engine: CounterexampleEngine,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    monkeypatch.setattr(engine_module, "covolume", lambda lattice: Covolume(MonomialScalar.of(2)))
    with pytest.raises(ConstructionFailed) as info:
        engine.build("Z", 3, 2)
    assert info.value.check == "covolume"
    assert isinstance(info.value, WoodsError)
