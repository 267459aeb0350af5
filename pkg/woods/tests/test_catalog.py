from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest

from woods.catalog import PARAMETRIC_ZN
from woods.catalog import Catalog
from woods.catalog import canonical_checksum
from woods.catalog import load_gram_file
from woods.catalog import verify_entry
from woods.covering import CoveringKind
from woods.errors import CatalogFormatError
from woods.errors import ChecksumMismatch
from woods.errors import NotPositiveDefinite
from woods.errors import UnknownLattice
from woods.scalar import MonomialScalar
from woods.scalar import ScalarSum


A2_CHECKSUM = "47f3cc8c6e4c3208661d6fb767501d8eaf6db12f8b039928a84859da37e4ace1"


def _two(exponent: Fraction) -> MonomialScalar:
    return MonomialScalar.prime_power(2, exponent)


def _tamper_a2(data_dir: Path) -> None:
    path = data_dir / "A2.gram.json"
    payload = json.loads(path.read_text(encoding="utf-8"))
    payload["gram"][1][1] = 3
    path.write_text(json.dumps(payload), encoding="utf-8")


def test_index_lists_every_entry(catalog: Catalog) -> None:
    names = catalog.names()
    assert names[0] == PARAMETRIC_ZN
    assert set(names) == {"Z", "A2", "D4", "E8", "Lambda15", "BW16", "Lambda23", "O23", "Leech"}
    assert [entry.name for entry in catalog.bases()] == [
        "Lambda15",
        "Lambda23",
        "BW16",
        "O23",
        "Leech",
    ]


def test_entries(catalog: Catalog) -> None:
    entry = catalog.entry("Lambda15")
    assert entry.dim == 15
    assert entry.min_norm_std == 4
    assert entry.covering_kind is CoveringKind.LOWER_BOUND
    assert entry.expected_threshold == 30
    z = catalog.entry(PARAMETRIC_ZN, 6)
    assert z.parametric
    assert z.kissing_number == 12
    with pytest.raises(UnknownLattice) as info:
        catalog.entry("Nope")
    assert str(info.value) == "unknown lattice: Nope"
    with pytest.raises(ValueError):
        catalog.entry(PARAMETRIC_ZN)


def test_canonical_checksum_normalizes_entries() -> None:
    assert canonical_checksum("A2", 2, [[2, 1], [1, 2]]) == A2_CHECKSUM
    assert canonical_checksum("A2", 2, [["2", "1"], [Fraction(1), "4/2"]]) == A2_CHECKSUM


@pytest.mark.parametrize(
    ("name", "dim", "determinant"),
    [
        ("A2", 2, 3),
        ("D4", 4, 4),
        ("E8", 8, 1),
        ("Lambda15", 15, 512),
        ("BW16", 16, 256),
        ("Lambda23", 23, 4),
        ("O23", 23, 1),
        ("Leech", 24, 1),
    ],
)
def test_shipped_grams_load(catalog: Catalog, name: str, dim: int, determinant: int) -> None:
    block = catalog.block(name)
    assert block.dim == dim
    assert block.determinant() == determinant
    assert block.label == name


@pytest.mark.parametrize(
    ("name", "lambda_sq", "covering"),
    [
        ("Lambda15", _two(Fraction(7, 5)), MonomialScalar.of(7, {2: Fraction(2, 5)})),
        ("BW16", _two(Fraction(3, 2)), MonomialScalar.of(6, {2: Fraction(1, 2)})),
        ("Lambda23", _two(Fraction(44, 23)), MonomialScalar.of(15, {2: Fraction(-2, 23)})),
        ("O23", MonomialScalar.of(3), MonomialScalar.of(15)),
        ("Leech", MonomialScalar.of(4), MonomialScalar.of(8)),
    ],
)
def test_unimodular_constants(
    catalog: Catalog,
    name: str,
    lambda_sq: MonomialScalar,
    covering: MonomialScalar,
) -> None:
    constants = catalog.unimodular(name)
    assert constants.lambda_sq == lambda_sq
    assert constants.covering.c == ScalarSum.of(covering)


def test_integer_lattice_constants(catalog: Catalog) -> None:
    constants = catalog.unimodular(PARAMETRIC_ZN, 4)
    assert constants.lambda_sq.is_one()
    assert constants.covering.c == ScalarSum.of(4)
    assert constants.covering.kind is CoveringKind.EXACT
    assert catalog.lattice(PARAMETRIC_ZN, 4).dim == 4


def test_witness_files(catalog: Catalog) -> None:
    witness = catalog.witness("A2")
    assert witness is not None
    assert witness.point == (Fraction(1, 3), Fraction(1, 3))
    assert witness.claimed == ScalarSum.of(Fraction(8, 3))
    lambda15 = catalog.witness("Lambda15")
    assert lambda15 is not None
    assert lambda15.claimed == ScalarSum.of(14)
    assert len(lambda15.point) == 15


def test_tampered_gram_is_rejected(data_copy: Path) -> None:
    _tamper_a2(data_copy)
    with pytest.raises(ChecksumMismatch):
        load_gram_file(data_copy / "A2.gram.json")
    with pytest.raises(ChecksumMismatch):
        Catalog(data_copy).lattice("A2")


def test_manifest_catches_edits_with_recomputed_checksum(data_copy: Path) -> None:
    path = data_copy / "A2.gram.json"
    payload = json.loads(path.read_text(encoding="utf-8"))
    path.write_text(json.dumps(payload, indent=4), encoding="utf-8")
    assert load_gram_file(path).determinant() == 3
    with pytest.raises(ChecksumMismatch):
        Catalog(data_copy).lattice("A2")


def test_bad_files(tmp_path: Path) -> None:
    with pytest.raises(UnknownLattice):
        load_gram_file(tmp_path / "missing.gram.json")

    broken = tmp_path / "broken.gram.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(CatalogFormatError):
        load_gram_file(broken)

    ragged = tmp_path / "ragged.gram.json"
    ragged.write_text(
        json.dumps({"name": "R", "dim": 2, "gram": [[1, 0]], "checksum": "0" * 64}),
        encoding="utf-8",
    )
    with pytest.raises(CatalogFormatError):
        load_gram_file(ragged)

    indefinite = tmp_path / "bad.gram.json"
    gram = [[1, 2], [2, 1]]
    indefinite.write_text(
        json.dumps(
            {"name": "Bad", "dim": 2, "gram": gram, "checksum": canonical_checksum("Bad", 2, gram)}
        ),
        encoding="utf-8",
    )
    with pytest.raises(NotPositiveDefinite):
        load_gram_file(indefinite)


def test_missing_index(tmp_path: Path) -> None:
    with pytest.raises(CatalogFormatError):
        Catalog(tmp_path).names()


def test_data_dir_from_environment(data_copy: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("WOODS_DATA_DIR", str(data_copy))
    assert Catalog().data_dir == data_copy


@pytest.mark.parametrize("name", ["A2", "D4", "E8"])
def test_verify_root_lattices(catalog: Catalog, name: str) -> None:
    report = verify_entry(name, catalog)
    assert report.passed, report.to_payload()
    assert [check.name for check in report.checks] == [
        "checksum",
        "positive_definite",
        "min_norm",
        "kissing_number",
        "well_rounded",
        "generated_by_minimal_vectors",
        "covering_witness",
        "unimodular_lambda",
    ]


def test_verify_integer_lattice(catalog: Catalog) -> None:
    report = verify_entry(PARAMETRIC_ZN, catalog, n=3)
    assert report.passed
    assert report.dim == 3
    witness = report.check("covering_witness")
    assert witness is not None and witness.passed


def test_verify_reports_tampering(data_copy: Path) -> None:
    _tamper_a2(data_copy)
    report = verify_entry("A2", Catalog(data_copy))
    assert not report.passed
    checksum = report.check("checksum")
    assert checksum is not None and not checksum.passed
    assert "ChecksumMismatch" in checksum.detail
    assert report.to_payload()["passed"] is False


@pytest.mark.slow
@pytest.mark.parametrize("name", ["Lambda15", "BW16", "Lambda23", "O23", "Leech"])
def test_verify_laminated_and_leech(catalog: Catalog, name: str) -> None:
    report = verify_entry(name, catalog)
    assert report.passed, report.to_payload()
    if name in ("Lambda15", "Leech"):
        generated = report.check("generated_by_minimal_vectors")
        assert generated is not None and generated.passed
