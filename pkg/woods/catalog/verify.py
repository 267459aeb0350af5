"""Self-verification of catalog entries: every stored constant is recomputed or certified."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any
from typing import Callable

from woods.catalog.store import Catalog
from woods.catalog.store import CatalogEntry
from woods.covering import certify_lower_bound
from woods.enumeration import DEFAULT_ENUMERATION_CONFIG
from woods.enumeration import EnumerationConfig
from woods.enumeration import MinimalVectorSet
from woods.enumeration import shortest_vectors
from woods.errors import NotPositiveDefinite
from woods.errors import WoodsError
from woods.lattice import BlockLattice
from woods.scalar import ScalarSum
from woods.wellround import sublattice_index
from woods.wellround import well_rounded_certificate


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class VerificationCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True, slots=True)
class VerificationReport:
    lattice: str
    dim: int
    checks: tuple[VerificationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> VerificationCheck | None:
        return next((c for c in self.checks if c.name == name), None)

    def to_payload(self) -> dict[str, Any]:
        return {
            "lattice": self.lattice,
            "dim": self.dim,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


class _Checks:
    def __init__(self) -> None:
        self.items: list[VerificationCheck] = []

    def run(self, name: str, body: Callable[[], tuple[bool, str]]) -> bool:
        try:
            passed, detail = body()
        except (WoodsError, ValueError) as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        return self.record(name, passed, detail)

    def record(self, name: str, passed: bool, detail: str) -> bool:
        self.items.append(VerificationCheck(name, passed, detail))
        log = logger.info if passed else logger.warning
        log("%s: %s (%s)", name, "pass" if passed else "FAIL", detail)
        return passed


def verify_entry(
    name: str,
    catalog: Catalog | None = None,
    *,
    n: int | None = None,
    config: EnumerationConfig = DEFAULT_ENUMERATION_CONFIG,
) -> VerificationReport:
    """Run every applicable check; failures are collected, not raised."""

    catalog = catalog or Catalog()
    entry = catalog.entry(name, n)
    checks = _Checks()
    loaded: dict[str, Any] = {}
    try:
        _, lattice = catalog.get(name, n)
    except NotPositiveDefinite as exc:
        checks.record("checksum", True, "embedded checksum and manifest match")
        checks.record("positive_definite", False, str(exc))
        return VerificationReport(entry.name, entry.dim, tuple(checks.items))
    except WoodsError as exc:
        checks.record("checksum", False, f"{type(exc).__name__}: {exc}")
        return VerificationReport(entry.name, entry.dim, tuple(checks.items))
    source = "generated" if entry.parametric else "embedded checksum and manifest match"
    checks.record("checksum", True, source)
    checks.record("positive_definite", True, "all leading principal minors positive")

    def min_norm() -> tuple[bool, str]:
        minimal = shortest_vectors(lattice, config)
        loaded["minimal"] = minimal
        found = minimal.lambda1_sq
        ok = found == ScalarSum.of(entry.min_norm_std)
        return ok, f"lambda1^2 = {found}, stored {entry.min_norm_std}"

    if checks.run("min_norm", min_norm):
        minimal: MinimalVectorSet = loaded["minimal"]
        _structure_checks(checks, entry, lattice, minimal)
    _witness_check(checks, catalog, entry, lattice, config)

    def unimodular_lambda() -> tuple[bool, str]:
        constants = catalog.unimodular(name, n)
        return True, f"unimodular lambda1^2 = {constants.lambda_sq}, C >= {constants.covering.c}"

    checks.run("unimodular_lambda", unimodular_lambda)
    report = VerificationReport(entry.name, entry.dim, tuple(checks.items))
    logger.info("verification of %s: %s", entry.name, "passed" if report.passed else "FAILED")
    return report


def _structure_checks(
    checks: _Checks,
    entry: CatalogEntry,
    lattice: BlockLattice,
    minimal: MinimalVectorSet,
) -> None:
    if entry.kissing_number is not None:
        checks.run(
            "kissing_number",
            lambda: (
                minimal.kissing_number == entry.kissing_number,
                f"{minimal.kissing_number} minimal vectors, stored {entry.kissing_number}",
            ),
        )

    def rounded() -> tuple[bool, str]:
        certificate = well_rounded_certificate(lattice, minimal)
        return certificate.is_well_rounded, f"rank {certificate.rank_achieved} of {lattice.dim}"

    checks.run("well_rounded", rounded)
    if entry.generated_by_minimal_vectors:

        def generated() -> tuple[bool, str]:
            index = sublattice_index(minimal.vectors, lattice.dim)
            return index == 1, f"index of the generated sublattice: {index}"

        checks.run("generated_by_minimal_vectors", generated)


def _witness_check(
    checks: _Checks,
    catalog: Catalog,
    entry: CatalogEntry,
    lattice: BlockLattice,
    config: EnumerationConfig,
) -> None:
    if entry.parametric:

        def half_ones() -> tuple[bool, str]:
            certificate = certify_lower_bound(
                lattice, ["1/2"] * entry.dim, entry.covering_c_std, config=config
            )
            return certificate.verified, f"4*dist^2 at (1/2, ..., 1/2) = {entry.covering_c_std}"

        checks.run("covering_witness", half_ones)
        return
    if entry.witness_file is None:
        return

    def witness() -> tuple[bool, str]:
        stored = catalog.witness(entry.name)
        if stored is None:
            return False, "witness file missing"
        if stored.claimed != entry.covering_c_std:
            return False, f"witness claims {stored.claimed}, index stores {entry.covering_c_std}"
        certificate = certify_lower_bound(
            lattice, stored.point, stored.claimed, lattice_ref=entry.name, config=config
        )
        four = ScalarSum.zero() if certificate.dist_sq is None else certificate.dist_sq * 4
        return certificate.verified, f"4*dist^2 = {four} against claimed {stored.claimed}"

    checks.run("covering_witness", witness)
