"""Exception hierarchy shared by every sub-package."""

from __future__ import annotations


class WoodsError(Exception):
    """Base class for all errors raised by the toolkit."""


class NonRepresentablePower(WoodsError, ValueError):
    """A power or root leaves the monomial class within the factoring bound."""


class UndecidedComparison(WoodsError, RuntimeError):
    """Two scalars could not be separated or proven equal at the precision limit."""

    def __init__(self, message: str, bits: int) -> None:
        super().__init__(f"{message} (undecided at {bits} bits)")
        self.bits = bits


class UnknownLattice(WoodsError, KeyError):
    def __str__(self) -> str:
        return f"unknown lattice: {self.args[0]}"


class ChecksumMismatch(WoodsError, ValueError):
    """A data file does not match its recorded SHA-256 checksum."""


class NotPositiveDefinite(WoodsError, ValueError):
    """A Gram matrix has a nonpositive leading principal minor or is not symmetric."""


class EnumerationBudgetExceeded(WoodsError, RuntimeError):
    def __init__(self, budget: int) -> None:
        super().__init__(f"enumeration exceeded the node budget of {budget}")
        self.budget = budget


class CatalogFormatError(WoodsError, ValueError):
    """A catalog, lattice or witness file is malformed."""


class ConstructionFailed(WoodsError, RuntimeError):
    """A built lattice fails one of the checks its verdict depends on."""

    def __init__(self, check: str, message: str) -> None:
        super().__init__(f"{check}: {message}")
        self.check = check
