"""Well-roundedness predicates on block lattices."""

from __future__ import annotations

from .hnf import IntegerLattice
from .hnf import sublattice_index
from .predicates import WellRoundedCertificate
from .predicates import generated_by_minimal_vectors
from .predicates import is_well_rounded
from .predicates import well_rounded_certificate


__all__ = [
    "IntegerLattice",
    "WellRoundedCertificate",
    "generated_by_minimal_vectors",
    "is_well_rounded",
    "sublattice_index",
    "well_rounded_certificate",
]
