"""Named lattices shipped as data, with checksums and self-verification."""

from __future__ import annotations

from .store import PARAMETRIC_ZN
from .store import Catalog
from .store import CatalogEntry
from .store import UnimodularConstants
from .store import Witness
from .store import canonical_checksum
from .store import load_gram_file
from .verify import VerificationCheck
from .verify import VerificationReport
from .verify import verify_entry


__all__ = [
    "Catalog",
    "CatalogEntry",
    "PARAMETRIC_ZN",
    "UnimodularConstants",
    "VerificationCheck",
    "VerificationReport",
    "Witness",
    "canonical_checksum",
    "load_gram_file",
    "verify_entry",
]
