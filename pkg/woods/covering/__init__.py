"""Covering radius algebra, witness certificates and deep hole search."""

from __future__ import annotations

from .certify import CoveringCertificate
from .certify import certify_lower_bound
from .certify import covering_radius_lower_bound
from .deep_hole import DeepHoleConfig
from .deep_hole import DeepHoleResult
from .deep_hole import DeepHoleSearch
from .deep_hole import deep_hole_search
from .values import CoveringKind
from .values import CoveringValue
from .values import Derivation
from .values import DerivationRule
from .values import covering_catalog
from .values import covering_neutral
from .values import covering_scale
from .values import covering_sum
from .values import covering_witness
from .values import covering_Zn


__all__ = [
    "CoveringCertificate",
    "CoveringKind",
    "CoveringValue",
    "DeepHoleConfig",
    "DeepHoleResult",
    "DeepHoleSearch",
    "Derivation",
    "DerivationRule",
    "certify_lower_bound",
    "covering_Zn",
    "covering_catalog",
    "covering_neutral",
    "covering_radius_lower_bound",
    "covering_scale",
    "covering_sum",
    "covering_witness",
    "deep_hole_search",
]
