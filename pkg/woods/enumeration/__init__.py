"""Exact shortest and closest vector enumeration."""

from __future__ import annotations

from .config import DEFAULT_ENUMERATION_CONFIG
from .config import EnumerationConfig
from .fincke_pohst import BlockClosest
from .fincke_pohst import BlockMinimum
from .fincke_pohst import EnumerationStats
from .fincke_pohst import block_closest_vectors
from .fincke_pohst import block_points_within
from .fincke_pohst import block_shortest_vectors
from .reduction import lll_reduce_gram
from .reduction import reduce_basis
from .search import CvpResult
from .search import MinimalVectorSet
from .search import closest_vectors
from .search import kissing_number
from .search import minimum_norm
from .search import shortest_vectors


__all__ = [
    "BlockClosest",
    "BlockMinimum",
    "CvpResult",
    "DEFAULT_ENUMERATION_CONFIG",
    "EnumerationConfig",
    "EnumerationStats",
    "MinimalVectorSet",
    "block_closest_vectors",
    "block_points_within",
    "block_shortest_vectors",
    "closest_vectors",
    "kissing_number",
    "lll_reduce_gram",
    "minimum_norm",
    "reduce_basis",
    "shortest_vectors",
]
