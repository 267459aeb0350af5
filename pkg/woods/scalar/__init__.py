"""Exact monomial scalars, their sums, and certified interval comparison."""

from __future__ import annotations

from .config import DEFAULT_SCALAR_CONFIG
from .config import ScalarConfig
from .interval import ComparisonRecord
from .interval import FloatInterval
from .interval import IntervalEvaluator
from .interval import Ordering3
from .interval import certified_sign
from .interval import certify_comparison
from .interval import compare
from .interval import interval_log
from .interval import replay
from .interval import to_float_interval
from .monomial import MonomialScalar
from .monomial import factor_integer
from .monomial import mul
from .monomial import rpow
from .sums import ScalarSum


__all__ = [
    "ComparisonRecord",
    "DEFAULT_SCALAR_CONFIG",
    "FloatInterval",
    "IntervalEvaluator",
    "MonomialScalar",
    "Ordering3",
    "ScalarConfig",
    "ScalarSum",
    "certified_sign",
    "certify_comparison",
    "compare",
    "factor_integer",
    "interval_log",
    "mul",
    "replay",
    "rpow",
    "to_float_interval",
]
