"""Counterexample constructions, thresholds and the asymptotic scan."""

from __future__ import annotations

from .asymptotic import ScanRow
from .asymptotic import asymptotic_scan
from .asymptotic import ball_volume_parts
from .asymptotic import minkowski_hlawka_bound
from .asymptotic import minkowski_lambda_bound
from .asymptotic import scan_row
from .asymptotic import split_dimension
from .config import ConstructConfig
from .engine import Assessment
from .engine import CounterexampleEngine
from .engine import ThresholdResult
from .engine import build
from .engine import c_formula
from .engine import derivative_sign
from .engine import mix_weights
from .engine import threshold
from .report import ConstructionPayload
from .report import ConstructionReport
from .report import ScanRowPayload
from .report import ThresholdRow


__all__ = [
    "Assessment",
    "ConstructConfig",
    "ConstructionPayload",
    "ConstructionReport",
    "CounterexampleEngine",
    "ScanRow",
    "ScanRowPayload",
    "ThresholdResult",
    "ThresholdRow",
    "asymptotic_scan",
    "ball_volume_parts",
    "build",
    "c_formula",
    "derivative_sign",
    "minkowski_hlawka_bound",
    "minkowski_lambda_bound",
    "mix_weights",
    "scan_row",
    "split_dimension",
    "threshold",
]
