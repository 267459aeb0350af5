"""Command line surface over every toolkit operation."""

from __future__ import annotations

from .config import CliConfig
from .config import OutputFormat
from .output import render


__all__ = ["CliConfig", "OutputFormat", "render"]
