"""Block-diagonal lattices with exact Gram data."""

from __future__ import annotations

from .block import BlockLattice
from .block import Covolume
from .block import FullGram
from .block import covolume
from .block import direct_sum
from .block import is_unimodular
from .block import scale_lattice
from .block import unimodular_normalize
from .gram import GramBlock


__all__ = [
    "BlockLattice",
    "Covolume",
    "FullGram",
    "GramBlock",
    "covolume",
    "direct_sum",
    "is_unimodular",
    "scale_lattice",
    "unimodular_normalize",
]
