"""Loading named lattices and their constants from the packaged data directory."""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from woods.catalog.schemas import CatalogIndex
from woods.catalog.schemas import CatalogIndexEntry
from woods.catalog.schemas import GramFile
from woods.catalog.schemas import WitnessFile
from woods.covering import CoveringKind
from woods.covering import CoveringValue
from woods.covering import covering_catalog
from woods.covering import covering_scale
from woods.covering import covering_Zn
from woods.errors import CatalogFormatError
from woods.errors import ChecksumMismatch
from woods.errors import UnknownLattice
from woods.lattice import BlockLattice
from woods.lattice import GramBlock
from woods.lattice.linalg import to_fraction
from woods.scalar import MonomialScalar
from woods.scalar import ScalarSum
from woods.scalar import rpow


logger = logging.getLogger(__name__)

PACKAGE_DATA_DIR = Path(__file__).resolve().parent / "data"
DATA_DIR_ENV = "WOODS_DATA_DIR"
INDEX_FILE = "catalog.json"
MANIFEST_FILE = "MANIFEST.sha256"
PARAMETRIC_ZN = "Z"


def default_data_dir() -> Path:
    return Path(os.getenv(DATA_DIR_ENV, str(PACKAGE_DATA_DIR)))


def _entry_text(value: Fraction) -> int | str:
    return value.numerator if value.denominator == 1 else str(value)


def canonical_checksum(name: str, dim: int, gram: Sequence[Sequence[object]]) -> str:
    """SHA-256 of the sorted-key compact JSON of name, dim and the normalized Gram entries."""

    rows = [[_entry_text(to_fraction(value)) for value in row] for row in gram]
    text = json.dumps(
        {"name": name, "dim": dim, "gram": rows}, sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def file_sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _read_json(path: Path) -> object:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CatalogFormatError(f"{path.name} is not valid JSON: {exc}") from exc


def load_gram_file(path: Path | str, expected_name: str | None = None) -> GramBlock:
    """Parse a ``*.gram.json`` file, check its embedded checksum and build the block."""

    path = Path(path)
    if not path.is_file():
        raise UnknownLattice(str(path))
    try:
        data = GramFile.model_validate(_read_json(path))
    except ValidationError as exc:
        raise CatalogFormatError(f"{path.name}: {exc}") from exc
    if expected_name is not None and data.name != expected_name:
        raise CatalogFormatError(f"{path.name} holds lattice {data.name!r}, not {expected_name!r}")
    digest = canonical_checksum(data.name, data.dim, data.gram)
    if digest != data.checksum:
        raise ChecksumMismatch(f"{path.name}: stored checksum does not match the Gram matrix")
    return GramBlock.from_rows(data.gram, label=data.name)


@dataclass(frozen=True, slots=True)
class CatalogEntry:
    name: str
    dim: int
    gram_file: str | None
    min_norm_std: Fraction
    covering_c_std: ScalarSum
    covering_kind: CoveringKind
    witness_file: str | None
    provenance: str
    kissing_number: int | None = None
    generated_by_minimal_vectors: bool = False
    expected_threshold: int | None = None
    slow: bool = False

    @property
    def parametric(self) -> bool:
        return self.gram_file is None

    @classmethod
    def from_index(cls, raw: CatalogIndexEntry) -> CatalogEntry:
        return cls(
            name=raw.name,
            dim=raw.dim,
            gram_file=raw.gram_file,
            min_norm_std=Fraction(raw.min_norm_std),
            covering_c_std=ScalarSum.from_payload(raw.covering_c_std.model_dump()),
            covering_kind=CoveringKind(raw.covering_kind),
            witness_file=raw.witness_file,
            provenance=raw.provenance,
            kissing_number=raw.kissing_number,
            generated_by_minimal_vectors=raw.generated_by_minimal_vectors,
            expected_threshold=raw.expected_threshold,
            slow=raw.slow,
        )

    @classmethod
    def zn(cls, n: int) -> CatalogEntry:
        if n < 1:
            raise ValueError("Z needs n >= 1")
        return cls(
            name=PARAMETRIC_ZN,
            dim=n,
            gram_file=None,
            min_norm_std=Fraction(1),
            covering_c_std=ScalarSum.of(n),
            covering_kind=CoveringKind.EXACT,
            witness_file=None,
            provenance="integer lattice; deep hole (1/2, ..., 1/2)",
            kissing_number=2 * n,
            generated_by_minimal_vectors=True,
        )


@dataclass(frozen=True, slots=True)
class Witness:
    lattice: str
    point: tuple[Fraction, ...]
    claimed: ScalarSum
    seed: int
    source: str


@dataclass(frozen=True, slots=True)
class UnimodularConstants:
    """Minimum and covering constant after rescaling to covolume one."""

    name: str
    dim: int
    lambda_sq: MonomialScalar
    covering: CoveringValue

    @property
    def lam(self) -> MonomialScalar:
        return rpow(self.lambda_sq, Fraction(1, 2))


class Catalog:
    """Read-only view of the named lattices shipped in a data directory."""

    def __init__(self, data_dir: Path | str | None = None) -> None:
        self.data_dir = Path(data_dir) if data_dir is not None else default_data_dir()
        self._blocks: dict[str, GramBlock] = {}

    @cached_property
    def _index(self) -> dict[str, CatalogEntry]:
        path = self.data_dir / INDEX_FILE
        if not path.is_file():
            raise CatalogFormatError(f"no {INDEX_FILE} in {self.data_dir}")
        try:
            index = CatalogIndex.model_validate(_read_json(path))
        except ValidationError as exc:
            raise CatalogFormatError(f"{INDEX_FILE}: {exc}") from exc
        logger.info("loaded %d catalog entries from %s", len(index.entries), self.data_dir)
        return {raw.name: CatalogEntry.from_index(raw) for raw in index.entries}

    @cached_property
    def _manifest(self) -> dict[str, str]:
        path = self.data_dir / MANIFEST_FILE
        if not path.is_file():
            return {}
        digests: dict[str, str] = {}
        for line in path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            digest, _, filename = line.partition("  ")
            digests[filename.strip()] = digest.strip()
        return digests

    def names(self) -> list[str]:
        return [PARAMETRIC_ZN, *self._index]

    def entry(self, name: str, n: int | None = None) -> CatalogEntry:
        if name == PARAMETRIC_ZN:
            if n is None:
                raise ValueError("the parametric entry Z needs a dimension n")
            return CatalogEntry.zn(n)
        try:
            return self._index[name]
        except KeyError:
            raise UnknownLattice(name) from None

    def bases(self) -> list[CatalogEntry]:
        """Entries with a published construction threshold, in threshold order."""

        entries = [e for e in self._index.values() if e.expected_threshold is not None]
        return sorted(entries, key=lambda e: (e.expected_threshold, e.name))

    def check_manifest(self, filename: str) -> None:
        expected = self._manifest.get(filename)
        if expected is None:
            return
        if file_sha256(self.data_dir / filename) != expected:
            raise ChecksumMismatch(f"{filename} does not match {MANIFEST_FILE}")

    def block(self, name: str) -> GramBlock:
        entry = self.entry(name)
        if entry.gram_file is None:
            raise ValueError(f"{name} is parametric")
        if name not in self._blocks:
            self.check_manifest(entry.gram_file)
            block = load_gram_file(self.data_dir / entry.gram_file, expected_name=name)
            if block.dim != entry.dim:
                raise CatalogFormatError(f"{name}: index says dim {entry.dim}, file {block.dim}")
            self._blocks[name] = block
        return self._blocks[name]

    def get(self, name: str, n: int | None = None) -> tuple[CatalogEntry, BlockLattice]:
        """Entry plus lattice at the stored scale; loading validates checksums and the Gram."""

        entry = self.entry(name, n)
        if entry.parametric:
            return entry, BlockLattice.zn(entry.dim)
        return entry, BlockLattice.single(self.block(name))

    def lattice(self, name: str, n: int | None = None) -> BlockLattice:
        return self.get(name, n)[1]

    def witness(self, name: str) -> Witness | None:
        entry = self.entry(name)
        if entry.witness_file is None:
            return None
        self.check_manifest(entry.witness_file)
        path = self.data_dir / entry.witness_file
        try:
            data = WitnessFile.model_validate(_read_json(path))
        except ValidationError as exc:
            raise CatalogFormatError(f"{entry.witness_file}: {exc}") from exc
        if data.lattice != name or len(data.point) != entry.dim:
            raise CatalogFormatError(f"{entry.witness_file} does not fit lattice {name}")
        return Witness(
            lattice=data.lattice,
            point=tuple(Fraction(x) for x in data.point),
            claimed=ScalarSum.from_payload(data.claimed_c.model_dump()),
            seed=data.seed,
            source=data.source,
        )

    def covering_value(self, name: str, n: int | None = None) -> CoveringValue:
        """Covering constant at the stored scale."""

        entry = self.entry(name, n)
        if entry.parametric:
            return covering_Zn(entry.dim)
        return covering_catalog(entry.covering_c_std, entry.covering_kind, entry.provenance)

    def unimodular(self, name: str, n: int | None = None) -> UnimodularConstants:
        """Rescale by ``det^(-1/dim)`` on the form so the covolume becomes one."""

        entry = self.entry(name, n)
        if entry.parametric:
            determinant = Fraction(1)
        else:
            determinant = self.block(name).determinant()
        factor = rpow(MonomialScalar.of(determinant), Fraction(-1, entry.dim))
        lambda_sq = factor * entry.min_norm_std
        covering = covering_scale(self.covering_value(name, n), rpow(factor, Fraction(1, 2)))
        return UnimodularConstants(entry.name, entry.dim, lambda_sq, covering)
