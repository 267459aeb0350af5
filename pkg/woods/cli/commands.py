"""Subcommand implementations; each returns a payload plus its pretty rendering."""

from __future__ import annotations

import argparse
import logging
import re
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from pathlib import Path
from typing import Callable
from typing import Sequence

from pydantic import BaseModel

from woods.catalog import PARAMETRIC_ZN
from woods.catalog import Catalog
from woods.catalog import VerificationReport
from woods.catalog import load_gram_file
from woods.catalog import verify_entry
from woods.catalog.schemas import ScalarPayload
from woods.cli.config import CliConfig
from woods.cli.output import CatalogRow
from woods.cli.output import CheckPayload
from woods.cli.output import CoveringCertPayload
from woods.cli.output import CvpPayload
from woods.cli.output import DeepHolePayload
from woods.cli.output import SvpPayload
from woods.cli.output import VerificationPayload
from woods.cli.output import WellRoundedPayload
from woods.cli.output import certified
from woods.cli.output import exact_text
from woods.construct import ConstructConfig
from woods.construct import CounterexampleEngine
from woods.construct import ThresholdRow
from woods.construct import asymptotic_scan
from woods.construct.report import comparison_payload
from woods.construct.report import interval_payload
from woods.covering import DeepHoleSearch
from woods.covering import certify_lower_bound
from woods.covering import covering_radius_lower_bound
from woods.enumeration import closest_vectors
from woods.enumeration import shortest_vectors
from woods.lattice import BlockLattice
from woods.scalar import MonomialScalar
from woods.scalar import Ordering3
from woods.scalar import ScalarSum
from woods.scalar import to_float_interval
from woods.wellround import generated_by_minimal_vectors
from woods.wellround import well_rounded_certificate


logger = logging.getLogger(__name__)

_POWER = re.compile(r"^(\d+)\^\(?(-?\d+(?:/\d+)?)\)?$")


@dataclass(slots=True)
class CommandResult:
    payload: BaseModel | list[BaseModel]
    pretty: list[str] = field(default_factory=list)
    exit_code: int = 0


Command = Callable[[argparse.Namespace, CliConfig], CommandResult]


def parse_rationals(text: str) -> tuple[Fraction, ...]:
    """Comma separated ``p/q`` values."""

    try:
        return tuple(Fraction(part.strip()) for part in text.split(",") if part.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rationals from {text!r}") from exc


def _parse_term(text: str) -> MonomialScalar:
    coeff = Fraction(1)
    factors: dict[int, Fraction] = {}
    for part in text.split("*"):
        part = part.strip()
        match = _POWER.match(part)
        if match:
            base = int(match.group(1))
            factors[base] = factors.get(base, Fraction(0)) + Fraction(match.group(2))
        else:
            coeff *= Fraction(part)
    return MonomialScalar.of(coeff, factors)


def parse_scalar(text: str) -> ScalarSum:
    """Sums of monomials written as ``7*2^(2/5)``, ``15*2^(-2/23) + 1`` or ``8/3``."""

    normalized = re.sub(r"(?<=[^\s(^/*])\s*-\s*", " + -", text.strip())
    try:
        terms = [_parse_term(term) for term in normalized.split("+") if term.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc
    if not terms:
        raise ValueError("empty scalar")
    return ScalarSum.of(*terms)


def resolve_lattice(
    reference: str,
    n: int | None,
    catalog: Catalog,
) -> tuple[str, BlockLattice]:
    """Catalog name, ``Z`` with ``n``, or a path to a ``*.gram.json`` file."""

    if reference.endswith(".json") or Path(reference).is_file():
        block = load_gram_file(reference)
        return block.label or Path(reference).stem, BlockLattice.single(block)
    lattice = catalog.lattice(reference, n)
    name = f"Z^{n}" if reference == PARAMETRIC_ZN else reference
    return name, lattice


def _catalog(config: CliConfig) -> Catalog:
    return Catalog(config.data_dir)


def _engine(config: CliConfig) -> CounterexampleEngine:
    construct = ConstructConfig(max_bits=config.precision_bits, enumeration=config.enumeration)
    return CounterexampleEngine(_catalog(config), construct)


def _strings(values: Sequence[Fraction]) -> list[str]:
    return [str(value) for value in values]


def cmd_svp(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    name, lattice = resolve_lattice(args.lattice, args.n, _catalog(config))
    minimal = shortest_vectors(lattice, config.enumeration)
    payload = SvpPayload(
        lattice=name,
        dim=lattice.dim,
        lambda1_sq=ScalarPayload.model_validate(minimal.lambda1_sq.to_payload()),
        lambda1_sq_text=exact_text(minimal.lambda1_sq),
        kissing_number=minimal.kissing_number,
        blocks=list(minimal.blocks),
        vectors=[list(v) for v in minimal.vectors],
        comparisons=[comparison_payload(record) for record in minimal.comparisons],
    )
    pretty = [f"lambda1_sq = {payload.lambda1_sq_text}, kissing = {payload.kissing_number}"]
    return CommandResult(payload, pretty)


def cmd_cvp(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    name, lattice = resolve_lattice(args.lattice, args.n, _catalog(config))
    target = parse_rationals(args.target)
    result = closest_vectors(lattice, target, config.enumeration)
    closest = list(result.iter_closest()) if result.count <= args.max_points else []
    payload = CvpPayload(
        lattice=name,
        target=_strings(target),
        dist_sq=ScalarPayload.model_validate(result.dist_sq.to_payload()),
        dist_sq_text=exact_text(result.dist_sq),
        count=result.count,
        closest=[list(v) for v in closest],
    )
    pretty = [f"dist_sq = {payload.dist_sq_text}, closest points = {result.count}"]
    pretty.extend(" ".join(str(x) for x in point) for point in closest[:10])
    return CommandResult(payload, pretty)


def cmd_wellrounded(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    name, lattice = resolve_lattice(args.lattice, args.n, _catalog(config))
    minimal = shortest_vectors(lattice, config.enumeration)
    certificate = well_rounded_certificate(lattice, minimal)
    generated = generated_by_minimal_vectors(lattice, config.enumeration)
    payload = WellRoundedPayload(
        lattice=name,
        dim=lattice.dim,
        is_well_rounded=certificate.is_well_rounded,
        rank_achieved=certificate.rank_achieved,
        generated_by_minimal_vectors=generated,
        lambda1_sq_text=exact_text(certificate.lambda1_sq),
        spanning_subset=[list(v) for v in certificate.spanning_subset],
    )
    pretty = [
        f"well_rounded: {str(payload.is_well_rounded).lower()} "
        f"(rank {payload.rank_achieved} of {payload.dim})",
        f"generated_by_minimal_vectors: {str(generated).lower()}",
    ]
    return CommandResult(payload, pretty)


def cmd_covering_cert(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    catalog = _catalog(config)
    name, lattice = resolve_lattice(args.lattice, args.n, catalog)
    if args.witness is not None:
        if args.claimed is None:
            raise ValueError("--witness needs --claimed")
        point = parse_rationals(args.witness)
        claimed = parse_scalar(args.claimed)
    else:
        stored = catalog.witness(args.lattice)
        if stored is None:
            raise ValueError(f"{args.lattice} has no stored witness; pass --witness and --claimed")
        point = stored.point
        claimed = parse_scalar(args.claimed) if args.claimed is not None else stored.claimed
    certificate = certify_lower_bound(
        lattice,
        point,
        claimed,
        lattice_ref=name,
        config=config.enumeration,
    )
    if certificate.verified:
        radius = covering_radius_lower_bound(certificate)
    else:
        radius = to_float_interval(0, 64)
    payload = CoveringCertPayload(
        lattice=name,
        claimed=ScalarPayload.model_validate(claimed.to_payload()),
        claimed_text=str(claimed),
        witness=_strings(point),
        dist_sq=None
        if certificate.dist_sq is None
        else ScalarPayload.model_validate(certificate.dist_sq.to_payload()),
        verified=certificate.verified,
        precision_bits=certificate.precision_bits,
        covering_radius_lower=interval_payload(radius),
        comparison=None
        if certificate.comparison is None
        else comparison_payload(certificate.comparison),
    )
    verdict = "verified" if certificate.verified else "rejected"
    if not certificate.verified:
        logger.warning("witness for %s does not reach the claimed C >= %s", name, claimed)
    pretty = [f"claimed C >= {claimed}: {verdict}"]
    if certificate.dist_sq is not None:
        pretty.append(
            f"dist_sq = {exact_text(certificate.dist_sq)}, "
            f"4*dist_sq ~ {certified(certificate.dist_sq * 4)}"
        )
    if certificate.verified:
        pretty.append(f"covering radius >= {certified(radius)}")
    return CommandResult(payload, pretty, 0 if certificate.verified else 1)


def cmd_deep_hole(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    name, lattice = resolve_lattice(args.lattice, args.n, _catalog(config))
    search = DeepHoleSearch(enumeration=config.enumeration)
    result = search.run(lattice, restarts=args.restarts, seed=config.seed)
    payload = DeepHolePayload(
        lattice=name,
        witness=_strings(result.witness),
        dist_sq=ScalarPayload.model_validate(result.dist_sq.to_payload()),
        dist_sq_text=exact_text(result.dist_sq),
        covering_lower_bound=exact_text(result.covering_lower_bound),
        restarts=result.restarts,
        seed=result.seed,
    )
    pretty = [
        f"witness = ({', '.join(payload.witness)})",
        f"dist_sq = {payload.dist_sq_text}, C >= {payload.covering_lower_bound}",
    ]
    return CommandResult(payload, pretty)


def cmd_construct(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    report, _ = _engine(config).build(args.base, args.dim, args.n)
    payload = report.to_payload()
    pretty = [
        f"{report.base} + Z^{report.m} in dimension {report.d}",
        f"C = {report.c_lambda}",
        f"C ~ {certified(report.c_lambda)}",
        f"verdict {report.verdict.value}, margin C - d ~ {certified(report.margin)}",
        f"covolume {report.covolume}, well_rounded: {str(payload.well_rounded).lower()}",
        report.lower_bound_note,
    ]
    exit_code = 3 if report.verdict is Ordering3.UNDECIDED else 0
    return CommandResult(payload, pretty, exit_code)


def cmd_thresholds(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    engine = _engine(config)
    catalog = engine.catalog
    entries = [catalog.entry(name) for name in args.base] if args.base else catalog.bases()
    rows: list[BaseModel] = []
    pretty: list[str] = []
    for entry in entries:
        result = engine.threshold(entry.name, args.d_max)
        derivative = ",".join(f"{m}:{sign.value}" for m, sign in result.derivative)
        row = ThresholdRow(
            base=entry.name,
            dim=entry.dim,
            d_max=result.d_max,
            threshold=result.threshold,
            expected=entry.expected_threshold,
            derivative=derivative,
        )
        rows.append(row)
        if result.threshold is None:
            pretty.append(f"{entry.name:<10} no threshold ≤ {result.d_max}")
        else:
            pretty.append(
                f"{entry.name:<10} dim {entry.dim:>2}  threshold {result.threshold:>3}  "
                f"derivative {derivative}"
            )
    return CommandResult(rows, pretty)


def cmd_scan(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    if args.step < 1 or args.to < args.start:
        raise ValueError("scan needs --from <= --to and a positive --step")
    engine = _engine(config) if args.with_catalog else None
    rows = asymptotic_scan(range(args.start, args.to + 1, args.step), args.bits, engine)
    payloads: list[BaseModel] = [row.to_payload() for row in rows]
    pretty = [
        f"d = {row.d:>7}  m = {row.m:>7}  C >= {row.c_lower.decimal(10)}  "
        f"C / (d^2 / ln d) ~ {certified(row.ratio)}"
        for row in rows
    ]
    return CommandResult(payloads, pretty)


def _verification_payload(report: VerificationReport) -> VerificationPayload:
    return VerificationPayload(
        lattice=report.lattice,
        dim=report.dim,
        passed=report.passed,
        checks=[CheckPayload(name=c.name, passed=c.passed, detail=c.detail) for c in report.checks],
    )


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    catalog = _catalog(config)
    if args.all:
        names = [name for name in catalog.names() if name != PARAMETRIC_ZN]
        if args.skip_slow:
            names = [name for name in names if not catalog.entry(name).slow]
    elif args.name:
        names = [args.name]
    else:
        raise ValueError("verify needs a lattice name or --all")
    payloads: list[BaseModel] = []
    pretty: list[str] = []
    passed = True
    for name in names:
        n = args.n if name == PARAMETRIC_ZN else None
        report = verify_entry(name, catalog, n=n, config=config.enumeration)
        payloads.append(_verification_payload(report))
        passed = passed and report.passed
        pretty.append(f"{report.lattice} (dim {report.dim}): {'ok' if report.passed else 'FAILED'}")
        pretty.extend(
            f"  {c.name}: {str(c.passed).lower()}  {c.detail}".rstrip() for c in report.checks
        )
    return CommandResult(payloads, pretty, 0 if passed else 1)


def cmd_catalog(args: argparse.Namespace, config: CliConfig) -> CommandResult:
    catalog = _catalog(config)
    rows: list[BaseModel] = [
        CatalogRow(
            name=PARAMETRIC_ZN,
            min_norm_std="1",
            covering_c_std="n",
            covering_kind="exact",
            provenance="integer lattice Z^n, any n >= 1",
        )
    ]
    for name in catalog.names()[1:]:
        entry = catalog.entry(name)
        rows.append(
            CatalogRow(
                name=entry.name,
                dim=entry.dim,
                min_norm_std=str(entry.min_norm_std),
                covering_c_std=exact_text(entry.covering_c_std),
                covering_kind=entry.covering_kind.value,
                kissing_number=entry.kissing_number,
                expected_threshold=entry.expected_threshold,
                slow=entry.slow,
                provenance=entry.provenance,
            )
        )
    pretty = [
        f"{row.name:<10} dim {row.dim if row.dim is not None else 'n':>2}  "
        f"min {row.min_norm_std:<3} C {row.covering_c_std:<4} ({row.covering_kind})"
        for row in rows
        if isinstance(row, CatalogRow)
    ]
    return CommandResult(rows, pretty)


COMMANDS: dict[str, Command] = {
    "svp": cmd_svp,
    "cvp": cmd_cvp,
    "wellrounded": cmd_wellrounded,
    "covering-cert": cmd_covering_cert,
    "deep-hole": cmd_deep_hole,
    "construct": cmd_construct,
    "thresholds": cmd_thresholds,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
}
