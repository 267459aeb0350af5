"""The covering quantity ``C = 4 r^2`` with exact derivation trees."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from woods.scalar import MonomialScalar
from woods.scalar import ScalarSum
from woods.scalar import mul


class CoveringKind(str, Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower_bound"


class DerivationRule(str, Enum):
    CLOSED_FORM_ZN = "closed_form_Zn"
    CATALOG_CONSTANT = "catalog_constant"
    SCALING = "scaling"
    SUM = "sum"
    WITNESS = "witness"
    NEUTRAL = "neutral"


@dataclass(frozen=True, slots=True)
class Derivation:
    """One node of the tree explaining where a covering value comes from."""

    rule: DerivationRule
    value: ScalarSum | None = None
    alpha: MonomialScalar | None = None
    children: tuple[Derivation, ...] = ()
    note: str = ""

    def evaluate(self) -> ScalarSum:
        if self.rule is DerivationRule.NEUTRAL:
            return ScalarSum.zero()
        if self.rule is DerivationRule.SCALING:
            if self.alpha is None or len(self.children) != 1:
                raise ValueError("scaling derivation needs alpha and one child")
            return self.children[0].evaluate() * mul(self.alpha, self.alpha)
        if self.rule is DerivationRule.SUM:
            return ScalarSum.of(*(child.evaluate() for child in self.children))
        if self.value is None:
            raise ValueError(f"{self.rule.value} derivation carries no value")
        return self.value

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"rule": self.rule.value}
        if self.value is not None:
            payload["value"] = self.value.to_payload()
        if self.alpha is not None:
            payload["alpha"] = self.alpha.to_payload()
        if self.note:
            payload["note"] = self.note
        if self.children:
            payload["children"] = [child.to_payload() for child in self.children]
        return payload


@dataclass(frozen=True, slots=True)
class CoveringValue:
    c: ScalarSum
    kind: CoveringKind
    derivation: Derivation

    def is_neutral(self) -> bool:
        return self.derivation.rule is DerivationRule.NEUTRAL

    def to_payload(self) -> dict[str, Any]:
        return {
            "c": self.c.to_payload(),
            "kind": self.kind.value,
            "derivation": self.derivation.to_payload(),
        }


def covering_neutral() -> CoveringValue:
    """Value of the zero-dimensional lattice, the unit for :func:`covering_sum`."""

    return CoveringValue(ScalarSum.zero(), CoveringKind.EXACT, Derivation(DerivationRule.NEUTRAL))


def covering_Zn(n: int) -> CoveringValue:
    """``C(Z^n) = n``: the deep hole ``(1/2, ..., 1/2)`` sits at squared distance ``n/4``."""

    if n < 1:
        raise ValueError("covering_Zn needs n >= 1")
    value = ScalarSum.of(n)
    derivation = Derivation(DerivationRule.CLOSED_FORM_ZN, value=value, note=f"Z^{n}")
    return CoveringValue(value, CoveringKind.EXACT, derivation)


def covering_catalog(
    value: ScalarSum,
    kind: CoveringKind,
    provenance: str = "",
) -> CoveringValue:
    derivation = Derivation(DerivationRule.CATALOG_CONSTANT, value=value, note=provenance)
    return CoveringValue(value, kind, derivation)


def covering_witness(
    claimed: ScalarSum,
    point: tuple[Fraction, ...],
    note: str = "",
) -> CoveringValue:
    text = note or "(" + ", ".join(str(x) for x in point) + ")"
    derivation = Derivation(DerivationRule.WITNESS, value=claimed, note=text)
    return CoveringValue(claimed, CoveringKind.LOWER_BOUND, derivation)


def covering_scale(value: CoveringValue, alpha: MonomialScalar) -> CoveringValue:
    """``C(alpha L) = alpha^2 C(L)``."""

    if alpha.sign <= 0:
        raise ValueError("scaling factor must be positive")
    if alpha.is_one():
        return value
    derivation = Derivation(DerivationRule.SCALING, alpha=alpha, children=(value.derivation,))
    return CoveringValue(value.c * mul(alpha, alpha), value.kind, derivation)


def covering_sum(first: CoveringValue, second: CoveringValue) -> CoveringValue:
    """Pythagorean additivity over an orthogonal direct sum."""

    if first.is_neutral():
        return second
    if second.is_neutral():
        return first
    exact = first.kind is CoveringKind.EXACT and second.kind is CoveringKind.EXACT
    derivation = Derivation(DerivationRule.SUM, children=(first.derivation, second.derivation))
    return CoveringValue(
        first.c + second.c,
        CoveringKind.EXACT if exact else CoveringKind.LOWER_BOUND,
        derivation,
    )
