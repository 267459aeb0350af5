"""Finite sums of monomials with like terms merged by their radical part."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any
from typing import Mapping

from woods.scalar.monomial import FactorItems
from woods.scalar.monomial import MonomialScalar
from woods.scalar.monomial import RationalLike


def _as_terms(item: ScalarSum | MonomialScalar | RationalLike) -> tuple[MonomialScalar, ...]:
    if isinstance(item, ScalarSum):
        return item.terms
    if isinstance(item, MonomialScalar):
        return (item,)
    return (MonomialScalar.of(item),)


@dataclass(frozen=True, slots=True)
class ScalarSum:
    """Canonical sum; terms are sorted by radical and no two share one.

    Radicals ``prod p^(e mod 1)`` with distinct exponent maps are linearly independent over
    the rationals, so the sum is zero exactly when ``terms`` is empty.
    """

    terms: tuple[MonomialScalar, ...] = ()

    @classmethod
    def of(cls, *items: ScalarSum | MonomialScalar | RationalLike) -> ScalarSum:
        merged: dict[FactorItems, Fraction] = {}
        for item in items:
            for term in _as_terms(item):
                if term.is_zero():
                    continue
                multiplier, radical = term.radical_split()
                merged[radical] = merged.get(radical, Fraction(0)) + multiplier
        terms = tuple(
            MonomialScalar.of(multiplier, radical)
            for radical, multiplier in sorted(merged.items())
            if multiplier != 0
        )
        return cls(terms)

    @classmethod
    def zero(cls) -> ScalarSum:
        return cls(())

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(term.is_rational() for term in self.terms)

    def rational_value(self) -> Fraction:
        return sum((term.rational_value() for term in self.terms), Fraction(0))

    def scale(self, factor: MonomialScalar | RationalLike) -> ScalarSum:
        factor = factor if isinstance(factor, MonomialScalar) else MonomialScalar.of(factor)
        return ScalarSum.of(*(term * factor for term in self.terms))

    def __add__(self, other: object) -> ScalarSum:
        if not isinstance(other, (ScalarSum, MonomialScalar, int, Fraction)):
            return NotImplemented
        return ScalarSum.of(self, other)

    __radd__ = __add__

    def __neg__(self) -> ScalarSum:
        return ScalarSum(tuple(-term for term in self.terms))

    def __sub__(self, other: object) -> ScalarSum:
        if not isinstance(other, (ScalarSum, MonomialScalar, int, Fraction)):
            return NotImplemented
        return ScalarSum.of(self, -ScalarSum.of(other))

    def __rsub__(self, other: object) -> ScalarSum:
        if not isinstance(other, (MonomialScalar, int, Fraction)):
            return NotImplemented
        return ScalarSum.of(other, -self)

    def __mul__(self, other: object) -> ScalarSum:
        if isinstance(other, ScalarSum):
            return ScalarSum.of(*(a * b for a in self.terms for b in other.terms))
        if isinstance(other, (MonomialScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def to_payload(self) -> dict[str, Any]:
        return {"terms": [term.to_payload() for term in self.terms]}

    @classmethod
    def from_payload(cls, payload: Mapping[str, Any]) -> ScalarSum:
        return cls.of(*(MonomialScalar.from_payload(term) for term in payload.get("terms", [])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(term) for term in self.terms).replace("+ -", "- ")
