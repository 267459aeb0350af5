"""Exact monomials ``coeff * prod(p ** e)`` over prime bases with rational exponents."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any
from typing import Iterable
from typing import Mapping

from sympy import factorint
from sympy import isprime

from woods.errors import NonRepresentablePower
from woods.scalar.config import DEFAULT_SCALAR_CONFIG


RationalLike = Fraction | int
FactorItems = tuple[tuple[int, Fraction], ...]


@lru_cache(maxsize=8192)
def factor_integer(
    n: int,
    bound: int = DEFAULT_SCALAR_CONFIG.factor_bound,
) -> tuple[FactorItems, int]:
    """Split ``n >= 1`` into prime powers and a cofactor left unfactored within ``bound``."""

    if n < 1:
        raise ValueError("factor_integer expects a positive integer")
    if n == 1:
        return (), 1
    primes: list[tuple[int, Fraction]] = []
    residual = 1
    for base, exponent in factorint(n, limit=bound).items():
        if isprime(base):
            primes.append((int(base), Fraction(int(exponent))))
        else:
            residual *= int(base) ** int(exponent)
    return tuple(sorted(primes)), residual


def _accumulate(
    exponents: dict[int, Fraction],
    items: Iterable[tuple[int, Fraction]],
    sign: int,
) -> None:
    for prime, exponent in items:
        exponents[prime] = exponents.get(prime, Fraction(0)) + sign * exponent


@dataclass(frozen=True, slots=True)
class MonomialScalar:
    """Canonical monomial; build instances with :meth:`of` rather than the raw constructor.

    All prime content of the coefficient is folded into ``factors``. The coefficient keeps the
    sign and any cofactor whose factorisation exceeds the configured bound.
    """

    coeff: Fraction
    factors: FactorItems = ()

    @classmethod
    def of(
        cls,
        coeff: RationalLike = 1,
        factors: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] | None = None,
        *,
        bound: int = DEFAULT_SCALAR_CONFIG.factor_bound,
    ) -> MonomialScalar:
        value = Fraction(coeff)
        if value == 0:
            return cls(Fraction(0), ())
        exponents: dict[int, Fraction] = {}
        raw = factors.items() if isinstance(factors, Mapping) else (factors or ())
        for base, exponent in raw:
            base = int(base)
            exponent = Fraction(exponent)
            if base < 2:
                raise ValueError(f"factor base must be at least 2, got {base}")
            if exponent == 0:
                continue
            primes, residual = factor_integer(base, bound)
            if residual != 1:
                if exponent.denominator != 1:
                    raise NonRepresentablePower(f"cannot factor base {base} within bound {bound}")
                value *= Fraction(residual) ** int(exponent)
            _accumulate(exponents, ((p, e * exponent) for p, e in primes), 1)

        sign = -1 if value < 0 else 1
        numerator_primes, numerator_rest = factor_integer(abs(value.numerator), bound)
        denominator_primes, denominator_rest = factor_integer(value.denominator, bound)
        _accumulate(exponents, numerator_primes, 1)
        _accumulate(exponents, denominator_primes, -1)
        canonical = tuple(sorted((p, e) for p, e in exponents.items() if e != 0))
        return cls(Fraction(sign * numerator_rest, denominator_rest), canonical)

    @classmethod
    def from_rational(cls, value: RationalLike) -> MonomialScalar:
        return cls.of(value)

    @classmethod
    def one(cls) -> MonomialScalar:
        return cls(Fraction(1), ())

    @classmethod
    def prime_power(cls, prime: int, exponent: RationalLike) -> MonomialScalar:
        return cls.of(1, {prime: exponent})

    @property
    def factor_map(self) -> dict[int, Fraction]:
        return dict(self.factors)

    @property
    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def is_one(self) -> bool:
        return self.coeff == 1 and not self.factors

    def is_rational(self) -> bool:
        return all(exponent.denominator == 1 for _, exponent in self.factors)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        value = self.coeff
        for prime, exponent in self.factors:
            value *= Fraction(prime) ** int(exponent)
        return value

    def radical_split(self) -> tuple[Fraction, FactorItems]:
        """Return ``(multiplier, radical)`` with radical exponents in ``(0, 1)``."""

        multiplier = self.coeff
        radical: list[tuple[int, Fraction]] = []
        for prime, exponent in self.factors:
            whole = math.floor(exponent)
            multiplier *= Fraction(prime) ** whole
            if exponent != whole:
                radical.append((prime, exponent - whole))
        return multiplier, tuple(radical)

    def __mul__(self, other: object) -> MonomialScalar:
        if isinstance(other, (int, Fraction)):
            other = MonomialScalar.of(other)
        if not isinstance(other, MonomialScalar):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> MonomialScalar:
        if isinstance(other, (int, Fraction)):
            other = MonomialScalar.of(other)
        if not isinstance(other, MonomialScalar):
            return NotImplemented
        return mul(self, other.reciprocal())

    def __pow__(self, exponent: RationalLike) -> MonomialScalar:
        return rpow(self, Fraction(exponent))

    def __neg__(self) -> MonomialScalar:
        return MonomialScalar(-self.coeff, self.factors)

    def reciprocal(self) -> MonomialScalar:
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return MonomialScalar.of(1 / self.coeff, {p: -e for p, e in self.factors})

    def sqrt(self) -> MonomialScalar:
        return rpow(self, Fraction(1, 2))

    def to_payload(self) -> dict[str, Any]:
        return {
            "coeff": str(self.coeff),
            "factors": {str(prime): str(exponent) for prime, exponent in self.factors},
        }

    @classmethod
    def from_payload(cls, payload: Mapping[str, Any]) -> MonomialScalar:
        raw = payload.get("factors", {})
        factors = {int(base): Fraction(str(exp)) for base, exp in raw.items()}
        return cls.of(Fraction(str(payload["coeff"])), factors)

    def __str__(self) -> str:
        parts = [] if self.coeff == 1 and self.factors else [str(self.coeff)]
        for prime, exponent in self.factors:
            parts.append(str(prime) if exponent == 1 else f"{prime}^({exponent})")
        return "*".join(parts)


def mul(a: MonomialScalar, b: MonomialScalar) -> MonomialScalar:
    """Exact product with exponents added."""

    if a.is_zero() or b.is_zero():
        return MonomialScalar.of(0)
    exponents = dict(a.factors)
    _accumulate(exponents, b.factors, 1)
    return MonomialScalar.of(a.coeff * b.coeff, exponents)


def rpow(
    a: MonomialScalar,
    exponent: RationalLike,
    *,
    bound: int = DEFAULT_SCALAR_CONFIG.factor_bound,
) -> MonomialScalar:
    """Exact ``a ** exponent`` for positive ``a``."""

    exponent = Fraction(exponent)
    if a.coeff <= 0:
        raise ValueError("rpow requires a positive base")
    if exponent == 0:
        return MonomialScalar.one()
    coeff = Fraction(1)
    if a.coeff != 1:
        if exponent.denominator != 1:
            raise NonRepresentablePower(
                f"coefficient {a.coeff} has no prime factorisation within bound {bound}"
            )
        coeff = a.coeff ** int(exponent)
    return MonomialScalar.of(coeff, {p: e * exponent for p, e in a.factors}, bound=bound)
