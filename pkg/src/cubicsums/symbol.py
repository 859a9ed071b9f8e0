"""The cubic residue symbol on Z[ω], without factoring the denominator.

For primary prime ϖ the symbol is (a/ϖ)₃ ≡ a^{(N(ϖ)−1)/3} (mod ϖ), valued in
{0, 1, ω, ω²}; it extends multiplicatively to primary denominators, obeys
cubic reciprocity (a/b)₃ = (b/a)₃ for primary a, b with (a,b) = 1, and the
supplements
    (ω/d)₃ = ω^{α₂},   (λ/d)₃ = ω^{−α₃}
where d ≡ 1 + α₂λ² + α₃λ³ (mod 9) with α₂, α₃ ∈ {−1, 0, 1}.

The production evaluator is a Euclidean-style loop: strip the unit and
λ-power from the numerator via the supplements, reduce mod the denominator,
swap by reciprocity.  Its cost is softly quadratic in log of the norms.  The
power-residue definition is kept as `cubic_symbol_prime_oracle` for tests.

Numerators may be arbitrary elements of Z[ω]; denominators must be primary.
The symbol is Zero exactly when the arguments share a factor.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    LAMBDA,
    ONE,
    OMEGA,
    OMEGA_SQ,
    UNITS,
    DomainError,
    EisensteinInt,
    ResidueSystem,
    eis_divmod,
    primary_decompose,
)

__all__ = [
    "CubicSymbolValue",
    "SupplementExponents",
    "supplement_exponents",
    "cubic_symbol",
    "cubic_symbol_prime_oracle",
]

_W = complex(-0.5, 0.8660254037844386467637231707529362)  # e^{2πi/3}


class CubicSymbolValue(enum.Enum):
    """Value of a cubic symbol: Zero, or ω^j for j ∈ {0, 1, 2}."""

    ZERO = "zero"
    ONE = "one"
    OMEGA = "omega"
    OMEGA_SQ = "omega_sq"

    @classmethod
    def from_exponent(cls, j: int) -> "CubicSymbolValue":
        return (cls.ONE, cls.OMEGA, cls.OMEGA_SQ)[j % 3]

    @property
    def exponent(self) -> int | None:
        if self is CubicSymbolValue.ZERO:
            return None
        return {"one": 0, "omega": 1, "omega_sq": 2}[self.value]

    def __mul__(self, other: "CubicSymbolValue") -> "CubicSymbolValue":
        if CubicSymbolValue.ZERO in (self, other):
            return CubicSymbolValue.ZERO
        return CubicSymbolValue.from_exponent(self.exponent + other.exponent)

    def conj(self) -> "CubicSymbolValue":
        if self is CubicSymbolValue.ZERO:
            return self
        return CubicSymbolValue.from_exponent(-self.exponent)

    def to_eisenstein(self) -> EisensteinInt:
        if self is CubicSymbolValue.ZERO:
            return EisensteinInt(0, 0)
        return (ONE, OMEGA, OMEGA_SQ)[self.exponent]

    def to_complex(self) -> complex:
        if self is CubicSymbolValue.ZERO:
            return 0j
        return _W ** self.exponent


@dataclass(frozen=True)
class SupplementExponents:
    """(α₂, α₃) ∈ {−1,0,1}² with d ≡ 1 + α₂λ² + α₃λ³ (mod 9)."""

    alpha2: int
    alpha3: int


_SUPPLEMENT_TABLE: dict[tuple[int, int], SupplementExponents] = {}


def _build_supplement_table() -> None:
    rs = ResidueSystem(EisensteinInt(9, 0))
    for a2 in (-1, 0, 1):
        for a3 in (-1, 0, 1):
            d = ONE + a2 * LAMBDA * LAMBDA + a3 * LAMBDA ** 3
            key = rs.reduce(d)
            _SUPPLEMENT_TABLE[(key.a, key.b)] = SupplementExponents(a2, a3)


_build_supplement_table()
_MOD9 = ResidueSystem(EisensteinInt(9, 0))


def supplement_exponents(d: EisensteinInt) -> SupplementExponents:
    """The unique (α₂, α₃) for primary d; d is reduced mod 9 first."""
    if not d.is_primary():
        raise DomainError("supplement exponents require d ≡ 1 (mod 3)")
    key = _MOD9.reduce(d)
    return _SUPPLEMENT_TABLE[(key.a, key.b)]


def _unit_lambda_exponent(unit_index: int, lam_exp: int, d: EisensteinInt) -> int:
    """ω-exponent of ((−ω)^j λ^k / d)₃ = ω^{j·α₂(d) − k·α₃(d)}."""
    s = supplement_exponents(d)
    return unit_index * s.alpha2 - lam_exp * s.alpha3


def cubic_symbol(a: EisensteinInt, b: EisensteinInt) -> CubicSymbolValue:
    """The cubic Jacobi symbol (a/b)₃ for arbitrary a and primary b.

    Computed without factoring b: repeatedly reduce a mod b, split off the
    unit and λ-power of the remainder through the supplements, and swap the
    primary parts by reciprocity.  (a/1)₃ = 1; the value is Zero iff
    gcd(a, b) ≠ 1.
    """
    if not b.is_primary():
        raise DomainError("cubic symbol requires a primary denominator")
    exponent = 0
    while True:
        if b == ONE:
            return CubicSymbolValue.from_exponent(exponent)
        a = eis_divmod(a, b)[1]
        if not a:
            return CubicSymbolValue.ZERO
        dec = primary_decompose(a)
        j = UNITS.index(dec.unit)
        exponent += _unit_lambda_exponent(j, dec.lambda_exp, b)
        a, b = b, dec.primary_part


def cubic_symbol_prime_oracle(a: EisensteinInt, pi: EisensteinInt) -> CubicSymbolValue:
    """Power-residue definition: a^{(N(ϖ)−1)/3} mod ϖ, matched against {0,1,ω,ω²}.

    Test oracle only; requires ϖ to be a primary prime.
    """
    if not pi.is_primary_prime():
        raise DomainError("oracle requires a primary prime modulus")
    rs = ResidueSystem(pi)
    a = rs.reduce(a)
    if not a:
        return CubicSymbolValue.ZERO
    e = (pi.norm() - 1) // 3
    result = ONE
    base = a
    while e:
        if e & 1:
            result = rs.reduce(result * base)
        base = rs.reduce(base * base)
        e >>= 1
    for j, root in enumerate((ONE, OMEGA, OMEGA_SQ)):
        if rs.reduce(root) == result:
            return CubicSymbolValue.from_exponent(j)
    raise AssertionError("power residue did not land on a cube root of unity")


@lru_cache(maxsize=1 << 20)
def _symbol_exponent_cached(aa: int, ab: int, ba: int, bb: int) -> int | None:
    v = cubic_symbol(EisensteinInt(aa, ab), EisensteinInt(ba, bb))
    return v.exponent


def symbol_complex(a: EisensteinInt, b: EisensteinInt) -> complex:
    """(a/b)₃ as a complex number (cached; hot path for sum evaluators)."""
    e = _symbol_exponent_cached(a.a, a.b, b.a, b.b)
    if e is None:
        return 0j
    return _W ** e
