"""Exact arithmetic and division theory on the Eisenstein ring Z[ω].

Elements are written a + bω with ω = e^{2πi/3}, so ω² = −1 − ω.  The norm is
N(a + bω) = a² − ab + b², the six units are (−ω)^j, and the unique ramified
prime is λ = 1 + 2ω = √−3 (note λ² = −3, and 3 = −λ²).

An element is *primary* when it is ≡ 1 (mod 3); every nonzero x factors
uniquely as x = ζ·λ^k·c with ζ a unit, k ≥ 0, and c primary.  Whenever this
module hands out a divisor, gcd, or prime, it is normalized to the canonical
associate λ^k·c (unit stripped, primary tail).

Rational-prime work on norms (primality testing, factorization, square roots
mod p for splitting p ≡ 1 mod 3) is delegated to sympy.ntheory.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from sympy import factorint, isprime, primerange, sqrt_mod

__all__ = [
    "DomainError",
    "UnsupportedRangeError",
    "EisensteinInt",
    "PrimaryDecomposition",
    "Factorization",
    "ResidueSystem",
    "ZERO",
    "ONE",
    "OMEGA",
    "OMEGA_SQ",
    "LAMBDA",
    "UNITS",
    "unit_inverse",
    "split_prime",
    "eis",
    "eis_divmod",
    "eis_gcd",
    "eis_xgcd",
    "inverse_mod",
    "primary_decompose",
    "canonical_associate",
    "factor",
    "divisors",
    "divisor_table",
    "euler_phi",
    "mobius",
    "omega_count",
    "rad",
    "sigma_b",
    "count_rad_divisors",
    "von_mangoldt",
    "primes_up_to_norm",
    "prime_count_oracle",
    "elements_with_norm_in",
    "primary_in_norm_range",
    "write_prime_cache",
    "read_prime_cache",
]

FACTOR_PRIME_LIMIT = 10**12


class DomainError(ValueError):
    """Raised when an argument violates a documented precondition."""


class UnsupportedRangeError(DomainError):
    """Raised when a norm has a prime factor beyond the supported range."""


def _rounddiv(n: int, d: int) -> int:
    """Nearest integer to n/d, ties rounded toward zero.  d > 0."""
    if n >= 0:
        return (2 * n + d - 1) // (2 * d)
    return -((-2 * n + d - 1) // (2 * d))


class EisensteinInt:
    """Immutable element a + bω of Z[ω] with arbitrary-precision coordinates."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0) -> None:
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("EisensteinInt is immutable")

    # -- basic ring structure ------------------------------------------------

    def __add__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        o = _coerce(other)
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        o = _coerce(other)
        return EisensteinInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        return _coerce(other) - self

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        o = _coerce(other)
        # (a + bω)(c + dω) = ac − bd + (ad + bc − bd)ω  using ω² = −1 − ω
        return EisensteinInt(
            self.a * o.a - self.b * o.b,
            self.a * o.b + self.b * o.a - self.b * o.b,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "EisensteinInt":
        if n < 0:
            raise DomainError("negative powers are not in Z[ω]")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EisensteinInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.a == other and self.b == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    # -- field-theoretic helpers ---------------------------------------------

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conj(self) -> "EisensteinInt":
        """Complex conjugate: conj(a + bω) = (a − b) − bω."""
        return EisensteinInt(self.a - self.b, -self.b)

    def trace(self) -> int:
        """Tr(a + bω) = 2a − b (since ω + ω̄ = −1)."""
        return 2 * self.a - self.b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_primary(self) -> bool:
        """x ≡ 1 (mod 3), i.e. 3 | a − 1 and 3 | b."""
        return (self.a - 1) % 3 == 0 and self.b % 3 == 0

    def is_primary_prime(self) -> bool:
        if not self.is_primary():
            return False
        n = self.norm()
        if isprime(n):
            return True
        r = math.isqrt(n)
        return r * r == n and r % 3 == 2 and isprime(r)

    def complex(self) -> complex:
        return complex(self.a - self.b / 2.0, self.b * math.sqrt(3.0) / 2.0)

    # -- division ---------------------------------------------------------

    def __divmod__(self, other: "EisensteinInt | int") -> tuple:
        return eis_divmod(self, _coerce(other))

    def __floordiv__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        return eis_divmod(self, _coerce(other))[0]

    def __mod__(self, other: "EisensteinInt | int") -> "EisensteinInt":
        return eis_divmod(self, _coerce(other))[1]

    def divides(self, other: "EisensteinInt | int") -> bool:
        return not eis_divmod(_coerce(other), self)[1]

    def exact_div(self, other: "EisensteinInt | int") -> "EisensteinInt":
        q, r = eis_divmod(self, _coerce(other))
        if r:
            raise DomainError(f"{other} does not divide {self}")
        return q

    # -- serialization ------------------------------------------------------

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}*w"

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"

    @classmethod
    def parse(cls, text: str) -> "EisensteinInt":
        """Parse the canonical form "a+b*w", e.g. "5+3*w" or "-2+0*w"."""
        s = text.strip().replace(" ", "")
        if not s.endswith("*w"):
            raise DomainError(f"cannot parse {text!r} as an Eisenstein integer")
        body = s[:-2]
        # split off the b coefficient at the last explicit sign
        for i in range(len(body) - 1, 0, -1):
            if body[i] in "+-":
                try:
                    return cls(int(body[:i]), int(body[i:]))
                except ValueError as exc:
                    raise DomainError(f"cannot parse {text!r}") from exc
        raise DomainError(f"cannot parse {text!r} as an Eisenstein integer")


def _coerce(x: "EisensteinInt | int") -> EisensteinInt:
    if isinstance(x, EisensteinInt):
        return x
    if isinstance(x, int):
        return EisensteinInt(x, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} to EisensteinInt")


def eis(a: int, b: int = 0) -> EisensteinInt:
    return EisensteinInt(a, b)


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA_SQ = EisensteinInt(-1, -1)
LAMBDA = EisensteinInt(1, 2)

#: the six units (−ω)^j for j = 0..5
UNITS: tuple[EisensteinInt, ...] = (
    ONE,
    EisensteinInt(0, -1),   # −ω
    OMEGA_SQ,               # ω²
    EisensteinInt(-1, 0),   # −1
    OMEGA,                  # ω
    EisensteinInt(1, 1),    # −ω²
)

_UNIT_INDEX = {(u.a, u.b): j for j, u in enumerate(UNITS)}


def unit_inverse(u: EisensteinInt) -> EisensteinInt:
    j = _UNIT_INDEX.get((u.a, u.b))
    if j is None:
        raise DomainError(f"{u} is not a unit")
    return UNITS[(-j) % 6]


def eis_divmod(x: EisensteinInt, y: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    """Euclidean division x = q·y + r with N(r) ≤ (3/4)·N(y) < N(y).

    q is the nearest lattice point to x/y: both coordinates of x·conj(y)/N(y)
    are rounded to the nearest integer, ties toward zero.
    """
    if not y:
        raise DomainError("division by zero in Z[ω]")
    n = y.norm()
    z = x * y.conj()
    q = EisensteinInt(_rounddiv(z.a, n), _rounddiv(z.b, n))
    return q, x - q * y


def eis_xgcd(x: EisensteinInt, y: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
    """Extended Euclid: returns (g, s, t) with s·x + t·y = g, g a gcd of (x, y)."""
    r0, r1 = x, y
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = eis_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def eis_gcd(x: EisensteinInt | int, y: EisensteinInt | int) -> EisensteinInt:
    """Canonical gcd: a generator of (x, y) normalized to λ^k · primary."""
    x, y = _coerce(x), _coerce(y)
    if not x and not y:
        raise DomainError("gcd(0, 0) is undefined")
    while y:
        x, y = y, eis_divmod(x, y)[1]
    return canonical_associate(x)


def inverse_mod(x: EisensteinInt, modulus: EisensteinInt) -> EisensteinInt:
    """Inverse of x modulo `modulus`; raises DomainError if not coprime."""
    g, s, _ = eis_xgcd(x, modulus)
    if not g.is_unit():
        raise DomainError(f"{x} is not invertible mod {modulus}")
    return eis_divmod(s * unit_inverse(g), modulus)[1]


# -- primary decomposition ---------------------------------------------------

@dataclass(frozen=True)
class PrimaryDecomposition:
    """x = unit · λ^lambda_exp · primary_part with primary_part ≡ 1 (mod 3)."""

    unit: EisensteinInt
    lambda_exp: int
    primary_part: EisensteinInt

    def value(self) -> EisensteinInt:
        return self.unit * LAMBDA ** self.lambda_exp * self.primary_part


def primary_decompose(x: EisensteinInt | int) -> PrimaryDecomposition:
    """The unique (ζ, k, c) with x = ζλ^k c and c ≡ 1 (mod 3)."""
    x = _coerce(x)
    if not x:
        raise DomainError("cannot decompose 0")
    k = 0
    while (x.a + x.b) % 3 == 0:  # λ | x  ⟺  3 | a + b
        # x/λ = x·conj(λ)/3 with conj(λ) = −λ, i.e. ((2b−a) + (b−2a)ω)/3
        x = EisensteinInt((2 * x.b - x.a) // 3, (x.b - 2 * x.a) // 3)
        k += 1
    for unit in UNITS:
        c = unit_inverse(unit) * x
        if c.is_primary():
            return PrimaryDecomposition(unit, k, c)
    raise AssertionError("unit scan failed; unreachable for nonzero x")


def canonical_associate(x: EisensteinInt) -> EisensteinInt:
    """λ^k · primary associate of x (the unit is stripped)."""
    d = primary_decompose(x)
    return LAMBDA ** d.lambda_exp * d.primary_part


# -- factorization ------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """x = unit · λ^lambda_exp · Π ϖᵢ^{eᵢ} over pairwise non-associate primary primes."""

    unit: EisensteinInt
    lambda_exp: int
    primes: tuple[tuple[EisensteinInt, int], ...]

    def value(self) -> EisensteinInt:
        x = self.unit * LAMBDA ** self.lambda_exp
        for p, e in self.primes:
            x = x * p ** e
        return x

    def is_squarefree(self) -> bool:
        return self.lambda_exp <= 1 and all(e == 1 for _, e in self.primes)


_SPLIT_CACHE: dict[int, EisensteinInt] = {}


def split_prime(p: int) -> EisensteinInt:
    """Primary prime ϖ with N(ϖ) = p for a rational prime p ≡ 1 (mod 3).

    Computed from a square root s of −3 mod p (Tonelli–Shanks via sympy):
    p | (s − λ)(s + λ), so gcd(p, s − λ) is a prime above p.
    """
    pi = _SPLIT_CACHE.get(p)
    if pi is None:
        if p % 3 != 1 or not isprime(p):
            raise DomainError(f"{p} is not a split rational prime")
        s = sqrt_mod(-3, p)
        pi = eis_gcd(EisensteinInt(p, 0), EisensteinInt(s, 0) - LAMBDA)
        if pi.norm() != p:
            raise AssertionError(f"splitting {p} failed")
        _SPLIT_CACHE[p] = pi
    return pi


def factor(x: EisensteinInt | int) -> Factorization:
    """Complete factorization into primary primes (λ and the unit kept apart).

    The norm of the primary part is factored over Z; primes p ≡ 1 (mod 3)
    split via `split_prime`, p ≡ 2 (mod 3) stay inert as −p.  Norm factors
    above FACTOR_PRIME_LIMIT raise UnsupportedRangeError (desk-scale artifact).
    Results are cached (Factorization is immutable).
    """
    x = _coerce(x)
    if not x:
        raise DomainError("cannot factor 0")
    cached = _FACTOR_CACHE.get((x.a, x.b))
    if cached is not None:
        return cached
    f = _factor_uncached(x)
    if len(_FACTOR_CACHE) >= 1 << 18:
        _FACTOR_CACHE.clear()
    _FACTOR_CACHE[(x.a, x.b)] = f
    return f


_FACTOR_CACHE: dict[tuple[int, int], "Factorization"] = {}


def _factor_uncached(x: EisensteinInt) -> Factorization:
    dec = primary_decompose(x)
    c = dec.primary_part
    found: list[tuple[EisensteinInt, int]] = []
    for p, e in sorted(factorint(c.norm()).items()):
        if p > FACTOR_PRIME_LIMIT:
            raise UnsupportedRangeError(
                f"norm factor {p} exceeds {FACTOR_PRIME_LIMIT}: factorization out of supported range"
            )
        if p % 3 == 2:
            if e % 2:
                raise AssertionError("inert prime with odd norm exponent")
            found.append((EisensteinInt(-p, 0), e // 2))
        elif p % 3 == 1:
            pi = split_prime(p)
            e1 = 0
            while True:
                q, r = eis_divmod(c, pi)
                if r:
                    break
                c = q
                e1 += 1
            if e1:
                found.append((pi, e1))
            if e - e1:
                found.append((canonical_associate(pi.conj()), e - e1))
        else:  # p == 3 cannot divide the norm of a primary element
            raise AssertionError("primary part with norm divisible by 3")
    found.sort(key=lambda t: (t[0].norm(), t[0].a, t[0].b))
    f = Factorization(dec.unit, dec.lambda_exp, tuple(found))
    prod = ONE
    for p, e in found:
        prod = prod * p ** e
    if prod != dec.primary_part:
        raise AssertionError("factorization does not reconstruct input")
    return f


def divisor_table(x: EisensteinInt | Factorization) -> list[tuple[EisensteinInt, int, float]]:
    """(d, μ(d), Λ(d)) for every canonical divisor d of x, without re-factoring.

    Enumerated straight from the factorization by exponent vectors; order is
    deterministic but not sorted.
    """
    f = x if isinstance(x, Factorization) else factor(x)
    parts: list[tuple[EisensteinInt, int]] = []
    if f.lambda_exp:
        parts.append((LAMBDA, f.lambda_exp))
    parts.extend(f.primes)
    # entries: (d, distinct prime count, has square, Λ-value if pure prime power)
    table = [(ONE, 0, False, 0.0)]
    for p, e in parts:
        logn = math.log(p.norm())
        grown = list(table)
        pk = ONE
        for j in range(1, e + 1):
            pk = pk * p
            for d, k, sq, lam in table:
                grown.append((d * pk, k + 1, sq or j >= 2, logn if k == 0 else 0.0))
        table = grown
    return [
        (d, 0 if sq else (-1) ** k, lam if k == 1 else 0.0)
        for d, k, sq, lam in table
    ]


def divisors(x: EisensteinInt | Factorization) -> list[EisensteinInt]:
    """All canonical divisors λ^j·(primary) of x, sorted by (norm, a, b).

    For primary x this is exactly the set of primary divisors, matching the
    convention that r | q ranges over r ≡ 1 (mod 3).
    """
    f = x if isinstance(x, Factorization) else factor(x)
    divs = [ONE]
    if f.lambda_exp:
        base = list(divs)
        for j in range(1, f.lambda_exp + 1):
            divs += [d * LAMBDA ** j for d in base]
    for p, e in f.primes:
        base = list(divs)
        pk = ONE
        for _ in range(e):
            pk = pk * p
            divs += [d * pk for d in base]
    divs.sort(key=lambda d: (d.norm(), d.a, d.b))
    return divs


# -- multiplicative functions --------------------------------------------------

def euler_phi(c: EisensteinInt | int) -> int:
    """#(Z[ω]/c)^× = N(c) · Π_{ϖ | c} (1 − 1/N(ϖ))."""
    c = _coerce(c)
    if not c:
        raise DomainError("euler_phi(0) is undefined")
    f = factor(c)
    phi = 1
    if f.lambda_exp:
        phi *= 2 * 3 ** (f.lambda_exp - 1)
    for p, e in f.primes:
        n = p.norm()
        phi *= (n - 1) * n ** (e - 1)
    return phi


def mobius(c: EisensteinInt | int) -> int:
    c = _coerce(c)
    if not c:
        raise DomainError("mobius(0) is undefined")
    f = factor(c)
    if f.lambda_exp > 1 or any(e > 1 for _, e in f.primes):
        return 0
    return (-1) ** (f.lambda_exp + len(f.primes))


def omega_count(c: EisensteinInt | int) -> int:
    """Number of distinct prime divisors (λ counted when present)."""
    c = _coerce(c)
    if not c:
        raise DomainError("omega(0) is undefined")
    f = factor(c)
    return (1 if f.lambda_exp else 0) + len(f.primes)


def rad(c: EisensteinInt | int) -> EisensteinInt:
    """Product of the distinct canonical primes of c (λ included once if present)."""
    c = _coerce(c)
    if not c:
        raise DomainError("rad(0) is undefined")
    f = factor(c)
    r = LAMBDA if f.lambda_exp else ONE
    for p, _ in f.primes:
        r = r * p
    return r


def sigma_b(q: EisensteinInt | int, b: float) -> float:
    """σ_b(q) = Σ_{d | q} N(d)^b over primary divisors d of primary q."""
    q = _coerce(q)
    if not q:
        raise DomainError("sigma_b(0) is undefined")
    if not q.is_primary():
        raise DomainError("sigma_b requires q ≡ 1 (mod 3)")
    total = 1.0
    for p, e in factor(q).primes:
        n = p.norm()
        total *= sum(float(n) ** (b * j) for j in range(e + 1))
    return total


def count_rad_divisors(q: EisensteinInt | int, x: float) -> int:
    """#{r primary : N(r) ≤ x, r | rad(q)^∞}, by bounded exponent enumeration."""
    q = _coerce(q)
    if not q.is_primary():
        raise DomainError("count_rad_divisors requires q ≡ 1 (mod 3)")
    if x < 1:
        return 0
    primes = [p for p, _ in factor(q).primes]

    def count(i: int, budget: float) -> int:
        if i == len(primes):
            return 1
        n = primes[i].norm()
        total = 0
        while budget >= 1:
            total += count(i + 1, budget)
            budget /= n
        return total

    return count(0, float(x))


def von_mangoldt(nu: EisensteinInt | int) -> float:
    """log N(ϖ) when ν is a unit times ϖ^k (k ≥ 1) for a single prime ϖ, else 0."""
    nu = _coerce(nu)
    if not nu:
        raise DomainError("von_mangoldt(0) is undefined")
    f = factor(nu)
    if f.lambda_exp and not f.primes:
        return math.log(3.0)
    if not f.lambda_exp and len(f.primes) == 1:
        return math.log(f.primes[0][0].norm())
    return 0.0


# -- residue systems ------------------------------------------------------------

def _hnf_rows(c: EisensteinInt) -> tuple[int, int, int]:
    """Row HNF [[e, f], [0, g]] of the lattice c·Z[ω] in the {1, ω} basis.

    Rows generate from c ↦ (a, b) and cω ↦ (−b, a − b); e·g = N(c),
    0 ≤ f < g, so {i + jω : 0 ≤ i < e, 0 ≤ j < g} is a residue system.
    """
    r1 = (c.a, c.b)
    r2 = (-c.b, c.a - c.b)
    # zero out the x-entry of one row using extended gcd on the first column
    x1, y1 = r1
    x2, y2 = r2
    while x2:
        q = x1 // x2
        x1, y1, x2, y2 = x2, y2, x1 - q * x2, y1 - q * y2
    e, f = x1, y1
    g = abs(y2)
    if e < 0:
        e, f = -e, -f
    if g == 0:
        raise DomainError("modulus must be nonzero")
    f %= g
    return e, f, g


class ResidueSystem:
    """Canonical complete residue system mod a nonzero modulus of Z[ω].

    Representatives are {i + jω : 0 ≤ i < e, 0 ≤ j < g} from the row HNF of
    the modulus lattice, enumerated j-major then i; reduce() maps any element
    to its representative and is idempotent.
    """

    def __init__(self, modulus: EisensteinInt | int) -> None:
        m = _coerce(modulus)
        if not m:
            raise DomainError("modulus must be nonzero")
        self.modulus = m
        self.e, self.f, self.g = _hnf_rows(m)
        self.size = m.norm()

    def reduce(self, x: EisensteinInt) -> EisensteinInt:
        e, f, g = self.e, self.f, self.g
        i = x.a % e
        t = (x.a - i) // e
        j = (x.b - t * f) % g
        return EisensteinInt(i, j)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[EisensteinInt]:
        for j in range(self.g):
            for i in range(self.e):
                yield EisensteinInt(i, j)

    def coordinate_arrays(self):
        """Representatives as a pair of int64 numpy arrays (bulk evaluation)."""
        import numpy as np

        jj, ii = np.meshgrid(
            np.arange(self.g, dtype=np.int64),
            np.arange(self.e, dtype=np.int64),
            indexing="ij",
        )
        return ii.ravel(), jj.ravel()

    def invertibles(self) -> list[EisensteinInt]:
        m = self.modulus
        return [x for x in self if eis_gcd(x, m).is_unit()]


# -- prime streams ----------------------------------------------------------------

def primes_up_to_norm(x: float) -> Iterator[EisensteinInt]:
    """Primary primes ϖ with N(ϖ) ≤ x, nondecreasing norm, ties by (a, b).

    λ is excluded (it is not primary).  Split p ≡ 1 (mod 3) contributes the
    conjugate pair above p (both primary, norm p); inert p ≡ 2 (mod 3)
    contributes −p (norm p²).
    """
    found: list[tuple[int, int, int]] = []
    for p in primerange(2, int(x) + 1):
        if p % 3 == 1:
            pi = split_prime(p)
            for q in (pi, canonical_associate(pi.conj())):
                found.append((p, q.a, q.b))
        elif p % 3 == 2 and p * p <= x:
            found.append((p * p, -p, 0))
    found.sort()
    for _, a, b in found:
        yield EisensteinInt(a, b)


def prime_count_oracle(x: float) -> int:
    """Count of primary primes of norm ≤ x via rational-prime classification."""
    count = 0
    for p in primerange(2, int(x) + 1):
        if p % 3 == 1:
            count += 2
        elif p % 3 == 2 and p * p <= x:
            count += 1
    return count


# -- lattice enumeration -----------------------------------------------------------

def elements_with_norm_in(
    lo: float,
    hi: float,
    congruence: tuple[EisensteinInt, EisensteinInt] | None = None,
    include_zero: bool = False,
) -> Iterator[EisensteinInt]:
    """All x ∈ Z[ω] with lo < N(x) ≤ hi, optionally x ≡ u (mod v).

    Deterministic order: increasing a, then b.  N(a+bω) = a² − ab + b² means
    |a|, |b| ≤ sqrt(4·hi/3).
    """
    if hi < 0:
        return
    bound = math.isqrt(int(4 * hi / 3)) + 2
    u = v = None
    if congruence is not None:
        u, v = congruence
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            n = a * a - a * b + b * b
            if n <= lo or n > hi:
                continue
            if not include_zero and n == 0:
                continue
            x = EisensteinInt(a, b)
            if u is not None and eis_divmod(x - u, v)[1]:
                continue
            yield x


def primary_in_norm_range(
    lo: float,
    hi: float,
    congruence: tuple[EisensteinInt, EisensteinInt] | None = None,
) -> Iterator[EisensteinInt]:
    """Primary x with lo < N(x) ≤ hi (optionally also x ≡ u mod v)."""
    for x in elements_with_norm_in(lo, hi):
        if not x.is_primary():
            continue
        if congruence is not None:
            u, v = congruence
            if eis_divmod(x - u, v)[1]:
                continue
        yield x


# -- binary prime-list cache ----------------------------------------------------------

def write_prime_cache(path, primes: Sequence[EisensteinInt]) -> None:
    """Length-prefixed little-endian coordinate pairs: u64 count, then (i64 a, i64 b)."""
    with open(path, "wb") as fh:
        fh.write(struct.pack("<Q", len(primes)))
        for p in primes:
            fh.write(struct.pack("<qq", p.a, p.b))


def read_prime_cache(path) -> list[EisensteinInt]:
    with open(path, "rb") as fh:
        (count,) = struct.unpack("<Q", fh.read(8))
        out = []
        for _ in range(count):
            a, b = struct.unpack("<qq", fh.read(16))
            out.append(EisensteinInt(a, b))
    return out
