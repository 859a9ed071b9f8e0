"""Cubic Gauss, Ramanujan, and Kloosterman sums, and the ψ-transform layer.

All exponential sums use the additive character ě(z) = e^{2πi(z+z̄)} of the
Eisenstein field.  Phases are never accumulated in floating point: for
arguments x/y with x, y ∈ Z[ω] the trace 2Re(x·conj(y))/N(y) is computed as
an exact rational and a single transcendental call produces each root of
unity, so each term carries at most one ulp of phase error.

Accumulators report an error budget of terms · 2⁻⁴⁵ · (max term magnitude);
comparison tolerances follow the coarser policy 10⁻⁹ · terms · magnitude.

Shifted arguments μ ∈ λ⁻ᵉZ[ω] are exact (numerator, λ-exponent) pairs
(`LambdaShifted`), never floats.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import (
    LAMBDA,
    ONE,
    UNITS,
    DomainError,
    EisensteinInt,
    Factorization,
    ResidueSystem,
    canonical_associate,
    divisors,
    eis_divmod,
    eis_gcd,
    euler_phi,
    factor,
    inverse_mod,
    mobius,
    primary_decompose,
    unit_inverse,
)
from .symbol import CubicSymbolValue, cubic_symbol, supplement_exponents, symbol_complex

__all__ = [
    "ComplexSum",
    "GaussSumResult",
    "LambdaShifted",
    "e_check",
    "phase",
    "gauss_direct",
    "gauss_fast",
    "gauss_prime",
    "gauss_normalized",
    "gauss_cube_check",
    "character_table",
    "ramanujan_closed",
    "ramanujan_general",
    "ramanujan_direct",
    "ramanujan_flat_sum",
    "kloosterman_ss",
    "kloosterman_sx",
    "kloosterman_brute",
    "weil_bound",
    "weil_bound_covered",
    "psi_mod_eta",
    "psi_sharp",
    "psi_star",
    "fourier_psi",
    "orthogonality_check",
    "GAUSS_DIRECT_CAP",
    "KLOOSTERMAN_CAP",
]

GAUSS_DIRECT_CAP = 10**6
KLOOSTERMAN_CAP = 10**6

_TWO_PI = 2.0 * math.pi
_W = complex(-0.5, math.sqrt(3.0) / 2.0)
_W_POWERS = (1.0 + 0j, _W, _W * _W)

#: names of fault-injection hooks flipped on by the CLI test hook
_FAULT_FLAGS: set[str] = set()


class ResourceError(RuntimeError):
    """Raised when a direct summation would exceed its configured cap."""


# -- accumulators ---------------------------------------------------------------

@dataclass(frozen=True)
class ComplexSum:
    """Double-precision complex total of `terms` summands of magnitude ≤ max_term."""

    re: float
    im: float
    terms: int
    max_term: float = 1.0

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    @property
    def error_budget(self) -> float:
        """Documented bound on the accumulated absolute rounding error."""
        return self.terms * 2.0 ** -45 * self.max_term

    @property
    def tolerance(self) -> float:
        """Comparison tolerance policy: 10⁻⁹ · terms · max term magnitude."""
        return max(1e-12, 1e-9 * self.terms * self.max_term)

    @classmethod
    def of(cls, z: complex, terms: int, max_term: float = 1.0) -> "ComplexSum":
        return cls(z.real, z.imag, terms, max_term)


@dataclass(frozen=True)
class GaussSumResult:
    value: ComplexSum
    modulus: EisensteinInt
    shift: "LambdaShifted"


# -- λ-shifted arguments ----------------------------------------------------------

@dataclass(frozen=True)
class LambdaShifted:
    """Exact element numerator · λ^{−lam_exp} of λ^{−e}Z[ω]."""

    numerator: EisensteinInt
    lam_exp: int = 0

    def __post_init__(self) -> None:
        if self.lam_exp < 0:
            raise DomainError("lam_exp must be ≥ 0")

    @classmethod
    def of(cls, x: "LambdaShifted | EisensteinInt | int") -> "LambdaShifted":
        if isinstance(x, LambdaShifted):
            return x
        if isinstance(x, int):
            x = EisensteinInt(x, 0)
        return cls(x, 0)

    def reduced(self) -> "LambdaShifted":
        """Strip common λ factors from (numerator, λ-exponent)."""
        num, e = self.numerator, self.lam_exp
        while e > 0 and num and (num.a + num.b) % 3 == 0:
            num = EisensteinInt((2 * num.b - num.a) // 3, (num.b - 2 * num.a) // 3)
            e -= 1
        return LambdaShifted(num, e)

    def times(self, x: EisensteinInt) -> "LambdaShifted":
        return LambdaShifted(self.numerator * x, self.lam_exp)

    def plus(self, other: "LambdaShifted") -> "LambdaShifted":
        e = max(self.lam_exp, other.lam_exp)
        a = self.numerator * LAMBDA ** (e - self.lam_exp)
        b = other.numerator * LAMBDA ** (e - other.lam_exp)
        return LambdaShifted(a + b, e)

    def is_integral(self) -> bool:
        return self.reduced().lam_exp == 0

    def integral_value(self) -> EisensteinInt:
        r = self.reduced()
        if r.lam_exp:
            raise DomainError(f"{self} is not integral")
        return r.numerator

    def norm(self) -> Fraction:
        return Fraction(self.numerator.norm(), 3 ** self.lam_exp)

    def __bool__(self) -> bool:
        return bool(self.numerator)


# -- exact phases ------------------------------------------------------------------

def e_check(z: complex) -> complex:
    """ě(z) = e^{2πi(z + z̄)} = e^{4πi·Re z} for a float argument."""
    return cmath.exp(2j * _TWO_PI * z.real)


def trace_fraction(x: EisensteinInt, y: EisensteinInt) -> Fraction:
    """Tr(x/y) = (x/y) + conj(x/y) as an exact rational."""
    if not y:
        raise DomainError("zero denominator")
    w = x * y.conj()
    return Fraction(w.trace(), y.norm())


def phase(x: EisensteinInt, y: EisensteinInt) -> complex:
    """ě(x/y) computed from the exact rational trace."""
    t = trace_fraction(x, y)
    return cmath.exp(1j * _TWO_PI * (t.numerator % t.denominator) / t.denominator)


class _LinearPhase:
    """ě(s·x/y) as a function of x ∈ Z[ω], for fixed shift s = num·λ^{−e} and y.

    Tr(num·x·conj(λᵉy)) is Z-linear in the coordinates of x, so each value
    needs two integer multiply-adds, one reduction mod N(λᵉy), and one exp.
    """

    def __init__(self, shift: LambdaShifted, y: EisensteinInt) -> None:
        s = shift.reduced()
        denom = LAMBDA ** s.lam_exp * y
        w = s.numerator * denom.conj()
        self.q = denom.norm()
        self.t1 = w.trace() % self.q
        self.t2 = (EisensteinInt(0, 1) * w).trace() % self.q
        self.scale = _TWO_PI / self.q

    def at(self, x: EisensteinInt) -> complex:
        t = (x.a * self.t1 + x.b * self.t2) % self.q
        return cmath.exp(1j * self.scale * t)

    def at_arrays(self, xa, xb):
        t = (xa * self.t1 + xb * self.t2) % self.q
        return np.exp(1j * self.scale * t)


# -- cubic character tables (vectorized) ----------------------------------------------

@lru_cache(maxsize=4096)
def _split_classifier(pa: int, pb: int) -> tuple[int, np.ndarray]:
    """(ω-image s, j-table over F_p) for a split primary prime ϖ = pa + pb·ω.

    j[t] = j with t^{(p−1)/3} ≡ s^j (mod p); j[0] = −1.  Built from the cube
    subgroup of F_p^× and one explicit coset representative.
    """
    p = pa * pa - pa * pb + pb * pb
    s = (-pa * pow(pb, -1, p)) % p
    ts = np.arange(1, p, dtype=np.int64)
    cubes = (ts * ts % p) * ts % p
    jt = np.full(p, -1, dtype=np.int8)
    jt[cubes] = 0
    n1 = 2
    while jt[n1] == 0:
        n1 += 1
    j1 = 1 if pow(n1, (p - 1) // 3, p) == s else 2
    jt[(n1 * cubes) % p] = j1
    rest = jt == -1
    rest[0] = False
    jt[rest] = 3 - j1
    jt[0] = -1
    return s, jt


@lru_cache(maxsize=512)
def _inert_classifier(q: int) -> np.ndarray:
    """j-table over F_{q²} = (Z/q)[ω] for the inert primary prime −q.

    Entry [x, y] gives j with (x+yω)^{(q²−1)/3} ≡ ω^j (mod −q); −1 marks 0.
    """
    e = (q * q - 1) // 3
    xs, ys = np.meshgrid(np.arange(q, dtype=np.int64), np.arange(q, dtype=np.int64), indexing="ij")

    def field_mul(ax, ay, bx, by):
        return (ax * bx - ay * by) % q, (ax * by + ay * bx - ay * by) % q

    # cube every element; only (0,0) cubes to (0,0)
    sx, sy = field_mul(xs, ys, xs, ys)
    cx, cy = field_mul(sx, sy, xs, ys)
    jt = np.full((q, q), -1, dtype=np.int8)
    cxs, cys = cx.ravel()[1:], cy.ravel()[1:]
    jt[cxs, cys] = 0

    def field_pow(ax, ay, n):
        rx, ry = 1, 0
        while n:
            if n & 1:
                rx, ry = (rx * ax - ry * ay) % q, (rx * ay + ry * ax - ry * ay) % q
            ax, ay = (ax * ax - ay * ay) % q, (2 * ax * ay - ay * ay) % q
            n >>= 1
        return rx, ry

    # label one non-cube coset explicitly; the leftover coset is the third label
    nx, ny = 0, 1
    while jt[nx, ny] == 0:
        ny += 1
        if ny == q:
            nx, ny = nx + 1, 0
    j1 = 1 if field_pow(nx, ny, e) == (0, 1) else 2
    kx, ky = field_mul(np.int64(nx), np.int64(ny), cxs, cys)
    jt[kx, ky] = j1
    rest = jt == -1
    rest[0, 0] = False
    jt[rest] = 3 - j1
    jt[0, 0] = -1
    return jt


def character_table(c: EisensteinInt, xa: np.ndarray, xb: np.ndarray) -> np.ndarray:
    """(x/c)₃ for primary c over coordinate arrays, as a complex array.

    Uses (x/c)₃ = Π (x/ϖ)₃^{e_ϖ} and the per-prime residue-field
    classifiers, so the cost is a few vector passes per prime divisor.
    """
    expo = np.zeros(xa.shape, dtype=np.int64)
    zero = np.zeros(xa.shape, dtype=bool)
    for pi, e in factor(c).primes:
        n = pi.norm()
        root = math.isqrt(n)
        if root * root == n and root % 3 == 2:
            jt = _inert_classifier(root)
            j = jt[xa % root, xb % root]
        else:
            s, jt = _split_classifier(pi.a, pi.b)
            j = jt[(xa + xb * s) % n]
        zero |= j < 0
        expo += e * np.where(j < 0, 0, j)
    out = np.asarray(_W_POWERS, dtype=complex)[expo % 3]
    out[zero] = 0
    return out


def _residue_arrays(c: EisensteinInt) -> tuple[np.ndarray, np.ndarray]:
    rs = ResidueSystem(c)
    return rs.coordinate_arrays()


@lru_cache(maxsize=32)
def _direct_tables(ca: int, cb: int):
    """Residue coordinates and character table for a primary modulus (cached
    so repeated direct sums with different shifts share the setup)."""
    c = EisensteinInt(ca, cb)
    xa, xb = _residue_arrays(c)
    return xa, xb, character_table(c, xa, xb)


# -- Gauss sums ----------------------------------------------------------------------

def _as_shift(mu) -> LambdaShifted:
    return LambdaShifted.of(mu)


def gauss_direct(mu, c: EisensteinInt, cap: int = GAUSS_DIRECT_CAP) -> GaussSumResult:
    """g(μ, c) = Σ_{d mod c} (d/c)₃ ě(μd/c) by direct summation over a residue system.

    c must be primary.  μ may lie in λ⁻¹Z[ω]; non-integral shifts are
    reduced through g(μ, c) = (λ/c)₃ g(λμ, c).
    """
    if not c.is_primary():
        raise DomainError("gauss sum modulus must be primary")
    mu = _as_shift(mu).reduced()
    pref = 1.0 + 0j
    if mu.lam_exp:
        s = cubic_symbol(LAMBDA, c)
        if s is CubicSymbolValue.ZERO:
            raise AssertionError("λ cannot share a factor with a primary modulus")
        pref = s.to_complex() ** mu.lam_exp
        mu = LambdaShifted(mu.numerator)
    n = c.norm()
    if n > cap:
        raise ResourceError(f"norm {n} exceeds direct-summation cap {cap}")
    if c == ONE:
        return GaussSumResult(ComplexSum.of(pref, 1), c, mu)
    xa, xb, chi = _direct_tables(c.a, c.b)
    ph = _LinearPhase(mu, c).at_arrays(xa, xb)
    total = pref * complex(np.dot(chi, ph))
    return GaussSumResult(ComplexSum.of(total, int(n)), c, mu)


@lru_cache(maxsize=100000)
def _gauss_prime_value(pa: int, pb: int) -> complex:
    """g(ϖ) = g(1, ϖ) for a primary prime ϖ, via residue-field classification.

    Split ϖ (norm p): g = Σ_{t=1}^{p−1} ω^{j(t)} e(t·Tr(ϖ)/p) over F_p.
    Inert −q (norm q²): direct sum over (Z/q)[ω] with q-th root phases.
    """
    pi = EisensteinInt(pa, pb)
    n = pi.norm()
    root = math.isqrt(n)
    if root * root == n and root % 3 == 2:
        q = root
        jt = _inert_classifier(q)
        xs, ys = np.meshgrid(np.arange(q, dtype=np.int64), np.arange(q, dtype=np.int64), indexing="ij")
        j = jt[xs, ys]
        # ě(d/(−q)) has phase −Tr(d)/q = −(2x − y)/q
        t = (-(2 * xs - ys)) % q
        ph = np.exp(2j * np.pi * t / q)
        vals = np.asarray(_W_POWERS, dtype=complex)[np.where(j < 0, 0, j) % 3]
        vals[j < 0] = 0
        return complex(np.sum(vals * ph))
    p = n
    s, jt = _split_classifier(pa, pb)
    ts = np.arange(1, p, dtype=np.int64)
    tr = pi.trace() % p
    ph = np.exp(2j * np.pi * ((ts * tr) % p) / p)
    vals = np.asarray(_W_POWERS, dtype=complex)[jt[1:] % 3]
    return complex(np.sum(vals * ph))


def gauss_prime(pi: EisensteinInt) -> complex:
    if not pi.is_primary_prime():
        raise DomainError(f"{pi} is not a primary prime")
    value = _gauss_prime_value(pi.a, pi.b)
    if "cuberel" in _FAULT_FLAGS:
        value = -value
    return value


def _lambda_valuation(x: EisensteinInt, pi: EisensteinInt, limit: int) -> tuple[int, EisensteinInt]:
    """(v, x/ϖ^v) with v = min(v_ϖ(x), limit)."""
    v = 0
    while v < limit:
        q, r = eis_divmod(x, pi)
        if r:
            break
        x = q
        v += 1
    return v, x


def _gauss_local(mu: EisensteinInt, pi: EisensteinInt, ell: int) -> complex:
    """g(μ, ϖ^ℓ) from the six-case prime-power table.

    With μ = ϖᵏμ′, (μ′,ϖ)=1:  g(ϖᵏμ′, ϖ^ℓ) = conj((μ′/ϖ)₃)^ℓ · g(ϖᵏ, ϖ^ℓ), and
        g(ϖᵏ, ϖ^ℓ) = 1                (ℓ = 0)
                   = φ(ϖ^ℓ)           (1 ≤ ℓ ≤ k, ℓ ≡ 0 mod 3)
                   = −N(ϖ)ᵏ           (ℓ = k+1 ≡ 0 mod 3)
                   = N(ϖ)ᵏ·g(ϖ)       (ℓ = k+1 ≡ 1 mod 3)
                   = N(ϖ)ᵏ·conj g(ϖ)  (ℓ = k+1 ≡ 2 mod 3)
                   = 0                (otherwise).
    """
    if ell == 0:
        return 1.0 + 0j
    n = pi.norm()
    if not mu:
        k, mu_rest = ell, ONE  # μ = 0 behaves like v_ϖ(μ) ≥ ℓ
    else:
        k, mu_rest = _lambda_valuation(mu, pi, ell + 1)
    if ell <= k:
        # ě(ϖ^{k−ℓ}μ′d) ≡ 1, so only the principal-character case survives
        return complex(euler_phi(pi ** ell)) if ell % 3 == 0 else 0j
    if ell == k + 1:
        # here v_ϖ(μ) = k exactly, so μ′ = μ/ϖᵏ is coprime to ϖ
        twist = 1.0 + 0j
        if mu_rest != ONE:
            s = cubic_symbol(mu_rest, pi)
            if s is CubicSymbolValue.ZERO:
                raise AssertionError("μ′ shares a factor with ϖ")
            twist = s.conj().to_complex() ** ell
        if ell % 3 == 0:
            return twist * (-float(n) ** k)
        base = gauss_prime(pi)
        if ell % 3 == 2:
            base = base.conjugate()
        return twist * (float(n) ** k) * base
    return 0j


def gauss_fast(mu, c: EisensteinInt) -> GaussSumResult:
    """g(μ, c) via factorization, the local table, and twisted multiplicativity.

    Only the base values g(ϖ) for primes in the support of c are computed by
    summation; everything else is exact bookkeeping.
    """
    if not c.is_primary():
        raise DomainError("gauss sum modulus must be primary")
    mu = _as_shift(mu).reduced()
    pref = 1.0 + 0j
    if mu.lam_exp:
        pref = cubic_symbol(LAMBDA, c).to_complex() ** mu.lam_exp
        mu = LambdaShifted(mu.numerator)
    mu_int = mu.numerator
    partial = ONE
    value = pref
    terms = 1
    for pi, ell in factor(c).primes:
        q = pi ** ell
        local = _gauss_local(mu_int, pi, ell)
        if partial != ONE:
            value = cubic_symbol(partial, q).conj().to_complex() * value * local
        else:
            value = value * local
        terms += pi.norm()
        partial = partial * q
        if value == 0:
            break
    return GaussSumResult(ComplexSum.of(value, terms), c, mu)


def gauss_normalized(c: EisensteinInt) -> complex:
    """g̃(c) = N(c)^{−1/2} g(1, c)."""
    return gauss_fast(ONE, c).value.value / math.sqrt(c.norm())


def gauss_cube_check(pi: EisensteinInt) -> float:
    """Residual |g(ϖ)³ + ϖ²·conj ϖ| of the cube relation g(ϖ)³ = −ϖ²ϖ̄."""
    g = gauss_prime(pi)
    target = (pi * pi * pi.conj()).complex()
    return abs(g ** 3 + target)


# -- Ramanujan sums ---------------------------------------------------------------------

def _valuation(x: EisensteinInt, pi: EisensteinInt) -> int:
    v = 0
    while True:
        q, r = eis_divmod(x, pi)
        if r:
            return v
        x = q
        v += 1


def ramanujan_general(q: EisensteinInt, k) -> Fraction:
    """Normalized Ramanujan sum ψ̂_q(k) = (1/N(q)) Σ_{(u,q)=1} ě(ku/q), exactly.

    Valid for any nonzero modulus (λ-powers allowed) and any shift
    k ∈ λ⁻¹Z[ω].  Because λ⁻¹Z[ω] is the inverse different, the character
    u ↦ ě(ku/Q) is trivial iff Q | λk, so Hölder's evaluation reads

        ψ̂_q(k) = (1/N(q)) · μ(q/G) · φ(q)/φ(q/G),   G = (q, λk).

    For primary q and integral k this is the textbook (q, k) form.
    """
    kappa = LambdaShifted.of(k).times(LAMBDA).reduced()
    if kappa.lam_exp:
        raise DomainError("shift must lie in λ⁻¹Z[ω]")
    kappa = kappa.numerator
    f = factor(q)
    num_mu = 1
    phi_q = 1
    phi_quot = 1
    parts = list(f.primes)
    if f.lambda_exp:
        parts.append((LAMBDA, f.lambda_exp))
    for pi, e in parts:
        n = pi.norm()
        phi_q *= (n - 1) * n ** (e - 1)
        ek = e if not kappa else min(e, _valuation(kappa, pi))
        rem = e - ek  # exponent of ϖ in q/G
        if rem >= 2:
            return Fraction(0)
        if rem == 1:
            num_mu = -num_mu
            phi_quot *= n - 1
    return Fraction(num_mu * phi_q, phi_quot * q.norm())


def ramanujan_closed(r: EisensteinInt, k: EisensteinInt) -> Fraction:
    """ψ̂_r(k) for primary r, as an exact rational."""
    if not r.is_primary():
        raise DomainError("ramanujan_closed requires r ≡ 1 (mod 3)")
    return ramanujan_general(r, k)


def _coprime_mask(c: EisensteinInt, xa: np.ndarray, xb: np.ndarray) -> np.ndarray:
    """Boolean mask of gcd(x, c) = 1 over coordinate arrays."""
    mask = np.ones(xa.shape, dtype=bool)
    f = factor(c)
    if f.lambda_exp:
        mask &= (xa + xb) % 3 != 0
    for pi, _ in f.primes:
        n = pi.norm()
        root = math.isqrt(n)
        if root * root == n and root % 3 == 2:
            mask &= (xa % root != 0) | (xb % root != 0)
        else:
            s, _jt = _split_classifier(pi.a, pi.b)
            mask &= (xa + xb * s) % n != 0
    return mask


def ramanujan_direct(r: EisensteinInt, k: EisensteinInt) -> complex:
    """(1/N(r)) Σ_{(x,r)=1} ě(kx/r) by direct summation (test oracle)."""
    xa, xb = _residue_arrays(r)
    mask = _coprime_mask(r, xa, xb)
    ph = _LinearPhase(LambdaShifted.of(k), r).at_arrays(xa[mask], xb[mask])
    return complex(np.sum(ph)) / r.norm()


def ramanujan_flat_sum(big_r: float, k: EisensteinInt) -> float:
    """Σ_{N(r) ∼ R, r primary} |ψ̂_r(k)| via closed forms (for exponent fitting)."""
    from .core import primary_in_norm_range

    total = 0.0
    for r in primary_in_norm_range(big_r, 2 * big_r):
        total += abs(float(ramanujan_general(r, k)))
    return total


# -- Kloosterman sums --------------------------------------------------------------------

def _require_lam3(x) -> LambdaShifted:
    s = LambdaShifted.of(x).reduced()
    if s.lam_exp > 3:
        raise DomainError("Kloosterman arguments must lie in λ⁻³Z[ω]")
    return s


@lru_cache(maxsize=4)
def _ss_pair_tables(ca: int, cb: int):
    """Per-modulus pair data for the (σ,σ) sum: coordinates of the invertible
    a₀ ≡ 1 (3) residues, of the nine λ-power lifts of a₀ and of d₀ = a₀⁻¹,
    and the symbol values (c/d)₃ on the d-lifts.  Shift-independent."""
    c = EisensteinInt(ca, cb)
    rs = ResidueSystem(c)
    lifts = [t * c for t in ResidueSystem(EisensteinInt(3, 0))]
    rows_a: list[list[tuple[int, int]]] = []
    rows_d: list[list[tuple[int, int]]] = []
    rows_sym: list[list[complex]] = []
    for a0 in rs:
        if (a0.a - 1) % 3 or a0.b % 3:
            continue
        try:
            d0 = inverse_mod(a0, c)
        except DomainError:
            continue
        rows_a.append([(a0.a + t.a, a0.b + t.b) for t in lifts])
        rows_d.append([(d0.a + t.a, d0.b + t.b) for t in lifts])
        rows_sym.append([symbol_complex(c, d0 + t) for t in lifts])
    if not rows_a:
        return None
    a_arr = np.array(rows_a, dtype=np.int64)      # (n0, 9, 2)
    d_arr = np.array(rows_d, dtype=np.int64)
    sym = np.array(rows_sym, dtype=complex)       # (n0, 9)
    return a_arr, d_arr, sym


def kloosterman_ss(m, n, c: EisensteinInt, cap: int = KLOOSTERMAN_CAP) -> ComplexSum:
    """Cusp-pair (σ,σ) cubic Kloosterman sum for c ≡ 0 (mod 3):

        Σ_{a,d mod 3c; a,d ≡ 1 (3); ad ≡ 1 (c)} (c/d)₃ ě((ma+nd)/c).

    Evaluated by one pass over invertible a₀ mod c: a and d range over the 9
    λ-power lifts of a₀ and a₀⁻¹, and the double sum factors per a₀.  The
    shift-independent pair tables are cached per modulus.
    """
    if not c or eis_divmod(c, EisensteinInt(3, 0))[1]:
        raise DomainError("kloosterman_ss requires c ≡ 0 (mod 3)")
    m = _require_lam3(m)
    n = _require_lam3(n)
    if 9 * c.norm() > cap:
        raise ResourceError(f"norm {9 * c.norm()} exceeds Kloosterman cap {cap}")
    tables = _ss_pair_tables(c.a, c.b)
    if tables is None:
        return ComplexSum.of(0j, 0)
    a_arr, d_arr, sym = tables
    ph_m = _LinearPhase(m, c)
    ph_n = _LinearPhase(n, c)
    a_factor = ph_m.at_arrays(a_arr[:, :, 0], a_arr[:, :, 1]).sum(axis=1)
    d_factor = (sym * ph_n.at_arrays(d_arr[:, :, 0], d_arr[:, :, 1])).sum(axis=1)
    total = complex(np.dot(a_factor, d_factor))
    return ComplexSum.of(total, 81 * a_arr.shape[0])


def kloosterman_sx(m, n, c: EisensteinInt, cap: int = KLOOSTERMAN_CAP) -> ComplexSum:
    """Cusp-pair (σ,ξ) cubic Kloosterman sum for primary c:

        Σ_{a,d mod 3c; a,d ≡ 0 (3); ad ≡ 1 (c)} (d/c)₃ ě((ma+nd)/c).

    The congruences mod 3 and mod c are independent (CRT), so each invertible
    a₀ mod c has exactly one admissible lift pair (a, d) mod 3c.
    """
    if not c.is_primary():
        raise DomainError("kloosterman_sx requires c ≡ 1 (mod 3)")
    m = _require_lam3(m)
    n = _require_lam3(n)
    if 9 * c.norm() > cap:
        raise ResourceError(f"norm {9 * c.norm()} exceeds Kloosterman cap {cap}")
    tables = _sx_pair_tables(c.a, c.b)
    ph_m = _LinearPhase(m, c)
    ph_n = _LinearPhase(n, c)
    a_arr, d_arr, sym, terms = tables
    if not terms:
        return ComplexSum.of(0j, 0)
    vals = sym * ph_m.at_arrays(a_arr[:, 0], a_arr[:, 1]) * ph_n.at_arrays(d_arr[:, 0], d_arr[:, 1])
    return ComplexSum.of(complex(np.sum(vals)), terms)


@lru_cache(maxsize=4)
def _sx_pair_tables(ca: int, cb: int):
    """Per-modulus pair data for the (σ,ξ) sum: the unique lifts a, d ≡ 0 (3)
    mod 3c of each invertible pair (a₀, a₀⁻¹) mod c, with (d/c)₃ values."""
    c = EisensteinInt(ca, cb)
    rs = ResidueSystem(c)
    r3 = ResidueSystem(EisensteinInt(3, 0))
    rs3c = ResidueSystem(3 * c)

    def lift_to_zero_mod3(x0: EisensteinInt) -> EisensteinInt:
        # unique t mod 3 with x0 + c·t ≡ 0 (mod 3); c ≡ 1 (mod 3)
        t = r3.reduce(-x0)
        return rs3c.reduce(x0 + c * t)

    rows_a, rows_d, rows_sym = [], [], []
    terms = 0
    for a0 in rs:
        try:
            d0 = inverse_mod(a0, c)
        except DomainError:
            continue
        a = lift_to_zero_mod3(a0)
        d = lift_to_zero_mod3(d0)
        rows_a.append((a.a, a.b))
        rows_d.append((d.a, d.b))
        rows_sym.append(symbol_complex(d, c))
        terms += 1
    if not terms:
        return np.zeros((0, 2), dtype=np.int64), np.zeros((0, 2), dtype=np.int64), np.zeros(0, dtype=complex), 0
    return (
        np.array(rows_a, dtype=np.int64),
        np.array(rows_d, dtype=np.int64),
        np.array(rows_sym, dtype=complex),
        terms,
    )


def kloosterman_brute(variant: str, m, n, c: EisensteinInt) -> complex:
    """O(N(3c)²) double loop straight from the defining sums (test oracle)."""
    m = _require_lam3(m)
    n = _require_lam3(n)
    mod = 3 * c
    rs = ResidueSystem(mod)
    ph_m = _LinearPhase(m, c)
    ph_n = _LinearPhase(n, c)
    reps = list(rs)
    total = 0j
    for a in reps:
        for d in reps:
            if variant == "ss":
                if (a.a - 1) % 3 or a.b % 3 or (d.a - 1) % 3 or d.b % 3:
                    continue
            elif variant == "sx":
                if a.a % 3 or a.b % 3 or d.a % 3 or d.b % 3:
                    continue
            else:
                raise DomainError(f"unknown variant {variant!r}")
            if eis_divmod(a * d - ONE, c)[1]:
                continue
            sym = cubic_symbol(c, d) if variant == "ss" else cubic_symbol(d, c)
            if sym is CubicSymbolValue.ZERO:
                continue
            total += sym.to_complex() * ph_m.at(a) * ph_n.at(d)
    return total


def weil_bound(m, n, c: EisensteinInt) -> float:
    """The printed envelope 2^{ω(c)} · N((m,n,c)) · N(c)^{1/2} (integral m, n).

    For the (σ,ξ) sums over primary c this holds as stated.  For the (σ,σ)
    sums it fails at moduli with λ-valuation ≥ 3: the defining sum runs over
    pairs (a, d) mod 3c with ad ≡ 1 only mod c, and for integral arguments
    the λ-power lifts contribute with no oscillation (ě is trivial on Z[ω]),
    up to a factor [Z[ω]:3Z[ω]]² = 81 of aligned mass — e.g.
    K_{σσ}(−4, 3λ, unit·λ⁵) = 2187 against an envelope of 31.2.  Use
    `weil_bound_covered` for the inequality that holds for every admissible
    modulus.
    """
    from .core import omega_count

    m = LambdaShifted.of(m).integral_value()
    n = LambdaShifted.of(n).integral_value()
    g = eis_gcd(eis_gcd(m, n) if (m or n) else c, c)
    return 2.0 ** omega_count(c) * g.norm() * math.sqrt(c.norm())


def weil_bound_covered(m, n, c: EisensteinInt, variant: str = "ss") -> float:
    """Weil envelope including the covering multiplicity of the cusp pair.

    (σ,ξ): single CRT lift per residue, no correction.  (σ,σ): the (a, d)
    mod 3c lift structure can align completely for integral arguments,
    contributing the factor N(3)² = 81.
    """
    base = weil_bound(m, n, c)
    if variant == "sx":
        return base
    if variant == "ss":
        return 81.0 * base
    raise DomainError(f"unknown variant {variant!r}")


# -- ψ-transforms -------------------------------------------------------------------------

def psi_mod_eta(m: int, r: EisensteinInt, eta: EisensteinInt):
    """The periodic function ψ_{λᵐr}(u)_η = 1_{(u,λᵐr)=1} · ě(−ηu/(λᵐr))."""
    mod = LAMBDA ** m * r
    shift = _LinearPhase(LambdaShifted(-eta), mod)

    def psi(u: EisensteinInt) -> complex:
        if not eis_gcd(u, mod).is_unit():
            return 0j
        return shift.at(u)

    return psi


def psi_sharp(psi, m: int, r: EisensteinInt, zeta: EisensteinInt, u: EisensteinInt) -> complex:
    """ψ♯_ζ(u) = (1/N(λᵐr)) Σ_{ad ≡ 1 (λᵐr); a,d ≡ 1 (3)} ψ(−ζ⁻¹d) ((ζλ^{m−1}r)/d)₃ ě(au/(ζλᵐr)).

    Requires m ≥ 4 so the symbol factor is determined by d mod λᵐr.
    """
    if m < 4:
        raise DomainError("psi_sharp needs m ≥ 4")
    if not r.is_primary():
        raise DomainError("r must be primary")
    if not zeta.is_unit():
        raise DomainError("zeta must be a unit")
    mod = LAMBDA ** m * r
    rs = ResidueSystem(mod)
    zinv = unit_inverse(zeta)
    numer = zeta * LAMBDA ** (m - 1) * r
    # ě(au/(ζλᵐr)) = ě(a·(ζ⁻¹u)/(λᵐr))
    ph = _LinearPhase(LambdaShifted(zinv * u), mod)
    total = 0j
    for a in rs:
        if (a.a - 1) % 3 or a.b % 3:
            continue
        try:
            d = inverse_mod(a, mod)
        except DomainError:
            continue
        val = psi(-(zinv * d))
        if not val:
            continue
        sym = symbol_complex(numer, d)
        if not sym:
            continue
        total += val * sym * ph.at(a)
    return total / mod.norm()


def psi_star(psi, m: int, r: EisensteinInt, u: EisensteinInt) -> complex:
    """ψ″⋆(u) = (1/N(r)) Σ_{(λ^{2m+4}a)(λ^{2m+4}d) ≡ 1 (r)} ψ″(−d) ((λ^{2m+4}d)/r)₃ ě(au/r)."""
    if not r.is_primary():
        raise DomainError("r must be primary")
    if m < 0:
        raise DomainError("m must be ≥ 0")
    rs = ResidueSystem(r)
    lam_pow = rs.reduce(LAMBDA ** (2 * m + 4))
    try:
        lam_inv2 = inverse_mod(lam_pow * lam_pow, r)
    except DomainError:
        raise DomainError("λ must be invertible mod r") from None
    ph = _LinearPhase(LambdaShifted(u), r)
    total = 0j
    for a in rs:
        try:
            a_inv = inverse_mod(a, r)
        except DomainError:
            continue
        d = rs.reduce(lam_inv2 * a_inv)
        val = psi(-d)
        if not val:
            continue
        sym = symbol_complex(lam_pow * d, r)
        if not sym:
            continue
        total += val * sym * ph.at(a)
    return total / r.norm()


# -- Fourier layer and orthogonality -------------------------------------------------------

def fourier_psi(eta: EisensteinInt, m: int, r: EisensteinInt, k) -> complex:
    """Fourier transform of ψ_{λᵐr}(·)_η at k: the shifted normalized Ramanujan sum

        (1/N(λᵐr)) Σ_{(u,λᵐr)=1} ě((k−η)u/(λᵐr)),   k ∈ λ⁻¹Z[ω].
    """
    mod = LAMBDA ** m * r
    delta = LambdaShifted.of(k).plus(LambdaShifted(-eta)).reduced()
    if delta.lam_exp > 1:
        raise DomainError("k must lie in λ⁻¹Z[ω]")
    return complex(float(ramanujan_general(mod, delta)), 0.0)


def orthogonality_check(ell: int, q: EisensteinInt, k: EisensteinInt, eta: EisensteinInt) -> float:
    """Defect of the orthogonality identity

        (1/N(λ^ℓq)) Σ_{r|q} Σ_{m≤ℓ} N(λᵐr) ψ̂_{λᵐr}(·)_{λ⁻¹η}(λ⁻¹k) = δ_{k ≡ η (mod λ^ℓ q)}.

    k and η are the integral numerators of points λ⁻¹k, λ⁻¹η of the dual
    lattice λ⁻¹Z[ω], where ψ̂ lives and where the identity is exact (the
    mod-λ additive layer of Z[ω] itself is invisible to ě, since λ⁻¹Z[ω]
    is the inverse different).  Evaluated in exact rational arithmetic from
    prime valuations of k − η; returns LHS − indicator, identically 0.
    """
    if not q.is_primary():
        raise DomainError("q must be primary")
    if ell < 0:
        raise DomainError("ℓ must be ≥ 0")
    delta = k - eta  # λ·(dual difference); Hölder detects via G = (Q, λ·λ⁻¹δ) = (Q, δ)
    fq = factor(q)
    vals = {}
    if delta:
        v_lam = _valuation(delta, LAMBDA)
        for p, _ in fq.primes:
            vals[(p.a, p.b)] = _valuation(delta, p)
    total = 0
    for r in divisors(fq):
        fr = factor(r)
        for m in range(ell + 1):
            # unnormalized Ramanujan sum N(λᵐr)·ψ̂ = c_{λᵐr}, multiplicative
            term = 1
            parts = list(fr.primes)
            if m:
                parts.append((LAMBDA, m))
            for p, e in parts:
                n = p.norm()
                if not delta:
                    ek = e
                elif p == LAMBDA:
                    ek = min(e, v_lam)
                else:
                    ek = min(e, vals[(p.a, p.b)])
                rem = e - ek
                if rem >= 2:
                    term = 0
                    break
                if rem == 1:
                    term *= -(n ** (e - 1))
                else:
                    term *= (n - 1) * n ** (e - 1)
            total += term
    mod = LAMBDA ** ell * q
    lhs = Fraction(total, mod.norm())
    indicator = 1 if not eis_divmod(delta, mod)[1] else 0
    return float(lhs - indicator)
