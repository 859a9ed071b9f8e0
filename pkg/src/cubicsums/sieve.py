"""Vaughan's identity over Z[ω] and the prime-sum / Type-I / Type-II builders.

The von Mangoldt decomposition is exercised in two forms: the pointwise
three-term identity (`vaughan_terms`) and the smoothed decomposition of the
weighted prime sum into a μ·log layer minus a dyadically partitioned Λ-layer
(`vaughan_decomposition_check`), which is an exact finite-sum identity.

Coefficient sources stand in for the (non-computable) Fourier coefficients:
a deterministic pseudo-random source, a constant source, and the normalized
cubic Gauss sum g̃ of the primary part of λ³ν.  All sums take ν through the
exact λ⁻³-shifted representation, never floats.

Cutoff conventions: smoothed and Type sums weigh N(λ⁻³·)/X exactly as the
source formulas do; the sharp prime sums cut at N(ϖᵏ) ≤ X (integral norms,
a factor-27 reparametrization of the same sums).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import (
    LAMBDA,
    ONE,
    DomainError,
    EisensteinInt,
    eis_divmod,
    eis_gcd,
    factor,
    inverse_mod,
    primary_in_norm_range,
    primes_up_to_norm,
    von_mangoldt,
)
from .expsums import LambdaShifted, gauss_normalized

__all__ = [
    "SmoothWeight",
    "DyadicPartition",
    "CoefficientSource",
    "constant_source",
    "synthetic_source",
    "gauss_proxy_source",
    "ProgressionConstraint",
    "vaughan_terms",
    "prime_sum_sharp",
    "PrimeSums",
    "smoothed_prime_sum",
    "type1_pointwise",
    "type1_average",
    "type2_bilinear",
    "vaughan_decomposition_check",
    "decomposition_sides",
]

# -- smooth weights -----------------------------------------------------------------

def _bump(x: float) -> float:
    if x <= 1.0 or x >= 2.0:
        return 0.0
    return math.exp(4.0 + 1.0 / ((x - 1.0) * (x - 2.0)))


def _smoothstep(t: float) -> float:
    if t <= 0.0:
        return 0.0
    if t >= 1.0:
        return 1.0
    a = math.exp(-1.0 / t)
    b = math.exp(-1.0 / (1.0 - t))
    return a / (a + b)


@dataclass(frozen=True)
class SmoothWeight:
    """Smooth cutoff W_{K,M} supported in [1,2] with |W^{(j)}| ≤ C_j·M·K^j.

    profile "bump": M · exp(4 + 1/((x−1)(x−2))), K-independent (so the
    derivative contract holds trivially for every K ≥ 1).
    profile "plateau": the Δ = 1/K family used to unsmooth sharp cutoffs —
    1 on [5/4, 7/4], C∞ edges of width Δ, support [5/4−Δ, 7/4+Δ] ⊂ [1,2]
    (needs K ≥ 4).
    """

    K: float = 1.0
    M: float = 1.0
    profile: str = "bump"

    #: calibrated suprema of |base^{(j)}| over both profile families, j = 0..3
    DERIV_BOUNDS = (1.0, 4.5, 34.0, 480.0)

    def __post_init__(self) -> None:
        if self.K < 1 or self.M < 1:
            raise DomainError("SmoothWeight requires K, M ≥ 1")
        if self.profile not in ("bump", "plateau"):
            raise DomainError(f"unknown profile {self.profile!r}")
        if self.profile == "plateau" and self.K < 4:
            raise DomainError("plateau profile needs K ≥ 4 so that Δ = 1/K ≤ 1/4")

    def __call__(self, x: float) -> float:
        if self.profile == "bump":
            return self.M * _bump(x)
        d = 1.0 / self.K
        if x <= 1.25 - d or x >= 1.75 + d:
            return 0.0
        if x < 1.25:
            return self.M * _smoothstep((x - (1.25 - d)) / d)
        if x <= 1.75:
            return self.M
        return self.M * _smoothstep(((1.75 + d) - x) / d)

    def support(self) -> tuple[float, float]:
        if self.profile == "bump":
            return (1.0, 2.0)
        return (1.25 - 1.0 / self.K, 1.75 + 1.0 / self.K)

    def derivative_estimate(self, x: float, j: int, h: float | None = None) -> float:
        """Central finite-difference estimate of W^{(j)}(x), j ≤ 3."""
        if h is None:
            h = 1e-3 / self.K
        if j == 0:
            return self(x)
        if j == 1:
            return (self(x + h) - self(x - h)) / (2 * h)
        if j == 2:
            return (self(x + h) - 2 * self(x) + self(x - h)) / (h * h)
        if j == 3:
            return (self(x + 2 * h) - 2 * self(x + h) + 2 * self(x - h) - self(x - 2 * h)) / (2 * h ** 3)
        raise DomainError("derivative_estimate supports j ≤ 3")

    def derivative_bound(self, j: int) -> float:
        return self.DERIV_BOUNDS[j] * self.M * self.K ** j


# -- dyadic partition of unity ----------------------------------------------------------

class DyadicPartition:
    """Partition of unity Σ_L U(x/L) = 1 over the half-octave grid L = √2^j.

    U(x) = φ(x)/D(x) with φ a fixed C∞ bump on (1,2) and D(x) = Σ_j φ(x/√2^j);
    D is √2-scale invariant and strictly positive (consecutive half-octave
    windows overlap), so the partition identity is exact for every x > 0.
    A smooth U supported in [1,2] cannot do this over integer powers of 2:
    it vanishes at both endpoints, leaving every x = 2^k uncovered.
    """

    ratio = math.sqrt(2.0)

    def unnormalized(self, x: float) -> float:
        return _bump(x)

    def _denominator(self, x: float) -> float:
        j0 = math.floor(math.log(x, self.ratio))
        total = 0.0
        for j in range(j0 - 2, j0 + 3):
            total += _bump(x / self.ratio ** j)
        return total

    def u(self, x: float) -> float:
        """The base profile U: smooth, supported in [1,2]."""
        if x <= 1.0 or x >= 2.0:
            return 0.0
        return _bump(x) / self._denominator(x)

    def grid(self, lo: float, hi: float) -> list[float]:
        """Grid values L = √2^j with windows (L, 2L) meeting (lo, hi)."""
        j_lo = math.floor(math.log(max(lo, 1e-9) / 2.0, self.ratio))
        j_hi = math.ceil(math.log(max(hi, 1e-9), self.ratio))
        return [self.ratio ** j for j in range(j_lo, j_hi + 1)]

    def weights(self, x: float) -> list[tuple[float, float]]:
        """Nonzero (L, U(x/L)) pairs; their U-values sum to 1."""
        if x <= 0:
            raise DomainError("partition argument must be positive")
        out = []
        j0 = math.floor(math.log(x, self.ratio))
        for j in range(j0 - 2, j0 + 3):
            w = self.u(x / self.ratio ** j)
            if w:
                out.append((self.ratio ** j, w))
        return out

    def sum_at(self, x: float) -> float:
        return sum(w for _, w in self.weights(x))


# -- coefficient sources ------------------------------------------------------------------

def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


@dataclass
class CoefficientSource:
    """Pluggable map ν ↦ complex coefficient on λ⁻³Z[ω] (|value| ≤ 1).

    kind "constant": the constant `value`.
    kind "synthetic": reproducible pseudo-random values from `seed`.
    kind "gauss": g̃ of the primary part of λ³ν — the normalized cubic Gauss
    sum proxy (the unit and λ-power of λ³ν are dropped, deterministically).
    """

    kind: str
    seed: int = 0
    value: complex = 1.0 + 0j
    _cache: dict = field(default_factory=dict, repr=False)

    def __call__(self, nu: LambdaShifted) -> complex:
        nu = LambdaShifted.of(nu).reduced()
        if nu.lam_exp > 3:
            raise DomainError("coefficient source expects ν ∈ λ⁻³Z[ω]")
        x = nu.numerator * LAMBDA ** (3 - nu.lam_exp)
        if self.kind == "constant":
            return self.value
        if self.kind == "synthetic":
            h1 = _splitmix64(self.seed * 0x100000001 + (x.a & 0xFFFFFFFF) * 2654435761 + x.b)
            h2 = _splitmix64(h1)
            radius = (h1 >> 11) / float(1 << 53)
            angle = 2 * math.pi * ((h2 >> 11) / float(1 << 53))
            return radius * complex(math.cos(angle), math.sin(angle))
        if self.kind == "gauss":
            if not x:
                return 0j
            from .core import primary_decompose

            c = primary_decompose(x).primary_part
            key = (c.a, c.b)
            got = self._cache.get(key)
            if got is None:
                got = gauss_normalized(c)
                self._cache[key] = got
            return got
        raise DomainError(f"unknown coefficient source kind {self.kind!r}")


def constant_source(value: complex = 1.0 + 0j) -> CoefficientSource:
    return CoefficientSource("constant", value=value)


def synthetic_source(seed: int) -> CoefficientSource:
    return CoefficientSource("synthetic", seed=seed)


def gauss_proxy_source() -> CoefficientSource:
    return CoefficientSource("gauss")


# -- progressions ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProgressionConstraint:
    """λ³ν ≡ u (mod v) with v ≡ 0 (mod 3), u ≡ 1 (mod 3), (u, v) = 1."""

    v: EisensteinInt
    u: EisensteinInt

    def __post_init__(self) -> None:
        if eis_divmod(self.v, EisensteinInt(3, 0))[1]:
            raise DomainError("modulus v must be ≡ 0 (mod 3)")
        if not self.u.is_primary():
            raise DomainError("residue u must be ≡ 1 (mod 3)")
        if not eis_gcd(self.u, self.v).is_unit():
            raise DomainError("(u, v) = 1 is required")


#: minimal constraint: λ³ν ≡ 1 (mod 3), i.e. λ³ν primary and nothing more
TRIVIAL_CONSTRAINT = ProgressionConstraint(EisensteinInt(3, 0), ONE)


def _congruence(constraint: ProgressionConstraint | None) -> tuple[EisensteinInt, EisensteinInt]:
    c = constraint or TRIVIAL_CONSTRAINT
    return c.u, c.v


# -- Vaughan's identity -----------------------------------------------------------------------

def vaughan_terms(nu: EisensteinInt, R: float, S: float) -> tuple[float, float, float]:
    """The three sums of Vaughan's identity for Λ(ν), ν primary:

        t1 = Σ_{a|ν, N(a)≤R} μ(a)·log(N(ν)/N(a))
        t2 = ΣΣ_{ab|ν, N(a)≤R, N(b)≤S} μ(a)·Λ(b)
        t3 = ΣΣ_{ab|ν, N(a)>R, N(b)>S} μ(a)·Λ(b)

    t1 − t2 + t3 equals Λ(ν) when N(ν) > S and 0 when N(ν) ≤ S.
    """
    if not nu.is_primary():
        raise DomainError("vaughan_terms requires primary ν")
    if R < 1 or S < 1:
        raise DomainError("vaughan_terms requires R, S ≥ 1")
    n_nu = nu.norm()
    f = factor(nu)
    parts = list(f.primes)
    if f.lambda_exp:
        parts.append((LAMBDA, f.lambda_exp))
    norms = [p.norm() for p, _ in parts]
    logs = [math.log(n) for n in norms]
    t1 = 0.0
    t2 = 0.0
    t3 = 0.0
    # μ(a) ≠ 0 forces a squarefree, so a runs over subsets of the prime support;
    # Λ(b) ≠ 0 forces b = ϖʲ, with j ≤ e_ϖ(ν) − e_ϖ(a) for ab | ν
    for mask in range(1 << len(parts)):
        mu_a = 1
        na = 1
        for i in range(len(parts)):
            if mask >> i & 1:
                mu_a = -mu_a
                na *= norms[i]
        if na <= R:
            t1 += mu_a * math.log(n_nu / na)
        for i, (_, e) in enumerate(parts):
            avail = e - (mask >> i & 1)
            nb = 1
            for _j in range(avail):
                nb *= norms[i]
                if na <= R and nb <= S:
                    t2 += mu_a * logs[i]
                elif na > R and nb > S:
                    t3 += mu_a * logs[i]
    return t1, t2, t3


# -- prime sums -------------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeSums:
    prime_only: complex      # Σ over primes ϖ of src(λ⁻³ϖ)·log N(ϖ)
    lambda_weighted: complex  # Σ over prime powers ϖᵏ of src(λ⁻³ϖᵏ)·log N(ϖ)


def _prime_powers_up_to(x: float):
    """(ϖᵏ, log N(ϖ), k) for primary prime powers of norm ≤ x."""
    for pi in primes_up_to_norm(x):
        n = pi.norm()
        logn = math.log(n)
        power = pi
        k = 1
        while power.norm() <= x:
            yield power, logn, k
            power = power * pi
            k += 1


def prime_sum_sharp(
    x: float,
    constraint: ProgressionConstraint | None,
    src: CoefficientSource,
) -> PrimeSums:
    """Sharp prime sums with src in place of the cusp-form coefficients:

        prime_only      = Σ_{ϖ ≡ u (v), N(ϖ) ≤ X} src(λ⁻³ϖ) log N(ϖ)
        lambda_weighted = Σ_{ν: λ³ν = ϖᵏ ≡ u (v), N(ϖᵏ) ≤ X} src(ν) Λ(λ³ν)

    Cutoffs are on the integral norm N(ϖᵏ) (factor-27 reparametrization of
    the λ⁻³-normalized originals).
    """
    if x < 2:
        raise DomainError("prime_sum_sharp requires X ≥ 2")
    u, v = _congruence(constraint)
    prime_only = 0j
    weighted = 0j
    for power, logn, k in _prime_powers_up_to(x):
        if eis_divmod(power - u, v)[1]:
            continue
        coeff = src(LambdaShifted(power, 3))
        weighted += coeff * logn
        if k == 1:
            prime_only += coeff * logn
    return PrimeSums(prime_only, weighted)


def smoothed_prime_sum(
    x: float,
    constraint: ProgressionConstraint | None,
    src: CoefficientSource,
    weight: SmoothWeight,
) -> complex:
    """Σ_{ν ∈ λ⁻³Z[ω], λ³ν ≡ u (v)} src(ν) Λ(λ³ν) W(N(ν)/X).

    The support of W confines N(ν) to [X, 2X], i.e. N(λ³ν) ∈ [27X, 54X];
    only prime powers contribute through Λ.
    """
    if x < 2:
        raise DomainError("smoothed_prime_sum requires X ≥ 2")
    u, v = _congruence(constraint)
    lo, hi = weight.support()
    total = 0j
    for power, logn, _k in _prime_powers_up_to(27 * hi * x):
        n = power.norm()
        if n < 27 * lo * x:
            continue
        if eis_divmod(power - u, v)[1]:
            continue
        w = weight(n / (27.0 * x))
        if w:
            total += src(LambdaShifted(power, 3)) * logn * w
    return total


# -- Type-I / Type-II sums -----------------------------------------------------------------------

def type1_pointwise(
    a: EisensteinInt,
    x: float,
    constraint: ProgressionConstraint | None,
    src: CoefficientSource,
    weight: SmoothWeight,
) -> complex:
    """Σ_{b: ab ≡ u (mod v)} src(λ⁻³ab) W(N(λ⁻³ab)/X) for fixed primary a."""
    if not a.is_primary():
        raise DomainError("type1_pointwise requires a ≡ 1 (mod 3)")
    u, v = _congruence(constraint)
    if not eis_gcd(a, v).is_unit():
        raise DomainError("(a, v) = 1 is required")
    lo, hi = weight.support()
    na = a.norm()
    total = 0j
    # b ≡ a⁻¹u (mod v): enumerate the coset inside the norm window
    b0 = inverse_mod(eis_divmod(a, v)[1], v) * u
    for b in _coset_in_annulus(b0, v, 27 * lo * x / na, 27 * hi * x / na):
        h = a * b
        w = weight(h.norm() / (27.0 * x))
        if w:
            total += src(LambdaShifted(h, 3)) * w
    return total


def _coset_in_annulus(b0: EisensteinInt, v: EisensteinInt, lo: float, hi: float):
    """All b ≡ b0 (mod v) with lo ≤ N(b) ≤ hi, walked over the v-lattice."""
    rv = eis_divmod(b0, v)[1]
    if hi < 0:
        return
    reach = (math.sqrt(max(hi, 0.0)) + math.sqrt(rv.norm())) / math.sqrt(v.norm())
    bound = int(1.2 * reach) + 2
    for ka in range(-bound, bound + 1):
        for kb in range(-bound, bound + 1):
            b = rv + v * EisensteinInt(ka, kb)
            if lo <= b.norm() <= hi:
                yield b


def type1_average(
    alpha: dict[EisensteinInt, complex],
    x: float,
    constraint: ProgressionConstraint | None,
    src: CoefficientSource,
    weight: SmoothWeight,
) -> complex:
    """ΣΣ_{ab ≡ u (v)} μ²(a) α_a src(λ⁻³ab) W(N(λ⁻³ab)/X)."""
    u, v = _congruence(constraint)
    total = 0j
    for a, wa in alpha.items():
        if not wa or not a.is_primary():
            continue
        if not factor(a).is_squarefree() or not eis_gcd(a, v).is_unit():
            continue
        total += wa * type1_pointwise(a, x, constraint, src, weight)
    return total


def type2_bilinear(
    alpha: dict[EisensteinInt, complex],
    beta: dict[EisensteinInt, complex],
    x: float,
    constraint: ProgressionConstraint | None,
    src: CoefficientSource,
    weight: SmoothWeight,
) -> complex:
    """ΣΣ_{ab ≡ u (v)} μ²(a) α_a β_b src(λ⁻³ab) W(N(λ⁻³ab)/X)."""
    u, v = _congruence(constraint)
    lo, hi = weight.support()
    total = 0j
    for a, wa in alpha.items():
        if not wa or not a.is_primary():
            continue
        if not factor(a).is_squarefree():
            continue
        na = a.norm()
        for b, wb in beta.items():
            if not wb:
                continue
            h = a * b
            n = h.norm()
            if n < 27 * lo * x or n > 27 * hi * x:
                continue
            if eis_divmod(h - u, v)[1]:
                continue
            w = weight(n / (27.0 * x))
            if w:
                total += wa * wb * src(LambdaShifted(h, 3)) * w
    return total


# -- the decomposition identity ---------------------------------------------------------------------

def decomposition_sides(
    x: float,
    R: float,
    S: float,
    constraint: ProgressionConstraint | None,
    src: CoefficientSource,
    weight: SmoothWeight,
    partition: DyadicPartition,
) -> tuple[complex, complex]:
    """(LHS, RHS) of the Vaughan decomposition of the smoothed prime sum:

        LHS = Σ src(ν) Λ(λ³ν) W(N(ν)/X)           over λ³ν ≡ u (v)
        RHS = P1 − ΣΣ_{M,N dyadic} P2(M, N)

    with P1 the μ·log layer over N(a) ≤ R and P2 the μΛ layer over
    N(a) ≤ R, N(b) ≤ S carrying the partition weights U(N(a)/M) U(N(b)/N).
    Exact as a finite-sum identity whenever S < 27·X·(left edge of supp W)
    and RS ≥ 54·X (so the third Vaughan sum is empty on the window).
    """
    u, v = _congruence(constraint)
    lo, hi = weight.support()
    lhs = 0j
    p1 = 0j
    # P2 accumulated per dyadic cell, honestly weighted by the partition
    cells: dict[tuple[float, float], complex] = {}
    for h in primary_in_norm_range(27 * lo * x - 1, 27 * hi * x, (u, v)):
        n_h = h.norm()
        w = weight(n_h / (27.0 * x))
        if not w:
            continue
        coeff = src(LambdaShifted(h, 3)) * w
        parts = list(factor(h).primes)
        norms = [p.norm() for p, _ in parts]
        logs = [math.log(n) for n in norms]
        if len(parts) == 1:
            lhs += coeff * logs[0]  # Λ(h) = log N(ϖ) for h = ϖᵉ
        for mask in range(1 << len(parts)):
            mu_a = 1
            na = 1
            for i in range(len(parts)):
                if mask >> i & 1:
                    mu_a = -mu_a
                    na *= norms[i]
            if na > R:
                continue
            p1 += coeff * mu_a * math.log(n_h / na)
            a_weights = partition.weights(na)
            for i, (_, e) in enumerate(parts):
                avail = e - (mask >> i & 1)
                nb = 1
                for _j in range(avail):
                    nb *= norms[i]
                    if nb > S:
                        break
                    contrib = coeff * mu_a * logs[i]
                    for mm, uw_a in a_weights:
                        for nn, uw_b in partition.weights(nb):
                            key = (mm, nn)
                            cells[key] = cells.get(key, 0j) + contrib * uw_a * uw_b
    rhs = p1 - sum(cells.values(), 0j)
    return lhs, rhs


def vaughan_decomposition_check(
    x: float,
    R: float,
    S: float,
    constraint: ProgressionConstraint | None,
    src: CoefficientSource,
    weight: SmoothWeight,
    partition: DyadicPartition | None = None,
) -> float:
    """|LHS − RHS| of the decomposition, with (R, S) gated by the admissibility
    condition S < X/10⁴ and 10⁴·X < R·S < 10⁷·X."""
    if not (S < x / 10000.0):
        raise DomainError("inadmissible S: need S < X/10000")
    if not (10000.0 * x < R * S < 10000000.0 * x):
        raise DomainError("inadmissible (R, S): need 10000X < RS < 10000000X")
    lhs, rhs = decomposition_sides(x, R, S, constraint, src, weight, partition or DyadicPartition())
    return abs(lhs - rhs)
