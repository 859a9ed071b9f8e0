"""Exact-arithmetic cubic character and exponential sums over Z[ω].

Layers:
    core       — Eisenstein integers, division theory, factorization,
                 multiplicative functions, residue systems, prime streams
    symbol     — the cubic residue symbol via reciprocity (+ oracle)
    expsums    — Gauss / Ramanujan / Kloosterman sums and the ψ-transforms
    sieve      — Vaughan's identity, smooth weights, dyadic partitions,
                 prime-sum and Type-I/II builders over coefficient sources
    largesieve — cubic large-sieve bilinear forms and δ-detection layer
    verify     — named invariant suites (the `verify-all` registry)
    cli        — command-line front end
"""

from .core import (
    LAMBDA,
    OMEGA,
    ONE,
    UNITS,
    ZERO,
    DomainError,
    EisensteinInt,
    Factorization,
    PrimaryDecomposition,
    ResidueSystem,
    UnsupportedRangeError,
    canonical_associate,
    divisors,
    eis,
    eis_divmod,
    eis_gcd,
    euler_phi,
    factor,
    mobius,
    primary_decompose,
    primes_up_to_norm,
    rad,
    sigma_b,
    von_mangoldt,
)
from .expsums import (
    ComplexSum,
    GaussSumResult,
    LambdaShifted,
    e_check,
    fourier_psi,
    gauss_cube_check,
    gauss_direct,
    gauss_fast,
    gauss_normalized,
    gauss_prime,
    kloosterman_brute,
    kloosterman_ss,
    kloosterman_sx,
    orthogonality_check,
    psi_mod_eta,
    psi_sharp,
    psi_star,
    ramanujan_closed,
    ramanujan_direct,
    ramanujan_flat_sum,
    weil_bound,
    weil_bound_covered,
)
from .largesieve import (
    SieveInstance,
    bilinear_lhs,
    delta_additive,
    delta_primitive_layer,
    dual_bilinear,
    grid_report,
    hb_ratio,
    random_instance,
)
from .sieve import (
    CoefficientSource,
    DyadicPartition,
    ProgressionConstraint,
    SmoothWeight,
    constant_source,
    gauss_proxy_source,
    prime_sum_sharp,
    smoothed_prime_sum,
    synthetic_source,
    type1_average,
    type1_pointwise,
    type2_bilinear,
    vaughan_decomposition_check,
    vaughan_terms,
)
from .symbol import CubicSymbolValue, cubic_symbol, cubic_symbol_prime_oracle, supplement_exponents

__version__ = "0.1.0"
