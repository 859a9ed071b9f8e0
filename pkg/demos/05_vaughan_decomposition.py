#!/usr/bin/env python3
"""Vaughan's identity and the smoothed prime-sum decomposition, exactly.

The three-term identity reproduces Λ(ν) for every primary ν; the smoothed
decomposition P = P₁ − ΣΣ P₂ (with a dyadic partition of unity on the
bilinear layer) is an exact finite-sum identity whenever the third Vaughan
sum is empty on the weight window.
"""

from cubicsums import vaughan_terms, von_mangoldt
from cubicsums.core import eis, primary_in_norm_range, split_prime
from cubicsums.sieve import (
    DyadicPartition,
    SmoothWeight,
    constant_source,
    decomposition_sides,
    gauss_proxy_source,
    synthetic_source,
)

# Three-term identity at a prime, a prime power, and a composite.
print("vaughan_terms(ν, R=10, S=5):  t1 − t2 + t3  vs  Λ(ν)·[N(ν) > S]")
for nu in [split_prime(7), eis(-2) * eis(-2), split_prime(7) * eis(-2), eis(4, 0)]:
    t1, t2, t3 = vaughan_terms(nu, 10.0, 5.0)
    want = von_mangoldt(nu) if nu.norm() > 5 else 0.0
    print(f"  ν={nu} (N={nu.norm():4d}):  {t1 - t2 + t3:+.6f}  vs  {want:+.6f}")

# Partition of unity over the half-octave grid: exact at every integer.
part = DyadicPartition()
print("\npartition of unity Σ_L U(N/L):", [round(part.sum_at(float(n)), 12) for n in (1, 2, 37, 4096)])

# The decomposition identity with the Λ-layer genuinely active:
# R cuts the divisor range while RS exceeds the window, so it is exact.
w = SmoothWeight()
print("\ndecomposition LHS vs P₁ − ΣΣP₂ at X=100, R=300, S=50:")
for name, src in [("constant", constant_source()), ("synthetic", synthetic_source(5)), ("gauss proxy", gauss_proxy_source())]:
    lhs, rhs = decomposition_sides(100.0, 300.0, 50.0, None, src, w, part)
    print(f"  {name:12s}: LHS = {lhs:.8f}, RHS = {rhs:.8f}, |Δ| = {abs(lhs - rhs):.2e}")
