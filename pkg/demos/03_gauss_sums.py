#!/usr/bin/env python3
"""Cubic Gauss sums: square-root cancellation, the cube relation, fast paths.

g(μ, c) = Σ_{d mod c} (d/c)₃ ě(μd/c) with ě(z) = e^{2πi(z+z̄)}.  The fast
evaluator uses the prime-power table and twisted multiplicativity; only the
base values g(ϖ) are ever summed directly.
"""

import math

from cubicsums import eis, factor, gauss_cube_check, gauss_direct, gauss_fast, gauss_prime
from cubicsums.core import primary_in_norm_range, primes_up_to_norm, split_prime

pi7 = split_prime(7)
print(f"ϖ = {pi7} splits 7;  g(ϖ) = {gauss_prime(pi7):.6f},  |g(ϖ)| = {abs(gauss_prime(pi7)):.6f} = √7")

# The cube of a prime Gauss sum is algebraic: g(ϖ)³ = −ϖ²·conj(ϖ).
print("\ncube relation residuals |g(ϖ)³ + ϖ²ϖ̄|:")
for pi in list(primes_up_to_norm(60)):
    print(f"  N(ϖ)={pi.norm():3d}: {gauss_cube_check(pi):.2e}")

# Square-root cancellation |g(c)| = μ²(c)·√N(c): exact 0 on non-squarefree c.
print("\n|g(1, c)| against μ²(c)√N(c):")
for c in list(primary_in_norm_range(40, 120))[:6]:
    g = gauss_fast(eis(1), c).value.value
    mu2 = 1 if factor(c).is_squarefree() else 0
    print(f"  c={c} (N={c.norm():4d}, μ²={mu2}): |g| = {abs(g):9.5f}, μ²√N = {mu2 * math.sqrt(c.norm()):9.5f}")

# Fast multiplicative path vs direct summation, including a λ⁻¹-shift.
from cubicsums import LambdaShifted

c = split_prime(13) * eis(-2)
for mu in [LambdaShifted(eis(1)), LambdaShifted(eis(2, 1)), LambdaShifted(eis(5, -1), 1)]:
    f = gauss_fast(mu, c).value.value
    d = gauss_direct(mu, c).value.value
    print(f"\n  g(({mu.numerator})·λ^-{mu.lam_exp}, {c}):")
    print(f"    fast   = {f:.10f}")
    print(f"    direct = {d:.10f}   (difference {abs(f - d):.2e})")
