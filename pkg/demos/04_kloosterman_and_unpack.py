#!/usr/bin/env python3
"""Cubic Kloosterman sums, the Weil envelope, and the ψ-transform unpacking.

The (σ,σ) sums live over moduli c ≡ 0 (mod 3), with index pairs mod 3c; the
(σ,ξ) sums over primary c.  The ψ♯/ψ⋆ character transforms of periodic
functions evaluate, exactly, to normalized Kloosterman sums — a finite-sum
identity checked here term by term.
"""

import random

from cubicsums import (
    LAMBDA,
    ResidueSystem,
    eis,
    eis_gcd,
    kloosterman_ss,
    kloosterman_sx,
    psi_mod_eta,
    psi_sharp,
    psi_star,
    weil_bound,
    weil_bound_covered,
)
from cubicsums.core import UNITS, inverse_mod, split_prime

rng = random.Random(1)

print("(σ,σ) sums against the Weil envelope:")
for c in [eis(3, 0), eis(3, 3), eis(-6, 3)]:
    while True:
        m = eis(rng.randint(-6, 6), rng.randint(-6, 6))
        n = eis(rng.randint(-6, 6), rng.randint(-6, 6))
        if (m or n) and eis_gcd(eis_gcd(m, n), c).is_unit():
            break
    val = kloosterman_ss(m, n, c).value
    print(f"  c={c}: |K({m}, {n})| = {abs(val):8.4f}  ≤ covered bound {weil_bound_covered(m, n, c, 'ss'):.2f}")

# The printed constant-free bound fails at λ-heavy moduli: full lift alignment.
c = eis(18, 9)  # = −ω·λ⁵
val = abs(kloosterman_ss(eis(-4), eis(3, 6), c).value)
print(f"\nλ-heavy counterexample c = {c} = −ω·λ⁵:")
print(f"  |K| = {val:.1f}, printed bound = {weil_bound(eis(-4), eis(3, 6), c):.2f}, "
      f"covered bound = {weil_bound_covered(eis(-4), eis(3, 6), c, 'ss'):.2f}")

# Unpack identity: ψ♯ of the shifted principal character IS a Kloosterman sum.
m, r, zeta = 6, split_prime(7), UNITS[2]
eta, nu3 = eis(2, -1), eis(1, 1)
psi = psi_mod_eta(m, r, LAMBDA * eta)
lhs = psi_sharp(psi, m, r, zeta, LAMBDA * nu3)
rhs = kloosterman_ss(nu3, eta, zeta * LAMBDA ** (m - 1) * r, cap=10 ** 7).value / (LAMBDA ** (m + 3) * r).norm()
print(f"\nψ♯ unpacking at (m={m}, r={r}, ζ={zeta}):")
print(f"  ψ♯(λ⁴ν)          = {lhs:.12f}")
print(f"  K_σσ/N(λ^{m+3}r) = {rhs:.12f}")

# And the ψ⋆ variant against the (σ,ξ) sum.
m2, r2 = 1, split_prime(13)
psi2 = psi_mod_eta(0, r2, LAMBDA ** (2 * m2 + 1) * eta)
lhs2 = psi_star(psi2, m2, r2, LAMBDA * nu3)
rs = ResidueSystem(r2)
rhs2 = kloosterman_sx(
    inverse_mod(rs.reduce(LAMBDA ** (2 * m2 + 3)), r2) * nu3,
    inverse_mod(rs.reduce(LAMBDA ** 3), r2) * eta,
    r2,
).value / r2.norm()
print(f"\nψ⋆ unpacking at (m={m2}, r={r2}):")
print(f"  ψ⋆(λ^{2 * m2 + 4}ν) = {lhs2:.12f}")
print(f"  K_σξ/N(r)      = {rhs2:.12f}")
