#!/usr/bin/env python3
"""Tour of exact arithmetic in Z[ω]: division, factorization, residues.

Everything here is exact integer arithmetic; nothing is floating point.
"""

from cubicsums import (
    LAMBDA,
    ONE,
    ResidueSystem,
    eis,
    eis_divmod,
    eis_gcd,
    euler_phi,
    factor,
    primary_decompose,
    primes_up_to_norm,
)

# ω = e^{2πi/3} satisfies ω² = −1 − ω; the ramified prime is λ = 1 + 2ω = √−3.
w = eis(0, 1)
print("ω² =", w * w, "   ω³ =", w * w * w)
print("λ =", LAMBDA, "  λ² =", LAMBDA * LAMBDA, " (= −3 exactly)")

# Euclidean division rounds to the nearest lattice point: N(r) ≤ (3/4)N(y).
x, y = eis(5, 3), eis(2, 1)
q, r = eis_divmod(x, y)
print(f"\ndivmod({x}, {y}) = (q={q}, r={r}),  N(r)={r.norm()} < N(y)={y.norm()}")

# Unique decomposition unit · λ^k · primary, e.g. 3 = (−1)·λ²·1.
for n in (3, 2, 7, 30):
    d = primary_decompose(eis(n))
    print(f"{n} = ({d.unit}) · λ^{d.lambda_exp} · ({d.primary_part})")

# Split and inert rational primes.
print("\nfactor(7)  :", factor(eis(7)))
print("factor(-2) :", factor(eis(-2)))
print("gcd(λ, 3)  :", eis_gcd(LAMBDA, eis(3)))

# Residue systems are canonical HNF boxes; φ counts the invertibles.
c = eis(4, 1)
rs = ResidueSystem(c)
inv = sum(1 for u in rs if eis_gcd(u, c).is_unit())
print(f"\nmod {c}: {len(rs)} residues, {inv} invertible, φ = {euler_phi(c)}")

# Primary primes stream in nondecreasing norm order.
print("\nfirst primary primes:", ", ".join(f"{p} (N={p.norm()})" for p in list(primes_up_to_norm(20))))
