#!/usr/bin/env python3
"""Cubic large-sieve laboratory: ratio grid and the exact Cauchy–Schwarz pair.

For random unit-modulus coefficients Ψ on squarefree primary c ∼ N, the
quadratic form Σ_{d∼M} |Σ_c Ψ_c (d/c)₃|² is compared against the envelope
M^{1/3}(M+N)‖Ψ‖² cell by cell.  Nothing here asserts the theorem's constant;
the inequality |dual|² ≤ ‖Ω‖²·LHS is exact on every instance.
"""

from cubicsums import ZERO, bilinear_lhs, delta_additive, dual_bilinear, grid_report, random_instance
from cubicsums.core import eis
from cubicsums.largesieve import delta_primitive_layer

rows = grid_report([8.0, 16.0, 32.0, 64.0], [8.0, 16.0, 32.0, 64.0], seeds=list(range(8)), with_omega=True)
print("M     N     max ratio   worst CS slack")
for m in (8.0, 16.0, 32.0, 64.0):
    for n in (8.0, 16.0, 32.0, 64.0):
        cell = [r for r in rows if r["M"] == m and r["N"] == n and r["ratio"] is not None]
        if not cell:
            continue
        max_ratio = max(r["ratio"] for r in cell)
        slack = min(r["cs_bound"] - r["dual_sq"] for r in cell)
        print(f"{m:5.0f} {n:5.0f}   {max_ratio:9.4f}   {slack:12.4f}")

# δ-detection: additive characters give the exact congruence indicator.
q = eis(4, 1)
hits = [delta_additive(a, q) for a in [ZERO, eis(4, 1), eis(1, 0), eis(2, 2)]]
print("\nδ(a ≡ 0 mod 4+1ω) on [0, q, 1, 2+2ω]:", [round(abs(h), 12) for h in hits])

# The primitive layer of the circle method is a Ramanujan-sum table.
print("\nprimitive-character layer at a = 0 (each entry = φ(c)):")
for c, val in delta_primitive_layer(ZERO, 20):
    print(f"  c={c} (N={c.norm():2d}): {val:.1f}")
