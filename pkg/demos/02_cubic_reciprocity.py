#!/usr/bin/env python3
"""The cubic residue symbol: reciprocity, supplements, oracle agreement.

The production evaluator never factors the denominator; it strips units and
λ-powers with the supplements and swaps by reciprocity, like a Jacobi-symbol
computation.  The power-residue definition a^{(N(ϖ)−1)/3} mod ϖ is kept as a
cross-check oracle.
"""

import random

from cubicsums import LAMBDA, eis, eis_gcd, primes_up_to_norm, supplement_exponents
from cubicsums.symbol import cubic_symbol, cubic_symbol_prime_oracle

OMEGA = eis(0, 1)

print("(ω / −2)₃ =", cubic_symbol(OMEGA, eis(-2)).value)
print("supplements of −2:", supplement_exponents(eis(-2)))

# Reciprocity (a/b)₃ = (b/a)₃ for coprime primary a, b.
rng = random.Random(0)
shown = 0
while shown < 5:
    a = eis(1 + 3 * rng.randint(-8, 8), 3 * rng.randint(-8, 8))
    b = eis(1 + 3 * rng.randint(-8, 8), 3 * rng.randint(-8, 8))
    if not a or not b or not eis_gcd(a, b).is_unit():
        continue
    sab, sba = cubic_symbol(a, b), cubic_symbol(b, a)
    print(f"({a} / {b})₃ = {sab.value:9s} = ({b} / {a})₃ = {sba.value}")
    assert sab == sba
    shown += 1

# Supplements: (ω/d)₃ = ω^{α₂}, (λ/d)₃ = ω^{−α₃} where d ≡ 1 + α₂λ² + α₃λ³ (mod 9).
print("\nsupplement laws on a few primary d:")
for d in [eis(4, 0), eis(1, 3), eis(-2, 3), eis(7, -3)]:
    s = supplement_exponents(d)
    print(
        f"d={d}: (α₂, α₃)=({s.alpha2:+d}, {s.alpha3:+d})  (ω/d)₃={cubic_symbol(OMEGA, d).value}"
        f"  (λ/d)₃={cubic_symbol(LAMBDA, d).value}"
    )

# Oracle agreement on every primary prime up to norm 500.
agree = 0
for pi in primes_up_to_norm(500):
    for _ in range(5):
        a = eis(rng.randint(-30, 30), rng.randint(-30, 30))
        assert cubic_symbol(a, pi) == cubic_symbol_prime_oracle(a, pi)
        agree += 1
print(f"\noracle agreement: {agree} random evaluations, all exact")
