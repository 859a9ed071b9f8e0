#!/usr/bin/env python3
"""Partial sums of normalized Gauss sums over primary primes.

Each g̃(ϖ) = g(ϖ)/√N(ϖ) has modulus 1, yet the partial sums grow much more
slowly than the prime count: the normalized ratio decays visibly across
decades.  (Only the qualitative cancellation is examined here.)
"""

import math

from cubicsums import gauss_prime
from cubicsums.core import primes_up_to_norm

total = 0j
count = 0
done = 0
print("      X    #primes      Re Σg̃        Im Σg̃      |Σg̃|/#")
for x in (10 ** 2, 10 ** 3, 10 ** 4):
    for pi in primes_up_to_norm(x):
        if pi.norm() <= done:
            continue
        total += gauss_prime(pi) / math.sqrt(pi.norm())
        count += 1
    done = x
    print(f"{x:7d} {count:10d} {total.real:12.4f} {total.imag:12.4f} {abs(total) / count:10.4f}")

print("\nNote the positive real drift: conjugate primes contribute 2·Re g̃(ϖ).")
