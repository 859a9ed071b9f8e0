"""Vaughan's identity, smooth weights, partitions, prime and Type sums."""

import math
import random

import pytest

from cubicsums.core import (
    LAMBDA,
    ONE,
    ZERO,
    DomainError,
    eis,
    eis_divmod,
    primary_in_norm_range,
    primes_up_to_norm,
    split_prime,
    von_mangoldt,
)
from cubicsums.expsums import LambdaShifted
from cubicsums.sieve import (
    CoefficientSource,
    DyadicPartition,
    ProgressionConstraint,
    SmoothWeight,
    constant_source,
    decomposition_sides,
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

PI7 = split_prime(7)


class TestSmoothWeight:
    def test_support_and_positivity(self):
        w = SmoothWeight()
        assert w(0.99) == 0 and w(1.0) == 0 and w(2.0) == 0 and w(2.3) == 0
        assert w(1.5) == pytest.approx(1.0)
        assert all(w(1 + i / 50) >= 0 for i in range(1, 50))

    def test_plateau_shape(self):
        w = SmoothWeight(K=10, profile="plateau")
        lo, hi = w.support()
        assert lo == pytest.approx(1.15) and hi == pytest.approx(1.85)
        assert w(1.25) == 1.0 and w(1.5) == 1.0 and w(1.75) == 1.0
        assert w(1.14) == 0.0 and w(1.86) == 0.0
        with pytest.raises(DomainError):
            SmoothWeight(K=2, profile="plateau")

    @pytest.mark.parametrize(
        "w",
        [SmoothWeight(), SmoothWeight(K=8, M=2), SmoothWeight(K=16, profile="plateau"), SmoothWeight(K=4, M=3, profile="plateau")],
    )
    def test_derivative_contract(self, w):
        for j in range(4):
            bound = w.derivative_bound(j)
            for i in range(64):
                x = 1.0 + (i + 0.5) / 64.0
                assert abs(w.derivative_estimate(x, j)) <= bound * 1.05 + 1e-6

    def test_parameter_validation(self):
        with pytest.raises(DomainError):
            SmoothWeight(K=0.5)
        with pytest.raises(DomainError):
            SmoothWeight(profile="box")


class TestDyadicPartition:
    def test_partition_of_unity_random(self):
        part = DyadicPartition()
        rng = random.Random(1)
        for _ in range(10_000):
            n = rng.randint(1, 10 ** 6)
            assert abs(part.sum_at(float(n)) - 1.0) <= 1e-10

    def test_powers_of_two_covered(self):
        # the half-octave grid exists precisely to cover x = 2^k exactly
        part = DyadicPartition()
        for k in range(0, 21):
            assert abs(part.sum_at(float(2 ** k)) - 1.0) <= 1e-12

    def test_base_profile_support(self):
        part = DyadicPartition()
        assert part.u(1.0) == 0 and part.u(2.0) == 0 and part.u(0.5) == 0
        assert part.u(1.4) > 0

    def test_weights_are_local(self):
        part = DyadicPartition()
        for x in (1.0, 7.0, 1000.0):
            pairs = part.weights(x)
            assert 1 <= len(pairs) <= 2
            for ell, w in pairs:
                assert 1.0 < x / ell < 2.0 and w > 0


class TestCoefficientSources:
    def test_constant(self):
        src = constant_source(2j)
        assert src(LambdaShifted(PI7, 3)) == 2j

    def test_synthetic_reproducible_and_bounded(self):
        a = synthetic_source(42)
        b = synthetic_source(42)
        c = synthetic_source(43)
        vals_a = [a(LambdaShifted(eis(i, 2 * i + 1), 3)) for i in range(50)]
        vals_b = [b(LambdaShifted(eis(i, 2 * i + 1), 3)) for i in range(50)]
        assert vals_a == vals_b
        assert any(a(LambdaShifted(eis(i, 1), 3)) != c(LambdaShifted(eis(i, 1), 3)) for i in range(10))
        assert all(abs(v) <= 1.0 for v in vals_a)

    def test_gauss_proxy(self):
        src = gauss_proxy_source()
        assert abs(abs(src(LambdaShifted(PI7, 3))) - 1.0) < 1e-9
        assert abs(src(LambdaShifted(PI7 ** 2, 3))) < 1e-9  # μ²(c) = 0
        # unit and λ-power of λ³ν are dropped: same primary part, same value
        assert src(LambdaShifted(eis(-1) * PI7, 3)) == src(LambdaShifted(PI7, 3))
        assert src(LambdaShifted(ZERO, 3)) == 0j

    def test_domain(self):
        with pytest.raises(DomainError):
            constant_source()(LambdaShifted(ONE, 4))


class TestProgressionConstraint:
    def test_validation(self):
        ProgressionConstraint(eis(3), ONE)
        ProgressionConstraint(eis(0, 3) * eis(2), eis(4, 3))
        with pytest.raises(DomainError):
            ProgressionConstraint(eis(2), ONE)  # v not ≡ 0 mod 3
        with pytest.raises(DomainError):
            ProgressionConstraint(eis(3), eis(2))  # u not primary
        with pytest.raises(DomainError):
            ProgressionConstraint(eis(3) * PI7, PI7)  # (u, v) ≠ 1


class TestVaughanIdentity:
    def test_prime_case(self):
        pi = PI7
        t1, t2, t3 = vaughan_terms(pi, 1.0, 1.0)
        assert t1 - t2 + t3 == pytest.approx(math.log(7), abs=1e-12)

    def test_below_threshold_vanishes(self):
        pi = PI7
        t1, t2, t3 = vaughan_terms(pi, 5.0, 10.0)  # N(π) = 7 ≤ S
        assert t1 - t2 + t3 == pytest.approx(0.0, abs=1e-12)

    def test_two_prime_case(self):
        nu = PI7 * eis(-2)
        for (big_r, s) in [(1.0, 1.0), (5.0, 5.0), (100.0, 3.0)]:
            t1, t2, t3 = vaughan_terms(nu, big_r, s)
            want = von_mangoldt(nu) if nu.norm() > s else 0.0
            assert t1 - t2 + t3 == pytest.approx(want, abs=1e-10)

    def test_exhaustive_small(self):
        grid = [(1.0, 1.0), (10.0, 30.0), (50.0, 8.0), (100.0, 100.0)]
        for nu in primary_in_norm_range(1, 800):
            for big_r, s in grid:
                t1, t2, t3 = vaughan_terms(nu, big_r, s)
                want = von_mangoldt(nu) if nu.norm() > s else 0.0
                assert abs(t1 - t2 + t3 - want) <= 1e-9

    def test_preconditions(self):
        with pytest.raises(DomainError):
            vaughan_terms(eis(2), 1.0, 1.0)
        with pytest.raises(DomainError):
            vaughan_terms(PI7, 0.5, 1.0)


class TestPrimeSums:
    def test_chebyshev_tally(self):
        res = prime_sum_sharp(2000.0, None, constant_source())
        want = sum(math.log(p.norm()) for p in primes_up_to_norm(2000))
        assert res.prime_only.real == pytest.approx(want, abs=1e-9)
        assert abs(res.prime_only.imag) < 1e-12

    def test_prime_power_difference(self):
        x = 10_000.0
        res = prime_sum_sharp(x, None, constant_source())
        diff = (res.lambda_weighted - res.prime_only).real
        powers = 0.0
        for p in primes_up_to_norm(math.sqrt(x)):
            n, k = p.norm(), 2
            while n ** k <= x:
                powers += math.log(n)
                k += 1
        assert diff == pytest.approx(powers, abs=1e-9)
        assert abs(diff) <= 2 * math.sqrt(x) * math.log(x)

    def test_empty_below_first_prime(self):
        res = prime_sum_sharp(3.5, None, constant_source())
        assert res.prime_only == 0 and res.lambda_weighted == 0

    def test_progression_restriction(self):
        c = ProgressionConstraint(eis(3) * eis(-2), ONE)
        res = prime_sum_sharp(500.0, c, constant_source())
        want = 0.0
        for p in primes_up_to_norm(500):
            if not eis_divmod(p - ONE, c.v)[1]:
                want += math.log(p.norm())
        assert res.prime_only.real == pytest.approx(want, abs=1e-9)

    def test_smoothed_matches_brute_force(self):
        w = SmoothWeight()
        x = 80.0
        got = smoothed_prime_sum(x, None, constant_source(), w)
        brute = 0.0
        for h in primary_in_norm_range(1, 27 * 2 * x + 1):
            lam = von_mangoldt(h)
            if lam:
                brute += lam * w(h.norm() / (27 * x))
        assert got.real == pytest.approx(brute, abs=1e-9)

    def test_smoothed_empty_window(self):
        # wide modulus: h ≡ 1 (mod 3·(−23)) with N(h) ≤ 108 forces h = 1,
        # so the window contains no prime power at all
        constraint = ProgressionConstraint(eis(3) * eis(-23), ONE)
        assert smoothed_prime_sum(2.0, constraint, constant_source(), SmoothWeight()) == 0

    def test_linearity_in_source(self):
        w = SmoothWeight()
        s1 = smoothed_prime_sum(50.0, None, constant_source(2.0), w)
        s2 = smoothed_prime_sum(50.0, None, constant_source(), w)
        assert s1 == pytest.approx(2.0 * s2, abs=1e-12)


class TestTypeSums:
    def test_pointwise_against_naive_enumeration(self):
        w = SmoothWeight()
        for x, a in [(100.0, ONE), (300.0, eis(-2)), (150.0, PI7)]:
            got = type1_pointwise(a, x, None, constant_source(), w)
            brute = 0.0
            for h in primary_in_norm_range(27 * x - 1, 54 * x):
                if eis_divmod(h, a)[1]:
                    continue
                brute += w(h.norm() / (27 * x))
            assert got.real == pytest.approx(brute, abs=1e-9), (x, a)

    def test_empty_congruence_window(self):
        w = SmoothWeight()
        a = eis(997 * 3 + 1)  # huge primary a: window for b is empty
        assert type1_pointwise(a, 10.0, None, constant_source(), w) == 0

    def test_average_reduces_to_pointwise_on_delta(self):
        w = SmoothWeight()
        got = type1_average({PI7: 1.0}, 60.0, None, constant_source(), w)
        assert got == pytest.approx(type1_pointwise(PI7, 60.0, None, constant_source(), w), abs=1e-12)

    def test_average_drops_non_squarefree(self):
        w = SmoothWeight()
        assert type1_average({PI7 ** 2: 5.0}, 60.0, None, constant_source(), w) == 0

    def test_type2_empty_for_mismatched_ranges(self):
        w = SmoothWeight()
        alpha = {p: 1.0 for p in primary_in_norm_range(3, 9)}
        beta = {p: 1.0 for p in primary_in_norm_range(3, 9)}
        assert type2_bilinear(alpha, beta, 10 ** 6, None, constant_source(), w) == 0

    def test_type2_cauchy_schwarz_oracle(self):
        w = SmoothWeight()
        rng = random.Random(2)
        x = 40.0
        alpha = {p: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for p in primary_in_norm_range(2, 30)}
        beta = {p: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for p in primary_in_norm_range(20, 260)}
        src = synthetic_source(7)
        val = type2_bilinear(alpha, beta, x, None, src, w)
        na = math.sqrt(sum(abs(v) ** 2 for v in alpha.values()))
        nb = math.sqrt(sum(abs(v) ** 2 for v in beta.values()))
        frob = 0.0
        for a in alpha:
            for b in beta:
                h = a * b
                if 27 * x <= h.norm() <= 54 * x and not eis_divmod(h - ONE, eis(3))[1]:
                    frob += w(h.norm() / (27 * x)) ** 2
        assert abs(val) <= na * nb * math.sqrt(frob) + 1e-9


class TestDecomposition:
    def test_exact_identity_relaxed_regime(self):
        # R = 300 cuts the a-range (cofactors reach 54X/4 = 1350) while
        # RS = 15000 > 54X keeps the third Vaughan sum empty: exact identity
        # with a genuinely active, non-cancelling Λ-layer
        part = DyadicPartition()
        w = SmoothWeight()
        for src in (constant_source(), synthetic_source(3), gauss_proxy_source()):
            lhs, rhs = decomposition_sides(100.0, 300.0, 50.0, None, src, w, part)
            assert lhs == pytest.approx(rhs, abs=1e-8)

    def test_p2_layer_genuinely_active(self):
        part = DyadicPartition()
        w = SmoothWeight()
        lhs, rhs = decomposition_sides(100.0, 300.0, 50.0, None, constant_source(), w, part)
        lhs2, p1_only = decomposition_sides(100.0, 300.0, 1.0, None, constant_source(), w, part)
        assert lhs == pytest.approx(lhs2, abs=1e-12)
        assert abs(p1_only - rhs) > 1.0  # the subtracted P2 mass is macroscopic

    def test_admissibility_gate(self):
        w = SmoothWeight()
        with pytest.raises(DomainError):
            vaughan_decomposition_check(200.0, 100.0, 50.0, None, constant_source(), w)
        with pytest.raises(DomainError):
            vaughan_decomposition_check(200.0, 10.0 ** 4, 0.01, None, constant_source(), w)

    def test_admissible_regime(self):
        res = vaughan_decomposition_check(60.0, 10.0 ** 9, 1e-3, None, constant_source(), SmoothWeight())
        assert res <= 1e-6
