"""Cubic residue symbol: supplements, reciprocity, oracle agreement."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicsums.core import (
    LAMBDA,
    OMEGA,
    ONE,
    ZERO,
    DomainError,
    EisensteinInt,
    ResidueSystem,
    eis,
    eis_divmod,
    eis_gcd,
    primes_up_to_norm,
)
from cubicsums.symbol import (
    CubicSymbolValue,
    SupplementExponents,
    cubic_symbol,
    cubic_symbol_prime_oracle,
    supplement_exponents,
)

V = CubicSymbolValue

coords = st.integers(min_value=-60, max_value=60)
primary = st.builds(
    lambda a, b: eis(1 + 3 * a, 3 * b),
    st.integers(-25, 25),
    st.integers(-25, 25),
).filter(bool)
elements = st.builds(EisensteinInt, coords, coords)


class TestValueAlgebra:
    def test_group_table(self):
        assert V.OMEGA * V.OMEGA == V.OMEGA_SQ
        assert V.OMEGA * V.OMEGA_SQ == V.ONE
        assert V.ZERO * V.OMEGA == V.ZERO
        assert V.OMEGA.conj() == V.OMEGA_SQ

    def test_to_eisenstein_exact(self):
        assert V.ZERO.to_eisenstein() == ZERO
        assert V.ONE.to_eisenstein() == ONE
        assert V.OMEGA.to_eisenstein() == OMEGA
        assert V.OMEGA_SQ.to_eisenstein() == OMEGA * OMEGA


class TestSupplements:
    def test_trivial(self):
        assert supplement_exponents(ONE) == SupplementExponents(0, 0)

    def test_minus_two(self):
        # −2 − 1 = −3 = λ², so (α₂, α₃) = (1, 0)
        assert supplement_exponents(eis(-2)) == SupplementExponents(1, 0)

    @given(primary)
    def test_congruence_holds_exactly(self, d):
        s = supplement_exponents(d)
        diff = d - (ONE + s.alpha2 * LAMBDA ** 2 + s.alpha3 * LAMBDA ** 3)
        assert not eis_divmod(diff, eis(9))[1]
        assert s.alpha2 in (-1, 0, 1) and s.alpha3 in (-1, 0, 1)

    def test_non_primary_rejected(self):
        with pytest.raises(DomainError):
            supplement_exponents(eis(2))


class TestCubicSymbol:
    def test_empty_denominator(self):
        assert cubic_symbol(eis(123, -47), ONE) == V.ONE

    def test_omega_supplement_law(self):
        assert cubic_symbol(OMEGA, eis(-2)) == V.OMEGA
        assert cubic_symbol_prime_oracle(OMEGA, eis(-2)) == V.OMEGA

    @given(primary)
    @settings(max_examples=80)
    def test_supplement_laws(self, d):
        s = supplement_exponents(d)
        assert cubic_symbol(OMEGA, d) == V.from_exponent(s.alpha2)
        assert cubic_symbol(LAMBDA, d) == V.from_exponent(-s.alpha3)

    def test_non_primary_denominator_rejected(self):
        with pytest.raises(DomainError):
            cubic_symbol(ONE, eis(2))

    @given(primary, primary)
    @settings(max_examples=120)
    def test_reciprocity(self, a, b):
        if eis_gcd(a, b).is_unit():
            assert cubic_symbol(a, b) == cubic_symbol(b, a)

    @given(elements, elements, primary)
    @settings(max_examples=120)
    def test_multiplicative_in_numerator(self, a1, a2, b):
        assert cubic_symbol(a1 * a2, b) == cubic_symbol(a1, b) * cubic_symbol(a2, b)

    @given(elements, primary, primary)
    @settings(max_examples=80)
    def test_multiplicative_in_denominator(self, a, b1, b2):
        assert cubic_symbol(a, b1 * b2) == cubic_symbol(a, b1) * cubic_symbol(a, b2)

    @given(elements, primary)
    @settings(max_examples=100)
    def test_periodic_and_cubes(self, a, b):
        rs = ResidueSystem(b)
        assert cubic_symbol(a, b) == cubic_symbol(rs.reduce(a), b)
        if eis_gcd(a, b).is_unit():
            assert cubic_symbol(a * a * a, b) == V.ONE
        else:
            assert cubic_symbol(a, b) == V.ZERO

    def test_oracle_agreement_sampled(self):
        rng = random.Random(5)
        for pi in primes_up_to_norm(800):
            for _ in range(8):
                a = eis(rng.randint(-50, 50), rng.randint(-50, 50))
                assert cubic_symbol(a, pi) == cubic_symbol_prime_oracle(a, pi)

    def test_oracle_trivial_cases(self):
        pi = next(iter(primes_up_to_norm(10)))
        assert cubic_symbol_prime_oracle(pi * eis(3, 7), pi) == V.ZERO
        assert cubic_symbol_prime_oracle(ONE, pi) == V.ONE
        rng = random.Random(6)
        for _ in range(10):
            x = eis(rng.randint(-20, 20), rng.randint(-20, 20))
            if eis_gcd(x, pi).is_unit():
                assert cubic_symbol_prime_oracle(x ** 3, pi) == V.ONE
