"""Large-sieve bilinear forms and the δ-detection layer."""

import math
import random

import pytest

from cubicsums.core import (
    DomainError,
    ResidueSystem,
    eis,
    eis_divmod,
    eis_gcd,
    elements_with_norm_in,
    euler_phi,
    split_prime,
)
from cubicsums.core import ZERO
from cubicsums.expsums import ramanujan_general
from cubicsums.largesieve import (
    SieveInstance,
    bilinear_lhs,
    delta_additive,
    delta_primitive_layer,
    dual_bilinear,
    grid_report,
    hb_ratio,
    random_instance,
)

PI7 = split_prime(7)


class TestSieveInstance:
    def test_support_validation(self):
        with pytest.raises(DomainError):
            SieveInstance(8, 5, {PI7 ** 2: 1.0})  # not squarefree
        with pytest.raises(DomainError):
            SieveInstance(8, 5, {eis(2): 1.0})  # not primary
        with pytest.raises(DomainError):
            SieveInstance(8, 100, {PI7: 1.0})  # norm outside (N, 2N]
        with pytest.raises(DomainError):
            SieveInstance(8, 5, {PI7: 1.0}, omega={eis(100): 1.0})

    def test_d_shell_decomposition(self):
        inst = SieveInstance(8, 5, {PI7: 1.0})
        shell = inst.d_shell()
        assert all(8 < d.norm() <= 16 for d in shell)
        assert len({(d.a, d.b) for d in shell}) == len(shell)
        want = sum(1 for _ in elements_with_norm_in(8, 16))
        assert len(shell) == want


class TestBilinearForms:
    def test_singleton_counts_coprime_shell(self):
        inst = SieveInstance(8, 5, {PI7: 2.0 + 1.0j})
        lhs = bilinear_lhs(inst)
        count = sum(1 for d in inst.d_shell() if eis_gcd(d, PI7).is_unit())
        assert lhs == pytest.approx(abs(2 + 1j) ** 2 * count, abs=1e-9)

    def test_zero_psi(self):
        inst = SieveInstance(8, 5, {PI7: 0.0})
        assert bilinear_lhs(inst) == 0.0

    def test_triangle_inequality_crude(self):
        inst = random_instance(16, 8, 1)
        lhs = bilinear_lhs(inst)
        crude = len(inst.d_shell()) * sum(abs(v) for v in inst.psi.values()) ** 2
        assert lhs <= crude + 1e-9

    def test_ratio_scale_invariance(self):
        inst = random_instance(16, 8, 2)
        scaled = SieveInstance(16, 8, {c: -4.2j * v for c, v in inst.psi.items()})
        assert hb_ratio(inst) == pytest.approx(hb_ratio(scaled), abs=1e-12)

    def test_cauchy_schwarz_exact(self):
        for seed in range(6):
            inst = random_instance(16, 8, seed, with_omega=True)
            dual_sq = abs(dual_bilinear(inst)) ** 2
            assert dual_sq <= inst.omega_l2 ** 2 * bilinear_lhs(inst) * (1 + 1e-9) + 1e-9

    def test_dual_zero_sides(self):
        inst = random_instance(8, 8, 3, with_omega=True)
        zero_psi = SieveInstance(8, 8, {c: 0.0 for c in inst.psi}, inst.omega)
        assert dual_bilinear(zero_psi) == 0
        with pytest.raises(DomainError):
            dual_bilinear(SieveInstance(8, 8, inst.psi))

    def test_dual_resonant_singleton(self):
        # Ω aligned to a single c turns the dual form into the conjugate row sum
        c0 = PI7
        inst0 = SieveInstance(8, 5, {c0: 1.0})
        kernel_col = inst0.kernel()[:, 0]
        omega = {d: complex(kernel_col[i]).conjugate() for i, d in enumerate(inst0.d_shell())}
        inst = SieveInstance(8, 5, {c0: 1.0}, omega)
        val = dual_bilinear(inst)
        assert val.real == pytest.approx(sum(abs(v) ** 2 for v in kernel_col), abs=1e-9)

    def test_grid_report_shapes_and_null_rows(self):
        rows = grid_report([8.0, 1.2], [8.0], [0, 1], with_omega=True)
        assert len(rows) == 4
        by_m = {r["M"]: r for r in rows}
        assert by_m[8.0]["ratio"] is not None
        # M = 1.2 shell is empty: norms 2 is not represented by the form
        assert by_m[1.2]["lhs"] is None and by_m[1.2]["ratio"] is None

    def test_grid_determinism(self):
        r1 = grid_report([8.0], [8.0], [0, 1, 2])
        r2 = grid_report([8.0], [8.0], [0, 1, 2])
        assert r1 == r2


class TestDeltaLayer:
    def test_indicator_exhaustive(self):
        for q in elements_with_norm_in(0, 60):
            rs = ResidueSystem(q)
            for a in rs:
                val = delta_additive(a, q)
                want = 1.0 if not eis_divmod(a, q)[1] else 0.0
                assert val == pytest.approx(want, abs=1e-9)

    def test_zero_modulus_rejected(self):
        with pytest.raises(DomainError):
            delta_additive(eis(1), ZERO)

    def test_primitive_layer_at_zero(self):
        for c, val in delta_primitive_layer(ZERO, 60):
            assert val == pytest.approx(euler_phi(c), abs=1e-9)

    def test_primitive_layer_closed_form(self):
        a = PI7 * eis(2, 1)
        for c, val in delta_primitive_layer(a, 80):
            assert val == pytest.approx(float(ramanujan_general(c, a)) * c.norm(), abs=1e-9)

    def test_partial_sums_reproduce_orthogonality(self):
        # restricted to divisors of q, the layer sums to the δ-indicator mass
        q = PI7 * split_prime(13)
        rows = dict()
        for c, val in delta_primitive_layer(eis(0, 0), 200):
            rows[(c.a, c.b)] = val
        from cubicsums.core import divisors

        total = sum(rows[(d.a, d.b)] for d in divisors(q))
        assert total == pytest.approx(q.norm() * 1.0, abs=1e-9)  # Σ_{r|q} c_r(0) = N(q)
