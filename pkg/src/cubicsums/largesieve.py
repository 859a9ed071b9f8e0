"""Numerical laboratory for the cubic large sieve and the δ-detection layer.

The quadratic form under study is

    Σ_{N(d) ∼ M}  | Σ_{N(c) ∼ N, c primary squarefree}  Ψ_c (d/c)₃ |²,

with the d-sum over ALL nonzero Eisenstein integers in the shell
M < N(d) ≤ 2M (every d splits uniquely as unit × λ-power × primary).  For
non-primary d the kernel is the numerator-extended symbol (d/c)₃, which by
reciprocity equals the (c/primary-part)₃ twisted by the unit/λ supplements;
this is the exact form produced by Cauchy–Schwarz from the dual bilinear
form, so |dual|² ≤ ‖Ω‖₂² · LHS holds on every instance as an identity-level
inequality, not just asymptotically.

Ratios against the envelope M^{1/3}(M+N)·‖Ψ‖₂² are reported for empirical
boundedness experiments; nothing asserts the theorem's constant.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DomainError,
    EisensteinInt,
    ResidueSystem,
    elements_with_norm_in,
    factor,
    primary_in_norm_range,
)
from .expsums import LambdaShifted, _LinearPhase, ramanujan_general
from .symbol import CubicSymbolValue, cubic_symbol

__all__ = [
    "SieveInstance",
    "bilinear_lhs",
    "hb_ratio",
    "dual_bilinear",
    "random_instance",
    "grid_report",
    "delta_additive",
    "delta_primitive_layer",
]


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


class SieveInstance:
    """Coefficients Ψ on squarefree primary c with N(c) ∈ (N, 2N], and an
    optional dual-side Ω on all d with N(d) ∈ (M, 2M]."""

    def __init__(
        self,
        m: float,
        n: float,
        psi: dict[EisensteinInt, complex],
        omega: dict[EisensteinInt, complex] | None = None,
    ) -> None:
        if m < 0.5 or n < 0.5:
            raise DomainError("M, N ≥ 1/2 required")
        for c in psi:
            if not c.is_primary() or not factor(c).is_squarefree():
                raise DomainError(f"Ψ must be supported on squarefree primary c; got {c}")
            if not (n < c.norm() <= 2 * n):
                raise DomainError(f"Ψ support must satisfy N(c) ∼ N; got N({c}) = {c.norm()}")
        if omega:
            for d in omega:
                if not (m < d.norm() <= 2 * m):
                    raise DomainError(f"Ω support must satisfy N(d) ∼ M; got N({d}) = {d.norm()}")
        self.m = m
        self.n = n
        self.psi = dict(psi)
        self.omega = dict(omega) if omega else None
        self._kernel: np.ndarray | None = None
        self._d_list: list[EisensteinInt] | None = None

    @property
    def psi_l2(self) -> float:
        return math.sqrt(sum(abs(v) ** 2 for v in self.psi.values()))

    @property
    def omega_l2(self) -> float:
        if not self.omega:
            return 0.0
        return math.sqrt(sum(abs(v) ** 2 for v in self.omega.values()))

    def d_shell(self) -> list[EisensteinInt]:
        """All nonzero d with M < N(d) ≤ 2M (units × λ-powers × primary)."""
        if self._d_list is None:
            self._d_list = list(elements_with_norm_in(self.m, 2 * self.m))
        return self._d_list

    def kernel(self) -> np.ndarray:
        """Matrix of (d/c)₃ over the d-shell × Ψ-support (cached)."""
        if self._kernel is None:
            ds = self.d_shell()
            cs = list(self.psi)
            k = np.zeros((len(ds), len(cs)), dtype=complex)
            for j, c in enumerate(cs):
                for i, d in enumerate(ds):
                    k[i, j] = cubic_symbol(d, c).to_complex()
            self._kernel = k
        return self._kernel

    def psi_vector(self) -> np.ndarray:
        return np.array([self.psi[c] for c in self.psi], dtype=complex)


def bilinear_lhs(inst: SieveInstance) -> float:
    """Σ_{N(d)∼M} |Σ_c Ψ_c (d/c)₃|² over the full d-shell (exact double loop)."""
    if not inst.psi:
        return 0.0
    rows = inst.kernel() @ inst.psi_vector()
    return float(np.sum(np.abs(rows) ** 2))


def hb_ratio(inst: SieveInstance) -> float | None:
    """bilinear_lhs / (M^{1/3}(M+N)·‖Ψ‖₂²); None for an empty d-shell."""
    if not inst.d_shell():
        return None
    denom = inst.m ** (1.0 / 3.0) * (inst.m + inst.n) * inst.psi_l2 ** 2
    if denom == 0:
        return None
    return bilinear_lhs(inst) / denom


def dual_bilinear(inst: SieveInstance) -> complex:
    """Σ_{N(d)∼M} Σ_c Ω_d Ψ_c (d/c)₃ (requires Ω)."""
    if inst.omega is None:
        raise DomainError("dual_bilinear needs an Ω-side")
    ds = inst.d_shell()
    omega_vec = np.array([inst.omega.get(d, 0j) for d in ds], dtype=complex)
    rows = inst.kernel() @ inst.psi_vector()
    return complex(np.dot(omega_vec, rows))


def random_instance(m: float, n: float, seed: int, with_omega: bool = False) -> SieveInstance | None:
    """Unit-modulus Ψ (and optionally Ω) with seeded uniform phases.

    Returns None when the squarefree-primary c-shell is empty.
    """
    cs = [c for c in primary_in_norm_range(n, 2 * n) if factor(c).is_squarefree()]
    if not cs:
        return None

    def phase_for(tag: int, x: EisensteinInt) -> complex:
        h = _splitmix64(seed * 0x9E3779B9 + tag * 0x85EBCA6B + (x.a << 20) + (x.b & 0xFFFFF))
        return cmath.exp(2j * math.pi * (h >> 11) / float(1 << 53))

    psi = {c: phase_for(1, c) for c in cs}
    omega = None
    if with_omega:
        omega = {d: phase_for(2, d) for d in elements_with_norm_in(m, 2 * m)}
    return SieveInstance(m, n, psi, omega)


def grid_report(
    ms: list[float],
    ns: list[float],
    seeds: list[int],
    with_omega: bool = False,
) -> list[dict]:
    """One row per (M, N, seed): lhs, ratio, and the Cauchy–Schwarz pair.

    Cells with an empty c- or d-shell produce null rows (lhs/ratio None).
    Kernel matrices are cached per cell across seeds.
    """
    rows = []
    for m in ms:
        for n in ns:
            base = random_instance(m, n, 0, with_omega)
            for seed in seeds:
                inst = random_instance(m, n, seed, with_omega)
                row = {"M": m, "N": n, "seed": seed, "lhs": None, "ratio": None}
                if inst is not None and inst.d_shell():
                    if base is not None:
                        inst._kernel = base.kernel()
                        inst._d_list = base.d_shell()
                    row["lhs"] = bilinear_lhs(inst)
                    row["ratio"] = hb_ratio(inst)
                    if with_omega:
                        dual = dual_bilinear(inst)
                        row["dual_sq"] = abs(dual) ** 2
                        row["cs_bound"] = inst.omega_l2 ** 2 * row["lhs"]
                rows.append(row)
    return rows


# -- δ-detection layer ------------------------------------------------------------------

def delta_additive(a: EisensteinInt, q: EisensteinInt) -> complex:
    """Exact congruence indicator of a ≡ 0 (mod q) by additive characters:

        (1/N(q)) Σ_{j mod q} ě(ja/(λq)).

    The characters are indexed by the dual points λ⁻¹j, which makes the
    pairing perfect for every nonzero q (for q coprime to λ this equals the
    naive Σ ě(ja/q) form).
    """
    if not q:
        raise DomainError("modulus must be nonzero")
    ph = _LinearPhase(LambdaShifted(a, 1), q)
    ja, jb = ResidueSystem(q).coordinate_arrays()
    return complex(np.sum(ph.at_arrays(ja, jb))) / q.norm()


def delta_primitive_layer(a: EisensteinInt, cmax: float) -> list[tuple[EisensteinInt, float]]:
    """Per-modulus primitive-character sums of the δ-expansion.

    For each primary c with N(c) ≤ cmax, the entry is
    Σ*_{σ mod c} σ(a) = N(c)·ψ̂_c(a), the Ramanujan-type sum over primitive
    additive characters (the smooth circle-method weight is not applied).
    """
    rows = []
    for c in primary_in_norm_range(0.5, cmax):
        val = float(ramanujan_general(c, a)) * c.norm()
        rows.append((c, val))
    rows.sort(key=lambda t: (t[0].norm(), t[0].a, t[0].b))
    return rows
