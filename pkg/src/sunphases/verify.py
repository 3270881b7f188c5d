"""Named invariant suites driven by the CLI `verify` subcommand.

Each check evaluates one structural invariant and reports its residual against
a fixed tolerance.  Suites are deterministic and cheap enough to run on every
build.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import basis as bs
from . import coherent, pauli, phases
from .generators import build_generators, su2_matrices

SUITES = ("all", "su2", "su3", "su4", "pauli", "gamma")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual < self.tolerance


def _su2_commutation_residual(j: float) -> float:
    m = su2_matrices(j)
    r1 = np.max(np.abs(m.h @ m.e_plus - m.e_plus @ m.h - m.e_plus))
    r2 = np.max(np.abs(m.h @ m.e_minus - m.e_minus @ m.h + m.e_minus))
    r3 = np.max(
        np.abs(m.e_plus @ m.e_minus - m.e_minus @ m.e_plus - 2.0 * m.h)
    )
    return float(max(r1, r2, r3))


def suite_su2() -> list[Check]:
    checks = []
    worst = max(_su2_commutation_residual(j / 2.0) for j in range(0, 31))
    checks.append(Check("su2", "spin commutation relations, j <= 15", worst, 1e-13))

    shift_defect = 0.0
    spectrum_defect = 0.0
    unbiased_defect = 0.0
    for two_j in range(0, 21):  # dimensions 1..21
        j = two_j / 2.0
        e = phases.su2_shift_E(j)
        dim = two_j + 1
        power = np.linalg.matrix_power(e, dim)
        shift_defect = max(shift_defect, float(np.max(np.abs(power - np.eye(dim)))))
        eigvals = np.linalg.eigvals(e)
        roots = np.exp(2j * np.pi * np.arange(dim) / dim)
        # each root of unity must be hit by exactly one eigenvalue
        spectrum_defect = max(
            spectrum_defect,
            float(np.max(np.min(np.abs(eigvals[:, None] - roots[None, :]), axis=0))),
        )
        for _, vec in coherent.dft_eigensystem(e):
            unbiased_defect = max(
                unbiased_defect,
                float(np.max(np.abs(np.abs(vec) ** 2 - 1.0 / dim))),
            )
    checks.append(Check("su2", "shift matrix order 2j+1", shift_defect, 1e-10))
    checks.append(
        Check("su2", "shift spectrum = roots of unity", spectrum_defect, 1e-10)
    )
    checks.append(
        Check("su2", "Fourier eigenvectors unbiased", unbiased_defect, 1e-10)
    )
    return checks


def suite_su3() -> list[Check]:
    checks = []
    from .generators import commutation_residual

    worst = max(
        commutation_residual(build_generators(bs.enumerate_basis(3, lam)))
        for lam in range(0, 7)
    )
    checks.append(Check("su3", "boson commutation relations, lam <= 6", worst, 1e-12))

    worst = max(phases.d_identity_residual(lam) for lam in range(0, 9))
    checks.append(Check("su3", "squared-D Cartan identities, lam <= 8", worst, 1e-12))

    worst = 0.0
    for lam in range(1, 11):
        report = phases.noncommutativity_norm(3, lam)
        worst = max(
            worst, abs(report.normalized_norm - float(report.formula_value))
        )
    checks.append(
        Check("su3", "normalized commutator norm vs formula, lam <= 10", worst, 1e-9)
    )

    worst = 0.0
    for lam in range(0, 7):
        basis = bs.enumerate_basis(3, lam)
        for root in [(1, 2), (2, 3), (1, 3), (2, 1), (3, 2), (3, 1)]:
            for convention in ("plus", "paper-sign"):
                factors = phases.polar_decompose(basis, root, convention)
                from .generators import generator_matrix

                c = generator_matrix(basis, *root)
                worst = max(
                    worst,
                    phases.unitarity_residual(factors.unitary),
                    float(np.max(np.abs(factors.unitary @ factors.positive - c))),
                )
    checks.append(
        Check("su3", "polar identity E D = C, all roots, lam <= 6", worst, 1e-12)
    )
    return checks


def suite_su4() -> list[Check]:
    checks = []
    from .generators import commutation_residual

    worst = max(
        commutation_residual(build_generators(bs.enumerate_basis(4, lam)))
        for lam in range(0, 5)
    )
    checks.append(Check("su4", "boson commutation relations, lam <= 4", worst, 1e-12))

    worst = 0.0
    for lam in range(0, 7):
        basis = bs.enumerate_basis(4, lam)
        count_a, count_b, inter, union = bs.edge_overlap_count(
            basis, (1, 2), (3, 1)
        )
        expected_edge = (lam + 1) * (lam + 2) // 2
        worst = max(
            worst,
            abs(count_a - expected_edge),
            abs(count_b - expected_edge),
            abs(inter - (lam + 1)),
            abs(union - (2 * expected_edge - (lam + 1))),
        )
    checks.append(Check("su4", "edge counting, lam <= 6", worst, 0.5))

    worst = 0.0
    for lam in range(0, 5):
        report = phases.noncommutativity_norm(4, lam)
        u_norm_identity = abs(
            report.raw_norm
            - 2.0 * (report.dimension - report.fixed_point_count)
        )
        worst = max(worst, u_norm_identity)
    checks.append(
        Check("su4", "norm identity ||M||^2 = 2(d - fixed), lam <= 4", worst, 1e-10)
    )
    return checks


def suite_pauli() -> list[Check]:
    checks = []
    pair = pauli.pauli_generators(3)
    checks.append(
        Check("pauli", "clock-shift exchange relations", pauli.pauli_relation_residual(pair), 1e-12)
    )
    eye = np.eye(3)
    order_defect = max(
        float(np.max(np.abs(np.linalg.matrix_power(pair.x, 3) - eye))),
        float(np.max(np.abs(np.linalg.matrix_power(pair.z, 3) - eye))),
    )
    checks.append(Check("pauli", "X^3 = Z^3 = identity", order_defect, 1e-12))

    worst = 0.0
    for angle in np.linspace(0.0, 2 * np.pi, 7):
        worst = max(
            worst,
            pauli.complementarity_check(pauli.complementary_E12(angle)),
            phases.unitarity_residual(pauli.complementary_E12(angle)),
            phases.unitarity_residual(pauli.complementary_E23(angle)),
        )
    checks.append(Check("pauli", "complementary family", worst, 1e-12))

    worst = 0.0
    solutions = pauli.additivity_solve()
    for sol in solutions:
        e12 = pauli.complementary_E12(sol.beta)
        e23 = pauli.complementary_E23(sol.gamma)
        worst = max(
            worst,
            float(np.max(np.abs(e12 @ e23 - e23 @ e12))),
        )
    if not any(s.simplest_nontrivial for s in solutions):
        worst = np.inf
    checks.append(Check("pauli", "additive solutions commute", worst, 1e-12))
    return checks


def suite_gamma() -> list[Check]:
    checks = []
    worst = max(coherent.hermitize_check(j / 2.0) for j in range(0, 31))
    checks.append(Check("gamma", "intertwiner hermitizes, j <= 15", worst, 1e-9))

    worst = max(coherent.s_recursion_check(j / 2.0) for j in range(1, 61))
    checks.append(Check("gamma", "binomial recursion, j <= 30", worst, 1e-12))

    worst = 0.0
    for two_j in range(0, 21):
        j = two_j / 2.0
        defect = np.max(
            np.abs(coherent.gamma_phase_part(coherent.gamma_su2(j)) - phases.su2_shift_E(j))
        )
        worst = max(worst, float(defect))
    checks.append(Check("gamma", "phase part equals cyclic shift, j <= 10", worst, 1e-15))

    worst = 0.0
    for two_j in range(0, 31):
        j = two_j / 2.0
        g = coherent.gamma_su2(j)
        k = coherent.intertwiner(j)
        for other in (g.h, g.e_minus @ g.e_plus, g.e_plus @ g.e_minus):
            scale = max(1.0, float(np.max(np.abs(k))) * max(1.0, float(np.max(np.abs(other)))))
            worst = max(
                worst, float(np.max(np.abs(k @ other - other @ k))) / scale
            )
    checks.append(Check("gamma", "intertwiner commutants, j <= 15", worst, 1e-10))

    worst = max(
        coherent.gamma_su3_commutation_residual(coherent.gamma_su3(lam))
        for lam in range(0, 5)
    )
    checks.append(Check("gamma", "su(3) coherent realization, lam <= 4", worst, 1e-12))
    return checks


_SUITE_FUNCS: dict[str, Callable[[], list[Check]]] = {
    "su2": suite_su2,
    "su3": suite_su3,
    "su4": suite_su4,
    "pauli": suite_pauli,
    "gamma": suite_gamma,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        checks = []
        for suite in ("su2", "su3", "su4", "pauli", "gamma"):
            checks.extend(_SUITE_FUNCS[suite]())
        return checks
    if name not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    return _SUITE_FUNCS[name]()
