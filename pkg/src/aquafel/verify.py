"""Self-contained oracle battery for the exact-arithmetic layers.

Each check recomputes a closed-form result through an independent route
(quadrature vs analytic values, matrix arithmetic vs trigonometric
closed forms) and reports the worst deviation. The CLI `verify`
subcommand prints one line per check; the test suite asserts the same
bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mixing import permanent_polarization
from .quadrature import dipole_matrix_element
from .rotor import build_rotor
from .spinstates import (
    energy_spins,
    free_energy_expectation,
    make_frame,
    per_ion_ponderomotive,
    ponderomotive_term,
    superradiant_pair,
)

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name: str, deviation: float, bound: float) -> CheckResult:
    return CheckResult(
        name=name,
        passed=deviation <= bound,
        detail=f"max deviation {deviation:.3e} (bound {bound:.0e})",
    )


def check_quadrature_elements() -> CheckResult:
    targets = [
        ((1, 1, 0, 0, 1), -1.0 / math.sqrt(6.0)),
        ((1, 1, 0, 0, 2), 1j / math.sqrt(6.0)),
        ((1, -1, 0, 0, 1), 1.0 / math.sqrt(6.0)),
        ((1, -1, 0, 0, 2), 1j / math.sqrt(6.0)),
        ((1, 0, 0, 0, 3), 1.0 / _SQRT3),
        ((1, 1, 0, 0, 3), 0.0),
        ((1, -1, 0, 0, 3), 0.0),
        ((1, 0, 0, 0, 1), 0.0),
        ((0, 0, 0, 0, 3), 0.0),
    ]
    worst = max(
        abs(dipole_matrix_element(*args) - expected) for args, expected in targets
    )
    return _check("quadrature matrix elements vs analytic", worst, 1e-9)


def check_su2_algebra() -> CheckResult:
    ops = energy_spins()
    mats = [ops.s1, ops.s2, ops.s3]
    worst = 0.0
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        comm = mats[i] @ mats[j] - mats[j] @ mats[i]
        worst = max(worst, float(np.abs(comm - 1j * mats[k]).max()))
    casimir = sum(m @ m for m in mats)
    worst = max(worst, float(np.abs(casimir - 0.75 * np.eye(2)).max()))
    return _check("su(2) commutators and Casimir", worst, 1e-14)


def check_superradiant_geometry() -> CheckResult:
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(200):
        t1, t2 = rng.uniform(-10.0, 10.0, 2)
        pair = superradiant_pair(t1, t2)
        worst = max(worst, abs(float(np.vdot(pair.psi_g, pair.psi_g).real) - 2.0 / 3.0))
        worst = max(worst, abs(float(np.vdot(pair.psi_e, pair.psi_e).real) - 2.0 / 3.0))
        worst = max(worst, abs(abs(complex(np.vdot(pair.psi_g, pair.psi_e))) - 1.0 / 3.0))
    return _check("superradiant norms 2/3 and overlap 1/3", worst, 1e-14)


def check_ponderomotive_two_paths(n_draws: int = 1000) -> CheckResult:
    """Frame-built value vs trigonometric closed form over random draws."""
    rotor = build_rotor()
    rng = np.random.default_rng(777)
    scale0 = rotor.omega_c * rotor.d0_tilde
    worst = 0.0
    for _ in range(n_draws):
        A0 = rng.uniform(0.0, 2.0)
        phi0, theta, delta = rng.uniform(-2.0 * math.pi, 2.0 * math.pi, 3)
        xi1 = rng.uniform(0.0, math.pi)
        xi2 = rng.uniform(0.0, 2.0 * math.pi)
        which = "g" if rng.uniform() < 0.5 else "e"
        frame = make_frame(xi1, xi2)
        value = ponderomotive_term(A0, phi0, theta, delta, frame, rotor, which)
        sign = 1.0 if which == "g" else -1.0
        closed = (
            sign * A0 * scale0 * math.cos(xi2) * math.sin(theta + phi0 + delta)
            / (2.0 * _SQRT3)
        )
        denom = max(A0 * scale0, 1e-300)
        worst = max(worst, abs(value - closed) / denom)
    return _check(
        f"ponderomotive numeric vs closed form ({n_draws} draws, relative)", worst, 1e-12
    )


def check_xi1_invariance() -> CheckResult:
    rotor = build_rotor()
    rng = np.random.default_rng(778)
    A0, phi0, theta, delta, xi2 = 1.3, 0.4, 2.1, -0.7, 1.1
    values = []
    for _ in range(100):
        frame = make_frame(rng.uniform(0.0, math.pi), xi2)
        values.append(ponderomotive_term(A0, phi0, theta, delta, frame, rotor, "g"))
    spread = (max(values) - min(values)) / (A0 * rotor.omega_c * rotor.d0_tilde)
    return _check("frame-angle xi1 invariance (relative spread)", spread, 1e-12)


def check_longitudinal_field_invariance() -> CheckResult:
    rotor = build_rotor()
    rng = np.random.default_rng(779)
    base = per_ion_ponderomotive(
        1.0, 0.3, 1.7, 0.2, 18.6, (0.0, 0.0, 4.9e-7), rotor, A_z=0.0
    )
    worst = 0.0
    for _ in range(50):
        value = per_ion_ponderomotive(
            1.0, 0.3, 1.7, 0.2, 18.6, (0.0, 0.0, 4.9e-7), rotor,
            A_z=float(rng.uniform(-100.0, 100.0)),
        )
        worst = max(worst, abs(value - base))
    return _check("longitudinal field component never contributes", worst, 0.0)


def check_eq_ave_aggregation() -> CheckResult:
    """delta_n_bar x per-molecule closed form (cos xi2 -> P_z) = shell energy."""
    rotor = build_rotor()
    rng = np.random.default_rng(780)
    worst = 0.0
    for _ in range(100):
        A0 = float(rng.uniform(0.0, 2.0))
        phi0, theta, delta = (float(x) for x in rng.uniform(-6.0, 6.0, 3))
        dn_bar = float(rng.uniform(0.0, 25.0))
        P_z = float(rng.uniform(0.0, 1.0 / (3.0 * _SQRT3)))
        per_molecule = (
            A0 * rotor.omega_c * rotor.d0_tilde * P_z
            * math.sin(theta + phi0 + delta) / (2.0 * _SQRT3)
        )
        shell = per_ion_ponderomotive(
            A0, phi0, theta, delta, dn_bar, (0.0, 0.0, P_z), rotor
        )
        scale = max(A0 * rotor.omega_c * rotor.d0_tilde * dn_bar, 1e-300)
        worst = max(worst, abs(shell - dn_bar * per_molecule) / scale)
    return _check("shell aggregation matches per-molecule closed form", worst, 1e-14)


def check_free_energy_expectations() -> CheckResult:
    rotor = build_rotor()
    rng = np.random.default_rng(781)
    worst = 0.0
    for _ in range(100):
        pair = superradiant_pair(*rng.uniform(-8.0, 8.0, 2))
        for which in ("g", "e"):
            value = free_energy_expectation(pair, which, rotor.E_split)
            worst = max(worst, abs(value + rotor.E_split / 6.0) / rotor.E_split)
    return _check("free-energy expectation -E_split/6 per state", worst, 1e-14)


def check_polarization_forms(n_draws: int = 1000) -> CheckResult:
    rng = np.random.default_rng(782)
    worst = 0.0
    for _ in range(n_draws):
        alpha = float(rng.uniform(-math.pi, math.pi))
        w_plus = float(rng.uniform(0.0, 1.0 / 3.0))
        value = permanent_polarization(alpha, w_plus, 1.0 - 3.0 * w_plus)
        worst = max(worst, abs(value - math.sin(2.0 * alpha) / (3.0 * _SQRT3)))
    return _check(
        f"weighted vs closed-form polarization ({n_draws} draws)", worst, 1e-12
    )


ALL_CHECKS = (
    check_quadrature_elements,
    check_su2_algebra,
    check_superradiant_geometry,
    check_ponderomotive_two_paths,
    check_xi1_invariance,
    check_longitudinal_field_invariance,
    check_eq_ave_aggregation,
    check_free_energy_expectations,
    check_polarization_forms,
)


def run_all_checks() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
