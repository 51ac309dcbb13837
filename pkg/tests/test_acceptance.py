"""Acceptance gate: one test per release criterion, at its stated tolerance.

Each test prints a PASS/FAIL line (visible with `pytest -s`); the
assertions carry the same bounds. Criteria 9 and 10 share one large
quiet-start run (16384 particles to tau = 30), which takes a few
seconds; everything else is milliseconds.
"""

import json
import math

import numpy as np
import pytest

from aquafel.config import AXON, config_from_entries
from aquafel.constants import CODATA2018
from aquafel.dynamics import SimConfig, polar_equivalence, run
from aquafel.mixing import linearized_polarization, solvation_inversion
from aquafel.quadrature import dipole_matrix_element
from aquafel.rotor import build_rotor, population_ratio, thermal_inversion
from aquafel.scaling import SystemParams, gain_coefficients
from aquafel.scenario import run_scenario, sweep, write_sweep_csv
from aquafel.spinstates import make_frame, ponderomotive_term

SQRT3 = math.sqrt(3.0)


def report(number: int, description: str, passed: bool, detail: str = "") -> None:
    tail = f" ({detail})" if detail else ""
    print(f"{'PASS' if passed else 'FAIL'} criterion {number:2d}: {description}{tail}")
    assert passed, f"criterion {number}: {description}{tail}"


@pytest.fixture(scope="module")
def rotor():
    return build_rotor()


@pytest.fixture(scope="module")
def big_run():
    cfg = SimConfig(n_particles=16384, dt=0.01, tau_end=30.0, seed_amp=1e-4,
                    init_mode="quiet-start", rng_seed=12345, record_stride=10)
    return run(cfg)


def test_criterion_01_spectral_ratios(rotor):
    expected = (1.0, 0.89, 0.70, 0.49, 0.30, 0.17)
    values = [population_ratio(rotor, l, 300.0) for l in range(6)]
    worst = max(abs(v - e) for v, e in zip(values, expected))
    report(1, "population ratios R_0..R_5 at 300 K within 0.01", worst <= 0.01,
           f"worst |dR| = {worst:.4f}")


def test_criterion_02_rotor_constants(rotor):
    wavenumber_cm = rotor.E_split / (CODATA2018.hbar * CODATA2018.c) / 100.0
    ok_split = abs(wavenumber_cm / 160.0 - 1.0) <= 0.03
    ok_wavelength = abs(rotor.l_c / 400e-6 - 1.0) <= 0.05
    report(2, "splitting 160/cm within 3% and wavelength 400 um within 5%",
           ok_split and ok_wavelength,
           f"E/hc = {wavenumber_cm:.1f}/cm, l_c = {rotor.l_c * 1e6:.1f} um")


def test_criterion_03_thermal_inversion(rotor):
    value = thermal_inversion(rotor, 30, 300.0).delta_n_bar
    report(3, "thermal inversion 0.9 +/- 0.05 for n = 30 at 300 K",
           abs(value - 0.9) <= 0.05, f"value = {value:.4f}")


def test_criterion_04_polarization_chain():
    p_z = linearized_polarization(100.0)
    dn_bar = solvation_inversion(30, 0.62)
    ok_pz = abs(p_z / 4.9e-7 - 1.0) <= 0.02
    ok_dn = abs(dn_bar - 18.7) <= 0.2
    report(4, "P_z(100 V/m) = 4.9e-7 within 2% and delta_n_bar = 18.6 +/- 0.2 of 18.7",
           ok_pz and ok_dn, f"P_z = {p_z:.3e}, delta_n_bar = {dn_bar:.2f}")


def _params(rho: float, p_z: float, rotor, n: int = 30, delta_w: float = 0.62):
    return SystemParams(n=n, delta_n_bar=n * delta_w, rho=rho, P_z=p_z,
                        rotor=rotor, mu=CODATA2018.mu0)


def test_criterion_05_universal_prefactors(rotor):
    coeffs = gain_coefficients(_params(1.3e17, 4.9e-7, rotor))
    # independent oracle: the same prefactors by direct algebraic elimination
    c_A_oracle = (
        30.0 * 18.6 * rotor.I_ave * CODATA2018.mu0**2 * CODATA2018.c**4
        * rotor.d0_tilde / (6.0 * SQRT3 * rotor.omega_c)
    ) ** (1.0 / 3.0)
    c_t_oracle = (
        4.0 * 30.0 * rotor.I_ave
        / (rotor.omega_c * CODATA2018.mu0 * CODATA2018.c**2 * rotor.d0_tilde**2 * 18.6**2)
    ) ** (1.0 / 3.0)
    ok = (
        abs(coeffs.c_A / 2.6e-22 - 1.0) <= 0.05
        and abs(coeffs.c_t / 8.1e-5 - 1.0) <= 0.05
        and abs(coeffs.c_A / c_A_oracle - 1.0) <= 1e-12
        and abs(coeffs.c_t / c_t_oracle - 1.0) <= 1e-12
    )
    report(5, "c_A = 2.6e-22 and c_t = 8.1e-5 within 5%, confirmed by oracle algebra",
           ok, f"c_A = {coeffs.c_A:.3e}, c_t = {coeffs.c_t:.3e}")


def test_criterion_06_axon_scales(rotor):
    coeffs = gain_coefficients(_params(1.3e17, 4.9e-7, rotor))
    ok = (
        abs(coeffs.A_sat / 5.1e-13 - 1.0) <= 0.10
        and abs(coeffs.t_gain / 2.6e-6 - 1.0) <= 0.10
    )
    report(6, "axon A_sat = 5.1e-13 and t_gain = 2.6e-6 s within 10%", ok,
           f"A_sat = {coeffs.A_sat:.3e} V*s/m, t_gain = {coeffs.t_gain:.3e} s")


def test_criterion_07_matrix_element_oracle():
    targets = [
        (dipole_matrix_element(1, 1, 0, 0, 1), -1.0 / math.sqrt(6.0)),
        (dipole_matrix_element(1, 0, 0, 0, 3), 1.0 / SQRT3),
        (dipole_matrix_element(1, 1, 0, 0, 3), 0.0),
        (dipole_matrix_element(1, -1, 0, 0, 3), 0.0),
        (dipole_matrix_element(1, 0, 0, 0, 1), 0.0),
    ]
    worst = max(abs(value - expected) for value, expected in targets)
    report(7, "quadrature matrix elements match analytic values to 1e-9",
           worst <= 1e-9, f"worst deviation = {worst:.2e}")


def test_criterion_08_interaction_energy_verification(rotor):
    rng = np.random.default_rng(2718)
    scale = rotor.omega_c * rotor.d0_tilde
    worst = 0.0
    for _ in range(1000):
        A0 = float(rng.uniform(0.0, 2.0))
        phi0, theta, delta = (float(x) for x in rng.uniform(-7.0, 7.0, 3))
        xi1 = float(rng.uniform(0.0, math.pi))
        xi2 = float(rng.uniform(0.0, 2.0 * math.pi))
        which = "g" if rng.uniform() < 0.5 else "e"
        frame = make_frame(xi1, xi2)
        value = ponderomotive_term(A0, phi0, theta, delta, frame, rotor, which)
        sign = 1.0 if which == "g" else -1.0
        closed = (sign * A0 * scale * math.cos(xi2)
                  * math.sin(theta + phi0 + delta) / (2.0 * SQRT3))
        worst = max(worst, abs(value - closed) / max(A0 * scale, 1e-300))
    # excited state exactly negates the ground state
    frame = make_frame(0.3, 0.8)
    g = ponderomotive_term(1.0, 0.1, 0.9, 0.2, frame, rotor, "g")
    e = ponderomotive_term(1.0, 0.1, 0.9, 0.2, frame, rotor, "e")
    negation = abs(e + g) / (scale)
    # xi1 independence at fixed other arguments
    values = [ponderomotive_term(1.0, 0.5, 1.2, 0.7, make_frame(x, 0.9), rotor, "g")
              for x in np.linspace(0.0, math.pi, 50)]
    xi1_spread = (max(values) - min(values)) / scale
    # the bare coupling coefficient is 1/(2 sqrt 3)
    unit = ponderomotive_term(1.0, 0.0, math.pi / 2.0, 0.0, make_frame(0.0, 0.0), rotor, "g")
    coeff_dev = abs(unit / scale - 1.0 / (2.0 * SQRT3))
    ok = worst <= 1e-12 and negation <= 1e-12 and xi1_spread <= 1e-12 and coeff_dev <= 1e-12
    report(8, "interaction-energy two-path check to 1e-12 over 1000 draws",
           ok, f"two-path {worst:.1e}, negation {negation:.1e}, "
               f"xi1 spread {xi1_spread:.1e}, coefficient dev {coeff_dev:.1e}")


def test_criterion_09_first_integral(big_run):
    _, diag = big_run
    report(9, "first-integral drift < 1e-8 over tau in [0, 30] at dt = 0.01",
           diag.conserved_drift < 1e-8, f"drift = {diag.conserved_drift:.2e}")


def test_criterion_10_collective_instability(big_run):
    _, diag = big_run
    rate = diag.growth_rate_fit
    ok_rate = abs(rate / (SQRT3 / 2.0) - 1.0) <= 0.05
    ok_peak = 0.7 <= diag.sat_peak <= 1.6
    ok_bunch = abs(diag.bunching) > 0.5
    report(10, "growth rate sqrt(3)/2 within 5%, peak in [0.7, 1.6], |b| > 0.5 at peak",
           ok_rate and ok_peak and ok_bunch,
           f"rate = {rate:.4f}, peak = {diag.sat_peak:.3f}, |b| = {abs(diag.bunching):.3f}")


def test_criterion_11_formulation_equivalence():
    cfg = SimConfig(n_particles=1024, dt=0.01, tau_end=10.0, seed_amp=1e-4,
                    init_mode="quiet-start", rng_seed=7, record_stride=10)
    deviation = polar_equivalence(cfg)
    report(11, "polar vs complex formulation agree to 1e-6 in the field amplitude",
           deviation < 1e-6, f"max deviation = {deviation:.2e}")


def test_criterion_12_determinism(tmp_path):
    sim = SimConfig(n_particles=256, dt=0.01, tau_end=6.0, seed_amp=1e-4,
                    init_mode="uniform-random", rng_seed=99, record_stride=10)
    payloads = []
    for name in ("first", "second"):
        out = tmp_path / name
        cfg = AXON.scenario(sim=sim)
        cfg.output_dir = out
        run_scenario(cfg)
        payloads.append(
            ((out / "summary.json").read_bytes(), (out / "trajectory.csv").read_bytes())
        )
    files_identical = payloads[0] == payloads[1]
    rows_serial = sweep([1e16, 1e17], [1e-8, 1e-7], workers=1)
    rows_threaded = sweep([1e16, 1e17], [1e-8, 1e-7], workers=4)
    s_path, t_path = tmp_path / "s.csv", tmp_path / "t.csv"
    write_sweep_csv(rows_serial, s_path)
    write_sweep_csv(rows_threaded, t_path)
    sweeps_identical = s_path.read_bytes() == t_path.read_bytes()
    report(12, "bitwise-identical outputs across repeated runs and worker counts",
           files_identical and sweeps_identical,
           f"scenario files identical: {files_identical}, sweep across workers: {sweeps_identical}")
