"""End-to-end scenario execution, parameter sweeps and file output.

run_scenario drives the full chain: rotor constants -> polarization ->
shell inversion -> gain coefficients -> N-particle integration ->
physical readout, and writes a self-contained summary.json plus a
trajectory.csv time series. All floats in the CSV are written with 17
significant digits in scientific notation so outputs are bitwise
reproducible and round-trip exactly.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .config import ScenarioConfig, resolved_entries
from .constants import CODATA2018
from .dynamics import Diagnostics, Trajectory, run
from .mixing import DELTA_W_LIMIT_CYCLE, polarization_result, solvation_inversion
from .quadrature import GAUSS_LEGENDRE_ORDER, TRAPEZOID_ORDER
from .rotor import RigidRotor, build_rotor, thermal_inversion
from .scaling import GainCoefficients, SystemParams, gain_coefficients

CSV_HEADER = "tau,A0_scaled,phi,bunch_re,bunch_im,p_mean,conserved"


@dataclass(frozen=True)
class ScenarioResult:
    """Everything run_scenario produced, plus the output paths."""

    summary: dict
    coeffs: GainCoefficients
    trajectory: Trajectory | None
    diagnostics: Diagnostics | None
    summary_path: Path | None
    trajectory_path: Path | None

    @property
    def mechanism_on(self) -> bool:
        return self.coeffs.mechanism_on


def _build_pipeline(config: ScenarioConfig) -> tuple[RigidRotor, GainCoefficients]:
    """Rotor constants through gain coefficients for one scenario."""
    rotor = build_rotor(CODATA2018)
    P_z = config.polarization()
    pol = polarization_result(P_z, config.n_waters, config.delta_w)
    params = SystemParams(
        n=config.n_waters,
        delta_n_bar=pol.delta_n_bar,
        rho=config.ion_concentration(),
        P_z=P_z,
        rotor=rotor,
        mu=CODATA2018.mu0,
    )
    return rotor, gain_coefficients(params)


def derive_chain(config: ScenarioConfig, defaulted: list[str] | None = None) -> dict:
    """Physical derivation chain as a JSON-ready dict (no simulation)."""
    rotor, coeffs = _build_pipeline(config)
    thermal = thermal_inversion(rotor, config.n_waters, config.temperature)
    P_z = config.polarization()
    pol = polarization_result(P_z, config.n_waters, config.delta_w)
    rho = config.ion_concentration()
    hc = CODATA2018.hbar * CODATA2018.c
    summary = {
        "resolved_config": resolved_entries(config),
        "applied_defaults": list(defaulted or []),
        "quadrature_orders": {
            "gauss_legendre_n": GAUSS_LEGENDRE_ORDER,
            "trapezoid_n": TRAPEZOID_ORDER,
        },
        "derived": {
            "I_ave_kg_m2": rotor.I_ave,
            "E_split_J": rotor.E_split,
            "E_split_over_hc_cm^-1": rotor.E_split / hc / 100.0,
            "omega_c_rad_s": rotor.omega_c,
            "l_c_m": rotor.l_c,
            "d0_C_m": rotor.d0,
            "d0_tilde_C_m": rotor.d0_tilde,
            "thermal_delta_n_bar": thermal.delta_n_bar,
            "thermal_energy_ratio": thermal.energy_ratio,
            "P_z": P_z,
            "delta_w": pol.delta_w,
            "w_plus": pol.w_plus,
            "w_minus": pol.w_minus,
            "delta_n_bar": pol.delta_n_bar,
            "rho_m^-3": rho,
            "alpha_coef": coeffs.alpha_coef,
            "beta_coef": coeffs.beta_coef,
            "c_A": _json_float(coeffs.c_A),
            "c_t": _json_float(coeffs.c_t),
            "A_sat_V_s_per_m": coeffs.A_sat,
            "t_gain_s": _json_float(coeffs.t_gain),
            "mechanism_on": coeffs.mechanism_on,
        },
    }
    if not coeffs.mechanism_on:
        summary["derived"]["note"] = (
            "mechanism off: P_z = 0 gives zero saturation amplitude and "
            "infinite gain time"
        )
    return summary


def _json_float(x: float):
    """JSON has no inf/nan; encode them as strings."""
    if math.isinf(x):
        return "infinity" if x > 0 else "-infinity"
    if math.isnan(x):
        return "nan"
    return x


def run_scenario(config: ScenarioConfig, defaulted: list[str] | None = None) -> ScenarioResult:
    """Full pipeline; writes summary.json and trajectory.csv under output_dir.

    With P_z = 0 the simulation is skipped (the scaled equations are
    degenerate) and the summary records the mechanism-off outcome.
    """
    summary = derive_chain(config, defaulted)
    rotor, coeffs = _build_pipeline(config)

    traj: Trajectory | None = None
    diag: Diagnostics | None = None
    if coeffs.mechanism_on:
        traj, diag = run(config.sim)
        sat_ok = math.isfinite(diag.sat_peak)
        summary["simulation"] = {
            "growth_rate_fit": _json_float(diag.growth_rate_fit),
            "sat_peak": _json_float(diag.sat_peak),
            "sat_tau": _json_float(diag.sat_tau),
            "bunching_at_sat": abs(diag.bunching),
            "p_mean_final": diag.p_mean,
            "conserved_final": diag.conserved,
            "conserved_drift": diag.conserved_drift,
            "A0_at_sat_V_s_per_m": _json_float(
                diag.sat_peak * coeffs.A_sat if sat_ok else math.nan
            ),
            "t_at_sat_s": _json_float(
                diag.sat_tau * coeffs.t_gain if sat_ok else math.nan
            ),
            # max_I |theta_dot_I| / omega_c over the recorded states
            "validity_max_theta_dot_over_omega_c": diag.p_max_abs
            / (coeffs.t_gain * rotor.omega_c),
        }
    else:
        summary["simulation"] = {
            "skipped": True,
            "note": "gain time infinite (mechanism off), no dynamics integrated",
        }

    summary_path = trajectory_path = None
    if config.output_dir is not None:
        out = Path(config.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        summary_path = out / "summary.json"
        write_summary(summary, summary_path)
        if traj is not None:
            trajectory_path = out / "trajectory.csv"
            write_trajectory_csv(traj, trajectory_path)
    return ScenarioResult(
        summary=summary,
        coeffs=coeffs,
        trajectory=traj,
        diagnostics=diag,
        summary_path=summary_path,
        trajectory_path=trajectory_path,
    )


def write_summary(summary: dict, path: Path) -> None:
    path.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")


def write_trajectory_csv(traj: Trajectory, path: Path) -> None:
    lines = [CSV_HEADER]
    for k in range(len(traj)):
        lines.append(
            ",".join(
                f"{v:.16e}"
                for v in (
                    traj.tau[k],
                    traj.amp[k],
                    traj.phi[k],
                    traj.bunch_re[k],
                    traj.bunch_im[k],
                    traj.p_mean[k],
                    traj.conserved[k],
                )
            )
        )
    path.write_text("\n".join(lines) + "\n")


def read_trajectory_csv(path: str | Path) -> Trajectory:
    """Inverse of write_trajectory_csv (used by the plot subcommand)."""
    rows = Path(path).read_text().strip().splitlines()
    if not rows or rows[0] != CSV_HEADER:
        raise ValueError(f"not a trajectory CSV (bad header): {path}")
    data = np.array([[float(x) for x in line.split(",")] for line in rows[1:]])
    if data.size == 0:
        data = data.reshape(0, 7)
    return Trajectory(
        tau=data[:, 0],
        amp=data[:, 1],
        phi=data[:, 2],
        bunch_re=data[:, 3],
        bunch_im=data[:, 4],
        p_mean=data[:, 5],
        conserved=data[:, 6],
    )


# --- slippage diagnostic ------------------------------------------------------


@dataclass(frozen=True)
class SlippageDiagnostic:
    """Radiation slippage vs bunch length for a candidate superradiant setup."""

    l_b: float
    l_g: float
    v: float
    l_s: float
    ratio: float
    slippage_dominated: bool


#: l_s/l_b beyond which radiation escapes the bunch within one gain length.
SLIPPAGE_RATIO_THRESHOLD = 1e2


def slippage_check(l_b: float, l_g: float, v: float) -> SlippageDiagnostic:
    """Slippage length l_s = (c - v)·l_g/v and its ratio to the bunch length.

    A ratio far above one means the emitted radiation outruns the bunch
    long before saturation, so the bunched-superradiance route is not
    available and only the collective-instability route remains.
    """
    c = CODATA2018.c
    if not 0.0 < v < c:
        raise ValueError(f"velocity must satisfy 0 < v < c, got {v!r}")
    if l_b <= 0.0 or l_g <= 0.0:
        raise ValueError("bunch and gain lengths must be positive")
    l_s = (c - v) * l_g / v
    ratio = l_s / l_b
    return SlippageDiagnostic(
        l_b=l_b,
        l_g=l_g,
        v=v,
        l_s=l_s,
        ratio=ratio,
        slippage_dominated=ratio > SLIPPAGE_RATIO_THRESHOLD,
    )


# --- parameter sweep ----------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    rho: float
    P_z: float
    A_sat: float
    t_gain: float


def sweep(
    rho_values,
    pz_values,
    n: int = 30,
    delta_w: float | None = None,
    workers: int = 1,
) -> list[SweepRow]:
    """Saturation scales over a rho x P_z grid, in deterministic grid order.

    Grid points are independent; with workers > 1 they are evaluated
    concurrently but collected in the same rho-major order.
    """
    if delta_w is None:
        delta_w = DELTA_W_LIMIT_CYCLE
    rotor = build_rotor(CODATA2018)
    dn_bar = solvation_inversion(n, delta_w)
    points = [(rho, pz) for rho in rho_values for pz in pz_values]

    def one(point: tuple[float, float]) -> SweepRow:
        rho, pz = point
        params = SystemParams(
            n=n, delta_n_bar=dn_bar, rho=rho, P_z=pz, rotor=rotor, mu=CODATA2018.mu0
        )
        coeffs = gain_coefficients(params)
        return SweepRow(rho=rho, P_z=pz, A_sat=coeffs.A_sat, t_gain=coeffs.t_gain)

    if workers <= 1:
        return [one(pt) for pt in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, points))


def write_sweep_csv(rows: list[SweepRow], path: Path) -> None:
    lines = ["rho,P_z,A_sat,t_gain"]
    for r in rows:
        lines.append(f"{r.rho:.16e},{r.P_z:.16e},{r.A_sat:.16e},{r.t_gain:.16e}")
    path.write_text("\n".join(lines) + "\n")
