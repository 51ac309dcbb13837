"""Command-line interface.

Subcommands: derive (print the physical chain, no simulation), verify
(run the exact-arithmetic oracle battery), simulate (full run from a
config file), axon (built-in preset run), sweep (saturation scales over
a rho x P_z grid) and plot (SVG chart from a trajectory CSV).

Exit codes: 0 success, 1 verification failure, 2 config error,
3 numerical blowup, 4 mechanism off (P_z = 0).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .config import AXON, ConfigError, ScenarioConfig, load_config
from .dynamics import NumericalBlowupError
from .scenario import (
    derive_chain,
    read_trajectory_csv,
    run_scenario,
    slippage_check,
    sweep,
    write_sweep_csv,
)
from .svgplot import emit_plot
from .verify import run_all_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_BLOWUP = 3
EXIT_MECHANISM_OFF = 4


def _add_sim_overrides(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="override the RNG seed")
    parser.add_argument("--particles", type=int, help="override the particle count")
    parser.add_argument("--dt", type=float, help="override the scaled time step")
    parser.add_argument("--tau-end", type=float, help="override the scaled end time")


def _apply_sim_overrides(cfg: ScenarioConfig, args: argparse.Namespace) -> None:
    updates = {}
    if args.seed is not None:
        updates["rng_seed"] = args.seed
    if args.particles is not None:
        updates["n_particles"] = args.particles
    if args.dt is not None:
        updates["dt"] = args.dt
    if args.tau_end is not None:
        updates["tau_end"] = args.tau_end
    if updates:
        try:
            cfg.sim = dataclasses.replace(cfg.sim, **updates)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aquafel",
        description="Collective-instability simulator for ion-solvated water rotors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_derive = sub.add_parser("derive", help="print the physical derivation chain")
    p_derive.add_argument("--config", type=Path, help="scenario config (default: axon preset)")

    sub.add_parser("verify", help="run the exact-arithmetic oracle battery")

    p_sim = sub.add_parser("simulate", help="run a scenario from a config file")
    p_sim.add_argument("--config", type=Path, required=True)
    p_sim.add_argument("--out", type=Path, default=Path("out"))
    p_sim.add_argument("--plot", action="store_true",
                       help="also write trajectory.svg under --out")
    _add_sim_overrides(p_sim)

    p_axon = sub.add_parser("axon", help="run the built-in axon preset")
    p_axon.add_argument("--out", type=Path, default=Path("out"))
    p_axon.add_argument("--plot", action="store_true",
                        help="also write trajectory.svg under --out")
    _add_sim_overrides(p_axon)

    p_sweep = sub.add_parser("sweep", help="saturation scales over a rho x P_z grid")
    p_sweep.add_argument("--rhos", required=True,
                         help="comma-separated ion concentrations [1/m^3]")
    p_sweep.add_argument("--pzs", required=True,
                         help="comma-separated permanent polarizations")
    p_sweep.add_argument("--n-waters", type=int, default=30)
    p_sweep.add_argument("--delta-w", type=float, default=None)
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--out", type=Path, default=Path("out"))

    p_plot = sub.add_parser("plot", help="SVG chart from a trajectory CSV")
    p_plot.add_argument("--traj", type=Path, required=True)
    p_plot.add_argument("--out", type=Path, default=Path("trajectory.svg"))
    p_plot.add_argument("--log-scale", action="store_true")

    p_slip = sub.add_parser("slippage", help="slippage-length diagnostic")
    p_slip.add_argument("--bunch-length", type=float, required=True, help="l_b [m]")
    p_slip.add_argument("--gain-length", type=float, required=True, help="l_g [m]")
    p_slip.add_argument("--velocity", type=float, required=True, help="v [m/s]")

    return parser


def _cmd_derive(args: argparse.Namespace) -> int:
    if args.config is not None:
        cfg, defaulted = load_config(args.config)
    else:
        cfg, defaulted = AXON.scenario(), []
    print(json.dumps(derive_chain(cfg, defaulted), indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_verify() -> int:
    results = run_all_checks()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def _run_and_report(cfg: ScenarioConfig, defaulted: list[str], plot: bool = False) -> int:
    result = run_scenario(cfg, defaulted)
    if result.summary_path is not None:
        print(f"summary: {result.summary_path}")
    if result.trajectory_path is not None:
        print(f"trajectory: {result.trajectory_path}")
        if plot:
            svg = emit_plot(result.trajectory, result.trajectory_path.with_suffix(".svg"))
            print(f"plot: {svg}")
    if not result.mechanism_on:
        print("mechanism off: P_z = 0, gain time infinite", file=sys.stderr)
        return EXIT_MECHANISM_OFF
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg, defaulted = load_config(args.config)
    _apply_sim_overrides(cfg, args)
    cfg.output_dir = args.out
    return _run_and_report(cfg, defaulted, plot=args.plot)


def _cmd_axon(args: argparse.Namespace) -> int:
    cfg = AXON.scenario()
    _apply_sim_overrides(cfg, args)
    cfg.output_dir = args.out
    return _run_and_report(cfg, [], plot=args.plot)


def _parse_grid(raw: str, name: str) -> list[float]:
    try:
        values = [float(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError:
        raise ConfigError(f"--{name}: expected comma-separated numbers, got {raw!r}") from None
    if not values or any(v <= 0.0 for v in values):
        raise ConfigError(f"--{name}: values must be positive")
    return values


def _cmd_sweep(args: argparse.Namespace) -> int:
    rhos = _parse_grid(args.rhos, "rhos")
    pzs = _parse_grid(args.pzs, "pzs")
    rows = sweep(rhos, pzs, n=args.n_waters, delta_w=args.delta_w, workers=args.workers)
    args.out.mkdir(parents=True, exist_ok=True)
    path = args.out / "sweep.csv"
    write_sweep_csv(rows, path)
    print(f"sweep: {path} ({len(rows)} rows)")
    return EXIT_OK


def _cmd_plot(args: argparse.Namespace) -> int:
    try:
        traj = read_trajectory_csv(args.traj)
    except FileNotFoundError:
        raise ConfigError(f"trajectory file not found: {args.traj}") from None
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    try:
        emit_plot(traj, args.out, log_scale=args.log_scale)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    print(f"plot: {args.out}")
    return EXIT_OK


def _cmd_slippage(args: argparse.Namespace) -> int:
    try:
        diag = slippage_check(args.bunch_length, args.gain_length, args.velocity)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    print(json.dumps(dataclasses.asdict(diag), indent=2, sort_keys=True))
    if diag.slippage_dominated:
        print(
            "slippage-dominated: bunched-superradiance route unavailable",
            file=sys.stderr,
        )
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "derive":
            return _cmd_derive(args)
        if args.command == "verify":
            return _cmd_verify()
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "axon":
            return _cmd_axon(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "plot":
            return _cmd_plot(args)
        if args.command == "slippage":
            return _cmd_slippage(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalBlowupError as exc:
        print(f"numerical blowup: {exc}", file=sys.stderr)
        return EXIT_BLOWUP


if __name__ == "__main__":
    sys.exit(main())
