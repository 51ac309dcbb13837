"""Scenario configuration: flat key-value files, validation, axon preset.

Config files are plain text, one `key = value` per line, with `#`
comments. Unknown keys are rejected so typos in physics parameters
cannot pass silently. Exactly one of {rho} or {N_ions, V_volume} must
fix the ion concentration, and exactly one of {E0z} or {P_z} must fix
the polarization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

from .dynamics import INIT_MODES, SimConfig
from .mixing import DELTA_W_LIMIT_CYCLE, E0Z_MAX, linearized_polarization
from .scaling import P_Z_MAX


class ConfigError(ValueError):
    """Invalid, missing or conflicting configuration input."""


@dataclass
class ScenarioConfig:
    """Fully resolved scenario inputs.

    Either field_E0z or P_z_override fixes the polarization; either rho
    or the (N_ions, V_volume) pair fixes the ion concentration.
    """

    temperature: float = 300.0
    n_waters: int = 30
    field_E0z: float | None = None
    P_z_override: float | None = None
    rho: float | None = None
    N_ions: float | None = None
    V_volume: float | None = None
    delta_w: float = DELTA_W_LIMIT_CYCLE
    sim: SimConfig = field(default_factory=SimConfig)
    output_dir: Path | None = None

    def ion_concentration(self) -> float:
        """rho [1/m³], from the direct value or from N/V."""
        if self.rho is not None:
            return self.rho
        return self.N_ions / self.V_volume

    def polarization(self) -> float:
        """P_z, from the override or the linear field response."""
        if self.P_z_override is not None:
            return self.P_z_override
        return linearized_polarization(self.field_E0z)

    def validate(self) -> None:
        if (self.rho is None) == (self.N_ions is None and self.V_volume is None):
            raise ConfigError(
                "exactly one of 'rho' or the pair 'N_ions'+'V_volume' must be given"
            )
        if self.rho is None and (self.N_ions is None or self.V_volume is None):
            raise ConfigError("'N_ions' and 'V_volume' must be given together")
        if (self.field_E0z is None) == (self.P_z_override is None):
            raise ConfigError("exactly one of 'E0z' or 'P_z' must be given")


# key -> (attribute, parser, validator, description)
def _positive(key: str, value: float) -> float:
    if value <= 0.0:
        raise ConfigError(f"'{key}' must be positive, got {value!r}")
    return value


def _parse_float(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"'{key}': not a number: {raw!r}") from None


def _parse_int(key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"'{key}': not an integer: {raw!r}") from None


_SCENARIO_KEYS = (
    "temperature",
    "n_waters",
    "E0z",
    "P_z",
    "rho",
    "N_ions",
    "V_volume",
    "delta_w",
)
_SIM_KEYS = (
    "particles",
    "dt",
    "tau_end",
    "seed_amp",
    "init_mode",
    "seed",
    "record_stride",
)
KNOWN_KEYS = _SCENARIO_KEYS + _SIM_KEYS


def parse_config_text(text: str, source: str = "<string>") -> dict[str, str]:
    """Raw key -> value strings from config text; duplicates and syntax errors rejected."""
    entries: dict[str, str] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw_line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ConfigError(f"{source}:{lineno}: empty key or value in {raw_line!r}")
        if key not in KNOWN_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key '{key}'")
        if key in entries:
            raise ConfigError(f"{source}:{lineno}: duplicate key '{key}'")
        entries[key] = value
    return entries


def config_from_entries(entries: dict[str, str]) -> tuple[ScenarioConfig, list[str]]:
    """Typed, validated config plus the list of keys that fell back to defaults."""
    cfg = ScenarioConfig()
    sim_kwargs: dict[str, object] = {}

    if "temperature" in entries:
        cfg.temperature = _positive("temperature", _parse_float("temperature", entries["temperature"]))
    if "n_waters" in entries:
        cfg.n_waters = _parse_int("n_waters", entries["n_waters"])
        if cfg.n_waters < 1:
            raise ConfigError(f"'n_waters' must be >= 1, got {cfg.n_waters}")
    if "E0z" in entries:
        e0z = _parse_float("E0z", entries["E0z"])
        if e0z < 0.0 or e0z > E0Z_MAX:
            raise ConfigError(
                f"'E0z' out of the linear-response range [0, {E0Z_MAX:.0e}] V/m: {e0z!r}"
            )
        cfg.field_E0z = e0z
    if "P_z" in entries:
        p_z = _parse_float("P_z", entries["P_z"])
        if not 0.0 <= p_z <= P_Z_MAX:
            raise ConfigError(f"'P_z' must lie in [0, {P_Z_MAX}], got {p_z!r}")
        cfg.P_z_override = p_z
    if "rho" in entries:
        cfg.rho = _positive("rho", _parse_float("rho", entries["rho"]))
    if "N_ions" in entries:
        cfg.N_ions = _positive("N_ions", _parse_float("N_ions", entries["N_ions"]))
    if "V_volume" in entries:
        cfg.V_volume = _positive("V_volume", _parse_float("V_volume", entries["V_volume"]))
    if "delta_w" in entries:
        dw = _parse_float("delta_w", entries["delta_w"])
        if not 0.0 <= dw <= 1.0:
            raise ConfigError(f"'delta_w' must lie in [0, 1], got {dw!r}")
        cfg.delta_w = dw

    if "particles" in entries:
        sim_kwargs["n_particles"] = _parse_int("particles", entries["particles"])
    if "dt" in entries:
        sim_kwargs["dt"] = _parse_float("dt", entries["dt"])
    if "tau_end" in entries:
        sim_kwargs["tau_end"] = _parse_float("tau_end", entries["tau_end"])
    if "seed_amp" in entries:
        sim_kwargs["seed_amp"] = _parse_float("seed_amp", entries["seed_amp"])
    if "init_mode" in entries:
        mode = entries["init_mode"]
        if mode not in INIT_MODES:
            raise ConfigError(f"'init_mode' must be one of {INIT_MODES}, got {mode!r}")
        sim_kwargs["init_mode"] = mode
    if "seed" in entries:
        sim_kwargs["rng_seed"] = _parse_int("seed", entries["seed"])
    if "record_stride" in entries:
        sim_kwargs["record_stride"] = _parse_int("record_stride", entries["record_stride"])

    try:
        cfg.sim = SimConfig(**sim_kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    cfg.validate()

    defaulted = sorted(
        set(_SCENARIO_KEYS + _SIM_KEYS)
        - set(entries)
        - {"E0z", "P_z", "rho", "N_ions", "V_volume"}
    )
    return cfg, defaulted


def load_config(path: str | Path) -> tuple[ScenarioConfig, list[str]]:
    """Parse and validate a config file; returns (config, defaulted keys)."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    return config_from_entries(parse_config_text(path.read_text(), source=str(path)))


def resolved_entries(cfg: ScenarioConfig) -> dict[str, object]:
    """Flat key -> value echo of a config; feeding it back reproduces the run."""
    out: dict[str, object] = {
        "temperature": cfg.temperature,
        "n_waters": cfg.n_waters,
        "delta_w": cfg.delta_w,
        "particles": cfg.sim.n_particles,
        "dt": cfg.sim.dt,
        "tau_end": cfg.sim.tau_end,
        "seed_amp": cfg.sim.seed_amp,
        "init_mode": cfg.sim.init_mode,
        "seed": cfg.sim.rng_seed,
        "record_stride": cfg.sim.record_stride,
    }
    if cfg.field_E0z is not None:
        out["E0z"] = cfg.field_E0z
    else:
        out["P_z"] = cfg.P_z_override
    if cfg.rho is not None:
        out["rho"] = cfg.rho
    else:
        out["N_ions"] = cfg.N_ions
        out["V_volume"] = cfg.V_volume
    return out


def dump_config(cfg: ScenarioConfig) -> str:
    """Config-file text that load_config parses back to an equal config."""
    lines = [f"{key} = {value}" for key, value in resolved_entries(cfg).items()]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AxonPreset:
    """Myelinated-axon scenario: sodium-ion influx along one sheath segment.

    Geometry: cylinder of diameter l_a and run length l_r; the ions of
    one action-potential event are split evenly over n_sheaths sheaths.
    The potential drop of ~0.1 V over one 1 mm run gives the 100 V/m
    static field.
    """

    l_a: float = 10e-6
    l_r: float = 1e-3
    total_ions: float = 1e6
    n_sheaths: int = 100
    E0z: float = 100.0
    v: float = 150.0
    T: float = 300.0
    n_waters: int = 30

    @property
    def V_volume(self) -> float:
        """Cylinder volume pi·l_a²·l_r/4 [m³]."""
        return math.pi * self.l_a**2 * self.l_r / 4.0

    @property
    def N_ions(self) -> float:
        return self.total_ions / self.n_sheaths

    @property
    def rho(self) -> float:
        return self.N_ions / self.V_volume

    def scenario(self, sim: SimConfig | None = None) -> ScenarioConfig:
        cfg = ScenarioConfig(
            temperature=self.T,
            n_waters=self.n_waters,
            field_E0z=self.E0z,
            N_ions=self.N_ions,
            V_volume=self.V_volume,
            sim=sim if sim is not None else SimConfig(),
        )
        cfg.validate()
        return cfg


AXON = AxonPreset()
