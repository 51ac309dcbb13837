"""Config parsing, validation, defaults, roundtrips, axon preset."""

import math

import pytest

from aquafel.config import (
    AXON,
    ConfigError,
    config_from_entries,
    dump_config,
    load_config,
    parse_config_text,
)

AXON_TEXT = """\
# axon preset written out as a plain config
temperature = 300
n_waters = 30
E0z = 100.0
N_ions = 1e4
V_volume = 7.853981633974483e-14
delta_w = 0.62
particles = 512
tau_end = 16.0
"""


def write(tmp_path, text):
    path = tmp_path / "scenario.cfg"
    path.write_text(text)
    return path


def test_axon_file_resolves_concentration(tmp_path):
    cfg, defaulted = load_config(write(tmp_path, AXON_TEXT))
    assert cfg.ion_concentration() == pytest.approx(1.2732395447351626e17, rel=1e-9)
    assert cfg.polarization() == pytest.approx(4.9e-7, rel=1e-12)
    assert cfg.sim.n_particles == 512
    # unset keys fall back to defaults and are reported
    assert "dt" in defaulted and "seed" in defaulted and "init_mode" in defaulted
    assert "particles" not in defaulted


def test_missing_file():
    with pytest.raises(ConfigError, match="not found"):
        load_config("/nonexistent/path.cfg")


def test_parse_error_reports_line_number(tmp_path):
    with pytest.raises(ConfigError, match=r"scenario\.cfg:2"):
        load_config(write(tmp_path, "temperature = 300\nnonsense line\n"))


def test_unknown_key_reports_line_number():
    with pytest.raises(ConfigError, match=r"<string>:1: unknown key 'rho_typo'"):
        parse_config_text("rho_typo = 1e17")


def test_duplicate_key_rejected():
    with pytest.raises(ConfigError, match="duplicate key"):
        parse_config_text("rho = 1e17\nrho = 2e17")


def test_concentration_sources_are_mutually_exclusive():
    with pytest.raises(ConfigError, match="exactly one"):
        config_from_entries(
            {"rho": "1e17", "N_ions": "1e4", "V_volume": "1e-13", "E0z": "100"}
        )
    with pytest.raises(ConfigError, match="exactly one"):
        config_from_entries({"E0z": "100"})
    with pytest.raises(ConfigError, match="together"):
        config_from_entries({"N_ions": "1e4", "E0z": "100"})


def test_polarization_sources_are_mutually_exclusive():
    with pytest.raises(ConfigError, match="exactly one of 'E0z' or 'P_z'"):
        config_from_entries({"rho": "1e17", "E0z": "100", "P_z": "1e-7"})
    with pytest.raises(ConfigError, match="exactly one of 'E0z' or 'P_z'"):
        config_from_entries({"rho": "1e17"})


def test_field_range_enforced_at_load():
    with pytest.raises(ConfigError, match="E0z"):
        config_from_entries({"rho": "1e17", "E0z": "2e7"})


def test_out_of_range_values_name_the_key():
    with pytest.raises(ConfigError, match="temperature"):
        config_from_entries({"rho": "1e17", "E0z": "100", "temperature": "-3"})
    with pytest.raises(ConfigError, match="delta_w"):
        config_from_entries({"rho": "1e17", "E0z": "100", "delta_w": "1.2"})
    with pytest.raises(ConfigError, match="P_z"):
        config_from_entries({"rho": "1e17", "P_z": "0.9"})
    with pytest.raises(ConfigError, match="not a number"):
        config_from_entries({"rho": "fast", "E0z": "100"})
    with pytest.raises(ConfigError, match="not an integer"):
        config_from_entries({"rho": "1e17", "E0z": "100", "particles": "many"})


def test_sim_validation_surfaces_as_config_error():
    with pytest.raises(ConfigError):
        config_from_entries({"rho": "1e17", "E0z": "100", "particles": "1"})
    with pytest.raises(ConfigError, match="init_mode"):
        config_from_entries({"rho": "1e17", "E0z": "100", "init_mode": "bunched"})


def test_comments_and_blank_lines_ignored():
    entries = parse_config_text("\n# full-line comment\nrho = 1e17  # trailing\n\n")
    assert entries == {"rho": "1e17"}


def test_dump_and_reload_roundtrip(tmp_path):
    cfg, _ = load_config(write(tmp_path, AXON_TEXT))
    text = dump_config(cfg)
    cfg2, defaulted2 = config_from_entries(parse_config_text(text))
    assert defaulted2 == []  # the dump is fully explicit
    assert cfg2 == cfg


def test_axon_preset_geometry():
    assert AXON.V_volume == pytest.approx(math.pi * (10e-6) ** 2 * 1e-3 / 4.0, rel=1e-15)
    assert AXON.N_ions == pytest.approx(1e4)
    # concentration in the 0.13 per cubic micrometre range
    assert AXON.rho * 1e-18 == pytest.approx(0.13, abs=0.01)
    cfg = AXON.scenario()
    assert cfg.temperature == 300.0
    assert cfg.n_waters == 30
    assert cfg.field_E0z == 100.0
    assert cfg.ion_concentration() == pytest.approx(AXON.rho, rel=1e-15)
