from pathlib import Path

import pytest

from cpaniso.cli import ConfigError, main, parse_scenario

SCENARIOS = Path(__file__).resolve().parents[1] / "scenarios"

BASE = """
[material.par]
kind = "lossless_plasma"
omega_p = 0.29

[material.perp]
kind = "vacuum"

[atom]
[[atom.transitions]]
omega_mi = 1.0
mu_par_sq = 1.0
mu_perp_sq = 1.0

[evaluation]
mode = "exact"
Z = 1.0
"""


def _write(tmp_path, text, name="s.toml"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_minimal(tmp_path):
    s = parse_scenario(_write(tmp_path, BASE))
    assert s.material.par.omega_p == 0.29
    assert s.geometry.kind == "half_space"
    assert s.mode == "exact" and s.Z == 1.0


def test_unknown_key_is_named(tmp_path):
    with pytest.raises(ConfigError, match="material.par.omega_pp"):
        parse_scenario(_write(tmp_path, BASE.replace("omega_p =", "omega_pp =")))
    with pytest.raises(ConfigError, match="scenario.materiall"):
        parse_scenario(_write(tmp_path, BASE.replace("[material.par]", "[materiall.par]", 1)))


def test_missing_key_is_named(tmp_path):
    txt = BASE.replace('omega_p = 0.29\n', '')
    with pytest.raises(ConfigError, match="material.par.omega_p"):
        parse_scenario(_write(tmp_path, txt))


def test_bad_values_rejected(tmp_path):
    with pytest.raises(ConfigError, match="transitions"):
        parse_scenario(_write(tmp_path, BASE.replace("omega_mi = 1.0", "omega_mi = 0.0")))
    bad_sweep = BASE + """
[sweep]
axis = "z_omega"
start = 2.0
stop = 1.0
count = 5
"""
    with pytest.raises(ConfigError, match="sweep.start"):
        parse_scenario(_write(tmp_path, bad_sweep))


def test_units_conversion(tmp_path):
    txt = BASE.replace("Z = 1.0", "Z_m = 1.0e-6") + """
[units]
omega_ref_hz = 2.4e15
"""
    s = parse_scenario(_write(tmp_path, txt))
    assert s.Z == pytest.approx(1e-6 * 2.4e15 / 299792458.0)
    # meters without omega_ref_hz is an error
    txt2 = BASE.replace("Z = 1.0", "Z_m = 1.0e-6")
    with pytest.raises(ConfigError, match="omega_ref_hz"):
        parse_scenario(_write(tmp_path, txt2))


def test_exit_code_1_on_config_error(tmp_path, capsys):
    path = _write(tmp_path, BASE.replace("omega_p =", "omega_pp ="))
    assert main(["shift", "--config", path]) == 1
    assert "omega_pp" in capsys.readouterr().err


def test_shift_vacuum_all_zero(tmp_path, capsys):
    txt = BASE.replace('kind = "lossless_plasma"\nomega_p = 0.29', 'kind = "vacuum"')
    out = tmp_path / "o.csv"
    assert main(["shift", "--config", _write(tmp_path, txt), "--out", str(out)]) == 0
    rows = out.read_text().splitlines()
    assert rows[0].startswith("sweep_value,F_par,F_perp,delta_E")
    cells = rows[1].split(",")
    assert float(cells[1]) == 0.0 and float(cells[3]) == 0.0


def test_sweep_deterministic_across_threads(tmp_path):
    txt = BASE + """
[sweep]
axis = "z_omega"
start = 0.5
stop = 2.0
count = 5
spacing = "log"
"""
    p = _write(tmp_path, txt)
    out1 = tmp_path / "a.csv"
    out8 = tmp_path / "b.csv"
    assert main(["sweep", "--config", p, "--out", str(out1), "--threads", "1"]) == 0
    assert main(["sweep", "--config", p, "--out", str(out8), "--threads", "8"]) == 0
    assert out1.read_bytes() == out8.read_bytes()


def test_sweep_requires_sweep_table(tmp_path):
    assert main(["sweep", "--config", _write(tmp_path, BASE)]) == 1


def test_exit_code_2_on_budget(tmp_path, capsys):
    txt = BASE + """
[quad]
rel_tol = 1e-13
abs_tol = 1e-16
max_subdivisions = 4
"""
    out = tmp_path / "o.csv"
    code = main(["shift", "--config", _write(tmp_path, txt), "--out", str(out)])
    assert code == 2
    assert out.exists()
    assert "budget-exhausted" in out.read_text()


def test_material_parameter_sweep(tmp_path):
    txt = BASE + """
[sweep]
axis = "omega_p_par"
start = 0.1
stop = 1.0
count = 3
"""
    out = tmp_path / "o.csv"
    assert main(["sweep", "--config", _write(tmp_path, txt), "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 4
    # stronger plasma pulls harder: delta_E more negative along the sweep
    d = [float(r.split(",")[3]) for r in lines[1:]]
    assert d[0] > d[1] > d[2]


def test_asymptotics_subcommand(tmp_path):
    txt = BASE.replace('mode = "exact"', 'mode = "retarded-asymptotic"')
    txt = txt.replace("Z = 1.0", "Z = 50.0")
    out = tmp_path / "o.csv"
    assert main(["asymptotics", "--config", _write(tmp_path, txt), "--out", str(out)]) == 0
    row = out.read_text().splitlines()[1].split(",")
    # plasma/vacuum pair routes to the four-term retarded series
    from cpaniso.asymptotics import ret_F_plasma
    assert float(row[1]) == pytest.approx(ret_F_plasma(0.29, 50.0).F_par, rel=1e-14)
    assert row[8] == "retarded"
    # exact mode is rejected for this subcommand
    assert main(["asymptotics", "--config", _write(tmp_path, BASE)]) == 1


def test_nonretarded_mode(tmp_path):
    txt = BASE.replace('mode = "exact"', 'mode = "nonretarded"')
    txt = txt.replace("Z = 1.0", "Z = 0.01")
    out = tmp_path / "o.csv"
    assert main(["shift", "--config", _write(tmp_path, txt), "--out", str(out)]) == 0
    row = out.read_text().splitlines()[1].split(",")
    from cpaniso.materials import Material, lossless_plasma, vacuum
    from cpaniso.shifts import AtomSpec, Geometry, Transition, ground_shift_nonret
    expect = ground_shift_nonret(
        AtomSpec((Transition(1.0, 1.0, 1.0),)),
        Material(lossless_plasma(0.29), vacuum()), Geometry.half_space(), 0.01)
    assert float(row[3]) == pytest.approx(expect, rel=1e-14)
    assert row[8] == "nonretarded"


def test_excited_slab_rejected(tmp_path):
    txt = BASE.replace("omega_mi = 1.0", "omega_mi = -1.0") + """
[geometry]
kind = "slab"
L = 1.0
"""
    # config parses, but evaluation refuses slab residues
    assert main(["shift", "--config", _write(tmp_path, txt)]) == 1


def test_shipped_scenarios_parse():
    for f in SCENARIOS.glob("*.toml"):
        s = parse_scenario(f)
        assert s.atom.transitions


def test_validate_quick_passes():
    assert main(["validate", "--tier", "quick"]) == 0


def test_validate_exit_3_on_breach(monkeypatch):
    from cpaniso import oracle

    rows = oracle.load_pinned_values()
    bad = [(label, ov * 1.02, mv, ad, rd, grid)
           for (label, ov, mv, ad, rd, grid) in rows]
    monkeypatch.setattr(oracle, "load_pinned_values", lambda *a, **k: bad)
    assert main(["validate", "--tier", "quick"]) == 3
