import json
import subprocess
import sys
from pathlib import Path

import pytest

from quadcircuit.cli import main

SPECS = Path(__file__).resolve().parents[1] / "specs"
FIG9 = str(SPECS / "fig9.json")
PAIR = str(SPECS / "pair.json")
TUNABLE = str(SPECS / "tunable.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coupling_json(capsys):
    code, out, _ = run(capsys, "coupling", "--spec", FIG9, "--n", "1", "--m", "2")
    assert code == 0
    doc = json.loads(out)
    for key in ("normalized_coupling", "g_rad_s", "x_star", "omega_n0_rad_s", "Omega_m_rad_s"):
        assert key in doc
    assert doc["bias_flux_phi0"] == 0.4
    assert 1e-7 < abs(doc["normalized_coupling"]) < 1e-4


def test_modes_example(capsys):
    code, out, _ = run(capsys, "modes", "--spec", PAIR, "--xi", "0", "--omega-c-over", "10",
                       "--n-max", "5")
    assert code == 0
    lines = out.strip().split("\r\n")
    assert lines[0] == "n,omega_rad_s,k_per_m,refl_abs,residual"
    assert len(lines) == 7
    pair = json.loads((SPECS / "pair.json").read_text())
    v = 1 / (pair["cap_per_m_F"] * pair["ell_per_m_H"]) ** 0.5
    first = float(lines[1].split(",")[1])
    assert first * pair["total_len_m"] / v == pytest.approx(2.284453709564703, rel=1e-6)


def test_validity_thermal(capsys):
    code, out, _ = run(capsys, "validity", "--spec", FIG9, "--state", "thermal", "--T", "0.02")
    assert code == 0
    doc = json.loads(out)
    assert isinstance(doc["passed"], bool)
    assert doc["n_bar"] > 0 and "margin" in doc


@pytest.mark.parametrize("state,extra", [("vacuum", []), ("coherent", ["--beta", "3+1j"])])
def test_validity_other_states(capsys, state, extra):
    code, out, _ = run(capsys, "validity", "--spec", FIG9, "--state", state, *extra)
    assert code == 0
    assert json.loads(out)["state"] == state


GOLDEN = {
    ("tunable", TUNABLE): "phi_over_phi0,n,omega_rad_s,omega_approx_rad_s,eta,delta_d_m",
    ("analog-spectrum", FIG9): "n,omega_rad_s,k_per_m,refl_abs,residual,epsilon",
    ("baseline", None): "case,omega2_rad_s_m2,omega2_over_2pi_Hz_nm2,g_over_Omega",
}


@pytest.mark.parametrize("cmd,spec", list(GOLDEN))
def test_golden_headers(capsys, cmd, spec):
    argv = [cmd] + (["--spec", spec] if spec else [])
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.split("\r\n")[0] == GOLDEN[(cmd, spec)]


def test_exact_spectrum_header(capsys):
    code, out, _ = run(capsys, "analog-spectrum", "--spec", FIG9, "--exact", "--n-max", "2")
    assert code == 0
    assert out.split("\r\n")[0] == "n,omega_rad_s,k_per_m,residual"


def test_physics_error_exit_1(capsys):
    code, _, err = run(capsys, "tunable", "--spec", TUNABLE, "--flux", "0.5")
    assert code == 1
    assert "HalfQuantumFlux" in err


@pytest.mark.parametrize("argv", [
    ["modes", "--spec", "does-not-exist.json"],
    ["modes", "--spec", FIG9],
    ["bogus"],
    ["coupling", "--spec", FIG9, "--n", "x", "--m", "2"],
    ["sweep", "--spec", FIG9, "--target", "fig10", "--axis", "resonator_a.bias_flux_phi0:0:1:1"],
    ["sweep", "--spec", FIG9, "--target", "fig10", "--option", "nope=1"],
    ["validity", "--spec", FIG9, "--state", "thermal"],
    ["validity", "--spec", FIG9, "--state", "coherent", "--beta", "abc"],
    ["design", "--spec", FIG9, "--free", "bias_flux:0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_out_file_and_json_format(tmp_path, capsys):
    path = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "sweep", "--spec", FIG9, "--target", "fig12",
                       "--axis", "resonator_a.bias_flux_phi0:0.1:0.4:4", "--option", "n_max=2",
                       "--out", str(path))
    assert code == 0 and out == ""
    text = path.read_bytes().decode()
    assert text.startswith("bias_flux_phi0,n,m,x_star,error\r\n")
    assert text.count("\r\n") == 1 + 4 * 3
    code, out, _ = run(capsys, "sweep", "--spec", FIG9, "--target", "fig12",
                       "--axis", "resonator_a.bias_flux_phi0:0.1:0.4:4", "--format", "json")
    doc = json.loads(out)
    assert doc["columns"][-1] == "error" and len(doc["rows"]) == 4 * 10


def test_sweep_jobs_identical(capsys):
    argv = ["sweep", "--spec", FIG9, "--target", "fig10", "--axis",
            "resonator_a.bias_flux_phi0:0:0.5:7", "--option", "n_max=2"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv, "--jobs", "2")
    assert a == b


def test_design_cli(capsys):
    code, out, _ = run(capsys, "design", "--spec", FIG9, "--free", "bias_flux:0:0.45",
                       "--grid-points", "11")
    assert code == 0
    doc = json.loads(out)
    assert doc["parameters"]["bias_flux"] == pytest.approx(0.45)
    assert doc["spec"]["kind"] == "analog"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "quadcircuit", "baseline"], capture_output=True,
                         text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.startswith("case,")
