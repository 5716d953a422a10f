import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from kreinorbit.cli import FAIL, NOT_APPLICABLE, PASS, RunConfig, dumps, main, run_pipeline, sweep_windows

DATA = Path(__file__).resolve().parent.parent / "data"
SMALL = dict(K=4, W=8, trials=40)


def run(name, **kw):
    return run_pipeline(RunConfig(str(DATA / name), **{**SMALL, **kw}))


def test_delta_all_pass():
    rep = run("delta0.json")
    assert rep["neutral_kernel_dim"] == 0
    assert all(v["status"] == PASS for v in rep["verdicts"].values())
    assert rep["moment_residual_max"] == 0


def test_ones_neutral_branch():
    rep = run("ones4.json")
    assert rep["neutral_kernel_dim"] > 0
    v = rep["verdicts"]
    assert v["totality"]["status"] == NOT_APPLICABLE
    for key in ("moment_reproduction", "model_cross_orthogonality", "omega_isometry", "plus_minus_gram"):
        assert v[key]["status"] == PASS


def test_char_i_runs():
    rep = run("char_i.json", K=2, W=8)
    # 2W + 2 = 18 is divisible by 3, so the window-8 Toeplitz block is singular
    dims = {e["W"]: e["dim"] for e in rep["neutral_kernel_dims"]}
    assert dims == {1: 0, 2: 1, 4: 0, 8: 1}
    assert rep["neutral_kernel_dim"] == 1
    assert rep["verdicts"]["totality"]["status"] == NOT_APPLICABLE


def test_verdicts_carry_value_and_tolerance():
    rep = run("delta0.json")
    for v in rep["verdicts"].values():
        assert {"value", "tolerance", "status"} <= set(v)


def test_totality_fails_when_tolerance_absurd():
    rep = run("delta0.json", tol=0.9)
    assert rep["verdicts"]["totality"]["status"] == FAIL


def test_negative_index_is_parse_error(tmp_path, capsys):
    p = tmp_path / "neg.json"
    p.write_text(json.dumps({"moments": [{"n": -1, "re": 1, "im": 0}]}))
    assert main(["verify", str(p)]) == 2
    assert "seq_core" in capsys.readouterr().err


def test_asymmetric_config_rejected(tmp_path):
    with pytest.raises(ValueError):
        RunConfig(str(DATA / "delta0.json"), K=8, W=4)
    assert main(["verify", str(DATA / "delta0.json"), "--K", "8", "--W", "4"]) == 2


def test_build_subcommand(capsys):
    assert main(["build", str(DATA / "char_i.json"), "--K", "2", "--W", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    f0 = {e["n"]: complex(e["re"], e["im"]) for e in out["f0"]}
    rho = out["weights"]["rho"]
    assert rho == pytest.approx(math.e)
    assert f0[0] == 0.5
    assert f0[1] == pytest.approx(-0.5j / rho) and f0[-1] == pytest.approx(0.5j / rho)
    assert out["self_product"] == {"re": 1.0, "im": 0.0}


def test_verify_exit_status(capsys):
    assert main(["verify", str(DATA / "delta0.json"), "--K", "4", "--W", "8", "--trials", "20"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines and all(line.startswith(("PASS", "N/A")) for line in lines)
    assert main(["verify", str(DATA / "delta0.json"), "--K", "4", "--W", "8", "--tol", "0.9"]) == 1


def test_report_to_file_is_deterministic(tmp_path):
    out = tmp_path / "r.json"
    args = ["report", str(DATA / "ones4.json"), "--K", "4", "--W", "8", "--trials", "30", "--json-out", str(out)]
    assert main(args) == 0
    first = out.read_bytes()
    assert main(args) == 0
    assert out.read_bytes() == first
    assert json.loads(first)["config"]["emit"] == str(out)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kreinorbit", "verify", str(DATA / "delta0.json"), "--K", "2", "--W", "4", "--trials", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr


def test_dumps_formatting():
    assert dumps({"x": 1.0, "y": [0.1, 2], "z": None}) == '{\n  "x": 1.0,\n  "y": [\n    0.10000000000000001,\n    2\n  ],\n  "z": null\n}'
    assert dumps([]) == "[]"


def test_sweep_windows():
    kernel, totality = sweep_windows(16, 32)
    assert kernel == [1, 2, 4, 8, 16, 32]
    assert totality == [16, 24, 32]
    assert sweep_windows(0, 0) == ([0], [0])
    assert sweep_windows(3, 5)[0] == [1, 2, 4, 5]
