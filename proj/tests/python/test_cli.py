# End-to-end checks of the command line tool. The binary path arrives via
# EDGESCHED_BIN so the same file works from ctest and by hand.

import json
import os
import subprocess

import pytest

BIN = os.environ.get("EDGESCHED_BIN")

pytestmark = pytest.mark.skipif(BIN is None, reason="EDGESCHED_BIN not set")

CSV_HEADER = (
    "algorithm,n,m,T,total_accuracy,lp_objective,makespan,"
    "ed_load,es_load,violation_pct,fractional_jobs,runtime_ms,seed"
)


def run(*args, **kwargs):
    return subprocess.run([BIN, *args], capture_output=True, text=True, **kwargs)


def gen_instance(tmp_path, profile="table2", n=8, T=1.0, seed=4, extra=()):
    path = tmp_path / "inst.json"
    out = run(
        "gen",
        "--profile", profile,
        "--n", str(n),
        "--T", str(T),
        "--seed", str(seed),
        "--out", str(path),
        *extra,
    )
    assert out.returncode == 0, out.stderr
    return path


def test_gen_writes_valid_json(tmp_path):
    path = gen_instance(tmp_path)
    data = json.loads(path.read_text())
    assert set(data) == {"m", "n", "accuracies", "times", "comm_times", "T"}
    assert data["m"] == 2 and data["n"] == 8
    assert len(data["times"]) == 3 and len(data["times"][0]) == 8


def test_solve_each_algorithm(tmp_path):
    path = gen_instance(tmp_path, n=6, T=2.0)
    for algo in ("amr2", "greedy", "exact"):
        out = run("solve", "--instance", str(path), "--algo", algo)
        assert out.returncode == 0, out.stderr
        lines = out.stdout.strip().splitlines()
        assert lines[0] == CSV_HEADER
        assert lines[1].startswith(algo + ",6,2,")


def test_solve_amdp_identical(tmp_path):
    path = gen_instance(tmp_path, profile="identical_random", n=5, T=2.0, extra=("--m", "2"))
    out = run("solve", "--instance", str(path), "--algo", "amdp")
    assert out.returncode == 0, out.stderr
    assert out.stdout.splitlines()[1].startswith("amdp,5,2,")


def test_solve_csv_out_appends_header_once(tmp_path):
    path = gen_instance(tmp_path, n=6, T=2.0)
    csv_path = tmp_path / "rows.csv"
    for _ in range(2):
        out = run("solve", "--instance", str(path), "--algo", "greedy", "--out", str(csv_path))
        assert out.returncode == 0, out.stderr
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 3


def test_infeasible_exit_code(tmp_path):
    path = tmp_path / "tight.json"
    path.write_text(json.dumps({
        "m": 1,
        "n": 1,
        "accuracies": [0.5, 1.0],
        "times": [[2.7], [2.7]],
        "T": 0.9,
    }))
    out = run("solve", "--instance", str(path), "--algo", "amr2")
    assert out.returncode == 1
    assert "Infeasible" in out.stderr


def test_bad_input_exit_code(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    out = run("solve", "--instance", str(path), "--algo", "amr2")
    assert out.returncode == 2
    missing = run("solve", "--instance", str(tmp_path / "nope.json"), "--algo", "amr2")
    assert missing.returncode == 2
    bad_algo = run("solve", "--instance", str(path), "--algo", "magic")
    assert bad_algo.returncode == 2


def test_delta_env_override(tmp_path):
    path = gen_instance(tmp_path, profile="identical_random", n=5, T=2.0, extra=("--m", "2"))
    env = dict(os.environ, EDGESCHED_DELTA="0.002")
    out = subprocess.run(
        [BIN, "solve", "--instance", str(path), "--algo", "amdp"],
        capture_output=True, text=True, env=env,
    )
    assert out.returncode == 0, out.stderr
    bad_env = dict(os.environ, EDGESCHED_DELTA="zero")
    out = subprocess.run(
        [BIN, "solve", "--instance", str(path), "--algo", "amdp"],
        capture_output=True, text=True, env=bad_env,
    )
    assert out.returncode == 2


def test_sweep_row_count(tmp_path):
    csv_path = tmp_path / "sweep.csv"
    out = run(
        "sweep",
        "--instance-template", "profile=table2,n=10,T=1.0,seed=0",
        "--vary", "T",
        "--from", "1.0",
        "--to", "2.0",
        "--steps", "3",
        "--algos", "amr2,greedy",
        "--seeds", "2",
        "--out", str(csv_path),
    )
    assert out.returncode == 0, out.stderr
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + 3 * 2 * 2
    assert sum(1 for l in lines[1:] if l.startswith("amr2,")) == 6


def test_verify_deterministic():
    a = run("verify", "--seeds", "25")
    b = run("verify", "--seeds", "25")
    assert a.returncode == 0, a.stdout + a.stderr
    assert a.stdout == b.stdout
    assert "verify: PASS" in a.stdout


def test_verify_bad_seeds():
    out = run("verify", "--seeds", "0")
    assert out.returncode == 2
