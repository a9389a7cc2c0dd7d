"""End-to-end checks of the command-line surface and its exit-code contract:
0 success, 1 usage, 2 validation/statistical failure, 3 I/O."""

import os
import subprocess

import pytest

CLI = os.environ.get("RANDTREE_CLI", "randtree")


def run(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_gen_sexpr_singletons():
    r = run("gen", "--size", "3", "--seed", "1", "--terminals", "x",
            "--functions", "ADD", "--format", "sexpr")
    assert r.returncode == 0
    assert r.stdout.strip() == "(ADD x x)"


def test_gen_golden_seven():
    r = run("gen", "--size", "7", "--seed", "1", "--terminals", "x",
            "--functions", "ADD")
    assert r.returncode == 0
    assert r.stdout.strip() == "(ADD x (ADD x (ADD x x)))"


def test_gen_even_size_is_usage_error():
    r = run("gen", "--size", "2", "--seed", "1")
    assert r.returncode == 1
    assert "InvalidSize" in r.stderr


def test_gen_seed_zero_rejected():
    r = run("gen", "--size", "3", "--seed", "0")
    assert r.returncode == 1


def test_gen_requires_exactly_one_size_flag():
    assert run("gen", "--seed", "1").returncode == 1
    assert run("gen", "--size", "3", "--internal", "1").returncode == 1


def test_gen_internal_flag():
    r = run("gen", "--internal", "3", "--seed", "1", "--terminals", "x",
            "--functions", "ADD", "--format", "summary")
    assert r.returncode == 0
    size, depth, seed = r.stdout.split()
    assert (size, seed) == ("7", "1")
    assert int(depth) == 4


def test_gen_summary_golden():
    r = run("gen", "--size", "1001", "--seed", "42", "--format", "summary")
    assert r.returncode == 0
    assert r.stdout.strip() == "1001 73 42"


def test_gen_prims_file(tmp_path):
    prims = tmp_path / "prims.dat"
    prims.write_text("# test set\nx 0\ny 0\nADD 2\nMUL 2\n")
    r = run("gen", "--size", "21", "--seed", "5", "--prims", str(prims),
            "--format", "summary")
    assert r.returncode == 0
    assert r.stdout.startswith("21 ")


def test_gen_prims_conflict(tmp_path):
    prims = tmp_path / "prims.dat"
    prims.write_text("x 0\nADD 2\n")
    r = run("gen", "--size", "3", "--seed", "1", "--prims", str(prims),
            "--terminals", "x", "--functions", "ADD")
    assert r.returncode == 1


def test_gen_missing_prims_file_is_io_error():
    r = run("gen", "--size", "3", "--seed", "1", "--prims", "/nonexistent.dat")
    assert r.returncode == 3


def test_gen_dot_output():
    r = run("gen", "--size", "3", "--seed", "1", "--format", "dot")
    assert r.returncode == 0
    assert r.stdout.count("[label=") == 3
    assert r.stdout.count("->") == 2


def test_gen_opcode_file_layout(tmp_path):
    out = tmp_path / "tree.rbt"
    r = run("gen", "--size", "1", "--seed", "1", "--terminals", "x",
            "--functions", "ADD", "--format", "opcodes", "--out", str(out))
    assert r.returncode == 0
    data = out.read_bytes()
    assert len(data) == 40
    assert data[:5] == b"RBT1\x01"


def test_gen_size_suffixes():
    r = run("gen", "--size", "2k", "--seed", "1")  # 2000 is even
    assert r.returncode == 1
    assert "InvalidSize" in r.stderr


def test_rbt_max_bytes_cap():
    r = run("gen", "--size", "100001", "--seed", "1",
            env_extra={"RBT_MAX_BYTES": "1000"})
    assert r.returncode == 1
    assert "RBT_MAX_BYTES" in r.stderr


def test_enumerate():
    r = run("enumerate", "--n", "2")
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["FFLLL", "FLFLL", "count 2"]


def test_enumerate_cap():
    assert run("enumerate", "--n", "15").returncode == 1


def test_validate():
    r = run("validate", "--max-n", "4")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert len(lines) == 4
    assert all(line.endswith("PASS") for line in lines)
    assert "arrangements=126 shapes=14 fiber=9" in lines[3]


def test_validate_out_of_range():
    assert run("validate", "--max-n", "9").returncode == 1


def test_stats_depth(tmp_path):
    csv = tmp_path / "depths.csv"
    r = run("stats-depth", "--size", "1001", "--trials", "100", "--seed", "1",
            "--csv", str(csv))
    assert r.returncode == 0
    header, row = r.stdout.splitlines()
    assert header == "size,trials,mean,std,predicted,rel_err"
    assert row.startswith("1001,100,")
    lines = csv.read_text().splitlines()
    assert lines[0] == "trial,size,depth"
    assert len(lines) == 101
    assert lines[1].startswith("0,1001,")


def test_stats_uniform_pass():
    r = run("stats-uniform", "--n", "4", "--trials", "14000", "--seed", "1")
    assert r.returncode == 0
    assert "result=pass" in r.stdout
    assert "dof=13" in r.stdout


def test_stats_uniform_too_few_trials():
    assert run("stats-uniform", "--n", "4", "--trials", "139").returncode == 1


def test_bench(tmp_path):
    csv = tmp_path / "bench.csv"
    r = run("bench", "--sizes", "1001,10001,100001", "--reps", "2",
            "--csv", str(csv))
    assert r.returncode == 0
    assert "slope=" in r.stdout
    lines = csv.read_text().splitlines()
    assert lines[0] == "size,reps,seconds,nodes_per_sec"
    assert len(lines) == 4


def test_bench_max_size_cap():
    r = run("bench", "--sizes", "300000001", "--reps", "1")
    assert r.returncode == 1
    assert "max-size" in r.stderr


def test_bench_even_size():
    assert run("bench", "--sizes", "1000", "--reps", "1").returncode == 1


def test_gen_large_summary_sanity():
    r = run("gen", "--size", "1000001", "--seed", "7", "--format", "summary")
    assert r.returncode == 0
    size, depth, seed = r.stdout.split()
    assert (size, seed) == ("1000001", "7")
    # Single-sample depth: anywhere between the balanced floor and the comb
    # ceiling, near sqrt(2*pi*10^6) ~ 2507 in the typical case.
    assert 20 <= int(depth) <= 500001


def test_gen_bad_format():
    assert run("gen", "--size", "3", "--seed", "1",
               "--format", "json").returncode == 1


def test_stats_uniform_sweep():
    r = run("stats-uniform", "--n", "3", "--trials", "1000", "--seed", "1",
            "--sweep", "2")
    assert r.returncode == 0
    assert len(r.stdout.splitlines()) == 2


def test_unknown_command():
    assert run("frobnicate").returncode == 1
