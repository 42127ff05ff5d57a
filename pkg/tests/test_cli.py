"""CLI contract: subcommand outputs, exit codes, byte determinism."""

import json

import pytest

from hopilab.cli import run
from hopilab.dqi_model import FIG1A_COLUMNS, FIG1B_COLUMNS, FIG2_COLUMNS


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == 0
    return json.loads(out)


def test_params(capsys):
    payload = _run_json(capsys, ["params", "--q", "5", "--t", "34"])
    assert payload == {
        "q": 5,
        "t": 34,
        "n": 125,
        "k": 25,
        "g": 10,
        "d_designed": 91,
        "t_dual": 109,
        "ell": 7,
    }


def test_points(capsys):
    payload = _run_json(capsys, ["points", "--q", "2"])
    assert payload["q"] == 2 and payload["n"] == 8
    assert payload["points"][:2] == [[0, 0], [0, 1]]
    assert len(payload["points"]) == 8


def test_code_info(capsys):
    payload = _run_json(capsys, ["code-info", "--q", "2", "--t", "4"])
    assert set(payload) == {"q", "t", "n", "k", "d_designed", "t_dual", "basis"}
    assert payload["basis"] == [[0, 0], [1, 0], [0, 1], [2, 0]]


def test_dual_check_all_t(capsys):
    payload = _run_json(capsys, ["dual-check", "--q", "2"])
    assert payload["all_passed"] is True
    assert len(payload["results"]) == 7  # t in 1..7


def test_dual_check_single_t(capsys):
    payload = _run_json(capsys, ["dual-check", "--q", "3", "--t", "9"])
    assert payload["results"] == [
        {"t": 9, "t_dual": 22, "orthogonal": True, "rank_sum": 27, "passed": True}
    ]


def test_distance(capsys):
    payload = _run_json(capsys, ["distance", "--q", "2", "--t", "4"])
    assert payload["d_min"] == 4 and payload["d_designed"] == 4


def test_gen_instance_and_solve_pipeline(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    assert run(["gen-instance", "--q", "2", "--t", "4", "--r", "2", "--seed", "1",
                "--out", str(inst)]) == 0
    doc = json.loads(inst.read_text())
    assert doc["sets"][0] == [1, 2]

    out = tmp_path / "res.json"
    assert run(["solve", "--alg", "brute", "--instance", str(inst), "--out", str(out)]) == 0
    res = json.loads(out.read_text())
    assert res["satisfied"] == 7 and res["msg"] == [0, 0, 0, 2]
    assert set(res) == {"algorithm", "msg", "satisfied", "seed", "trials"}

    capsys.readouterr()
    payload = _run_json(
        capsys, ["solve", "--alg", "prange", "--instance", str(inst), "--seed", "42"]
    )
    assert payload["algorithm"] == "prange" and payload["satisfied"] >= 4

    payload = _run_json(
        capsys,
        ["solve", "--alg", "sa", "--instance", str(inst), "--seed", "5",
         "--schedule", "200,2.0,0.01"],
    )
    assert payload["algorithm"] == "sa" and 0 <= payload["satisfied"] <= 8

    payload = _run_json(
        capsys,
        ["solve", "--alg", "prange", "--instance", str(inst), "--seed", "2", "--trials", "10"],
    )
    assert payload["trials"] == 10


def test_outputs_byte_identical_across_runs(tmp_path):
    args_pairs = [
        ["gen-instance", "--q", "3", "--t", "9", "--r", "4", "--seed", "11"],
        ["sweep-fig1a", "--q", "5"],
        ["sweep-fig1b", "--rate", "0.2"],
        ["sweep-fig2", "--rate", "0.2", "--q-list", "4,8"],
    ]
    for argv in args_pairs:
        a, b = tmp_path / "a.out", tmp_path / "b.out"
        assert run(argv + ["--out", str(a)]) == 0
        assert run(argv + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


def test_sweep_csv_headers(tmp_path):
    out = tmp_path / "f.csv"
    run(["sweep-fig1a", "--q", "5", "--out", str(out)])
    assert out.read_text().splitlines()[0] == ",".join(FIG1A_COLUMNS)
    run(["sweep-fig1b", "--rate", "0.2", "--out", str(out)])
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(FIG1B_COLUMNS)
    assert len(lines) == 6  # header + default q list
    run(["sweep-fig2", "--rate", "0.2", "--q-list", "4", "--out", str(out)])
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(FIG2_COLUMNS)
    assert len(lines) == 17


@pytest.mark.parametrize(
    "argv",
    [
        ["params", "--q", "6", "--t", "4"],  # not a prime power
        ["params", "--q", "2", "--t", "0"],  # t out of range
        ["gen-instance", "--q", "2", "--t", "4", "--r", "9", "--seed", "1", "--out", "x"],
        ["gen-instance", "--q", "2", "--t", "4", "--r", "2", "--seed", "1"],  # no --out
        ["sweep-fig1b", "--rate", "1.5", "--out", "x.csv"],
        ["sweep-fig1b", "--rate", "0.2", "--q-list", "buzz", "--out", "x.csv"],
        ["points"],  # missing --q
        ["no-such-command"],
    ],
)
def test_validation_failures_exit_2(argv, tmp_path, capsys):
    argv = [a if a not in ("x", "x.csv") else str(tmp_path / a) for a in argv]
    assert run(argv) == 2
    capsys.readouterr()


def test_solve_requires_seed_for_stochastic_algs(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    run(["gen-instance", "--q", "2", "--t", "4", "--r", "2", "--seed", "1", "--out", str(inst)])
    assert run(["solve", "--alg", "prange", "--instance", str(inst)]) == 2
    assert run(["solve", "--alg", "sa", "--instance", str(inst)]) == 2
    capsys.readouterr()


def test_solve_missing_instance_file_exits_2(tmp_path, capsys):
    missing = tmp_path / "nope.json"
    assert run(["solve", "--alg", "brute", "--instance", str(missing)]) == 2
    capsys.readouterr()


def test_solve_rejects_malformed_instance(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"version": 1}')
    assert run(["solve", "--alg", "brute", "--instance", str(bad)]) == 2
    capsys.readouterr()


def test_solve_bad_schedule_exits_2(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    run(["gen-instance", "--q", "2", "--t", "4", "--r", "2", "--seed", "1", "--out", str(inst)])
    assert run(["solve", "--alg", "sa", "--instance", str(inst), "--seed", "1",
                "--schedule", "fast"]) == 2
    capsys.readouterr()
