import json
import subprocess
import sys

import pytest

from homrep.cli import build_parser, main, parse_lambda, parse_q, parse_t


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


def test_parsers():
    assert parse_q("generic") is None and parse_q("root:5") == 5
    assert parse_t("-1") == "minus1" and parse_t("generic") is None
    assert str(parse_lambda("(3,2)")) == "(3,2)"
    for bad in ("root:1", "zeta5"):
        with pytest.raises(Exception):
            parse_q(bad)


def test_conjecture_json(capsys):
    code, out = run(["conjecture", "--lambda", "3,2", "--q", "root:4"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["params"]["status"] == "VERIFIED" and data["params"]["radical_dim"] == 1
    assert data["timing_ms"] == 0.0


def test_unsupported_exit_zero(capsys):
    code, out = run(["conjecture", "--lambda", "2,2,1"], capsys)
    assert code == 0 and json.loads(out)["params"]["status"] == "UNSUPPORTED"


def test_form_command(capsys):
    code, out = run(["form", "--rep", "burau", "--n", "3", "--at", "root:3"], capsys)
    data = json.loads(out)
    assert code == 0 and data["data"]["radical_dim"] == 1 and data["data"]["form_space_dim"] == 1
    code, out = run(["form", "--rep", "lk", "--n", "3", "--probe", "0.7231", "1.9377"], capsys)
    assert json.loads(out)["data"]["inertia"] == {"pos": 0, "neg": 3, "zero": 0}


def test_specht_command(capsys):
    code, out = run(["specht", "--lambda", "3,2", "--q", "root:3", "--emit", "gram"], capsys)
    data = json.loads(out)["data"]
    assert code == 0 and (data["specht_dim"], data["d_lambda_dim"]) == (5, 1)
    assert len(data["gram"]) == 5


def test_rep_dump(capsys):
    code, out = run(["rep", "dump", "--kind", "lk", "--n", "3", "--basis", "u", "--t", "qinv"], capsys)
    data = json.loads(out)["data"]
    assert code == 0 and data["dim"] == 3 and set(data["generators"]) == {"s1", "s2"}
    with pytest.raises(SystemExit):
        main(["rep", "dump", "--kind", "burau", "--n", "3", "--t", "qinv"])


def test_table_format(capsys):
    code, out = run(["verify", "burau", "--n", "3", "--format", "table"], capsys)
    assert code == 0 and out.startswith("# verify burau") and "PASS" in out


def test_timing_flag(capsys):
    _, out = run(["verify", "trivial", "--n", "3", "--timing"], capsys)
    assert json.loads(out)["timing_ms"] >= 0.0


def test_deterministic_output(capsys):
    argv = ["specht", "--lambda", "2,2", "--emit", "matrices"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_bad_arguments():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["conjecture", "--lambda", "2,3"])
    with pytest.raises(SystemExit):
        build_parser().parse_args(["form", "--rep", "lk", "--n", "3", "--t", "two"])


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("HOMREP_THREADS", "0")
    with pytest.raises(SystemExit):
        main(["verify", "trivial", "--n", "2"])
    monkeypatch.setenv("HOMREP_THREADS", "4")
    assert main(["verify", "trivial", "--n", "2"]) == 0


def test_console_script_exit_code():
    proc = subprocess.run([sys.executable, "-m", "homrep.cli", "verify", "trivial", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["command"] == "verify trivial"


def test_failed_check_exit_one(capsys):
    # the unreduced Burau module is reducible, so its form space is not 1-dimensional
    code, out = run(["form", "--rep", "burau-unreduced", "--n", "3"], capsys)
    assert code == 1 and json.loads(out)["data"]["form_space_dim"] != 1
