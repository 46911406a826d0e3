import json
import subprocess
import sys

import pytest

from monideal.cli import CSV_HEADER, main, sweep_csv


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_closure_command(capsys):
    data = run_json(capsys, "closure", "--gens", "2,0;0,2")
    assert data == {"gens": "2,0;0,2", "closure": "2,0;1,1;0,2"}


def test_power_closure_command(capsys):
    data = run_json(capsys, "power-closure", "--gens", "2,0;0,2", "--power", "2")
    assert data["power_generators"] == "4,0;2,2;0,4"
    assert data["closure"] == "4,0;3,1;2,2;1,3;0,4"
    assert data["closed"] is False
    assert data["witness"] == "1,3"


def test_normal_lambda_command(capsys):
    data = run_json(capsys, "normal", "--lambda", "2,3,7")
    assert data == {
        "lambda": [2, 3, 7],
        "normal": False,
        "witness": {"p": 2, "alpha": "1,2,6"},
        "method": "exhaustive",
    }
    data = run_json(capsys, "normal", "--lambda", "3,3,3")
    assert data["normal"] is True and data["method"] == "gcd"
    data = run_json(capsys, "normal", "--lambda", "3,3,3", "--force-enumeration")
    assert data["normal"] is True and data["method"] == "exhaustive"


def test_normal_gens_command(capsys):
    data = run_json(capsys, "normal", "--gens", "2,0;1,1;0,2")
    assert data["normal"] is True and data["method"] == "powers"


def test_normal_requires_exactly_one_input_form(capsys):
    assert main(["normal"]) == 2
    assert main(["normal", "--gens", "1,0", "--lambda", "2,3"]) == 2
    capsys.readouterr()


def test_ilambda_gens_command(capsys):
    data = run_json(capsys, "ilambda-gens", "--lambda", "2,3")
    assert data == {"lambda": [2, 3], "generators": "2,0;1,2;0,3"}


def test_monoid_commands(capsys):
    data = run_json(capsys, "monoid", "almost-qn", "--lambda", "2,3,7")
    assert data == {
        "lambda": [2, 3, 7],
        "L": 42,
        "omega": [21, 14, 6],
        "target": 43,
        "almost_quasinormal": False,
    }
    data = run_json(capsys, "monoid", "quasinormal", "--lambda", "2,3,7")
    assert data["status"] == "failure"
    assert data["witness"] == {"s": 85, "p": 2}
    assert data["bound"] == 504
    data = run_json(capsys, "monoid", "quasinormal", "--lambda", "2,3,7", "--bound", "84")
    assert data["status"] == "quasinormal-on-window"
    assert data["witness"] is None


def test_rees_commands(capsys):
    data = run_json(capsys, "rees", "r1", "--lambda", "2,3,5")
    assert data["r1"] is True and data["witness"] == "1,1,1,1"
    data = run_json(capsys, "rees", "primes", "--lambda", "2,2")
    assert data["P_sigma"] == {"ring_vars": [1, 2], "t_generators": []}
    assert data["P_1"] == {"ring_vars": [1], "t_generators": ["2,0", "1,1"]}
    assert list(data) == ["P_1", "P_2", "P_3", "P_sigma"]


def test_reduce_command(capsys):
    data = run_json(capsys, "reduce", "--lambda", "2,3,7", "--index", "3")
    assert data == {
        "lambda": [2, 3, 7],
        "index": 3,
        "ell": 6,
        "lambda_prime": [2, 3, 13],
        "relation": "equivalent",
    }


def test_certify_command_schema(capsys):
    data = run_json(capsys, "certify", "--gens", "2,0;0,2", "--point", "1,1")
    assert data == {
        "verdict": "inside",
        "weights": [["2,0", "1/2"], ["0,2", "1/2"]],
        "slack": "0,0",
        "denominator": 2,
    }
    data = run_json(capsys, "certify", "--gens", "2,0;0,2", "--point", "1,0")
    assert data["verdict"] == "outside"
    assert all("/" in w or w.isdigit() for w in data["w"])


def test_certify_accepts_rational_points(capsys):
    data = run_json(capsys, "certify", "--gens", "2,0;0,2", "--point", "1/2,3/2")
    assert data["verdict"] == "inside"


def test_parse_errors_exit_2(capsys):
    assert main(["normal", "--lambda", "2,x,7"]) == 2
    assert main(["closure", "--gens", ""]) == 2
    assert main(["closure", "--gens", "1,0;-1,2"]) == 2
    assert main(["reduce", "--lambda", "2,3", "--index", "5"]) == 2
    assert main(["certify", "--gens", "2,0;0,2", "--point", "-1,0"]) == 2
    assert main(["sweep", "--n", "2", "--max-lambda", "3", "--workers", "0"]) == 2
    capsys.readouterr()


def test_unknown_command_exits_2(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_io_errors_exit_3(capsys, tmp_path):
    missing_dir = tmp_path / "no" / "such" / "dir" / "out.json"
    assert main(["closure", "--gens", "2,0;0,2", "--out", str(missing_dir)]) == 3
    capsys.readouterr()


def test_out_flag_writes_file(capsys, tmp_path):
    out = tmp_path / "verdict.json"
    code, stdout, _ = run_cli(
        capsys, "normal", "--lambda", "2,3,7", "--out", str(out)
    )
    assert code == 0 and stdout == ""
    assert json.loads(out.read_text())["normal"] is False


def test_sweep_csv_shape(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--n", "3", "--max-lambda", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 1 + 10  # canonical nondecreasing triples from [1,3]
    assert lines[1].startswith('"1,1,1",1,true')


def test_sweep_rows_for_known_lambda():
    text = sweep_csv(3, 7, None, 1)
    rows = {line.split('"')[1]: line for line in text.strip().split("\n")[1:]}
    row = rows["2,3,7"]
    assert '"p=2;alpha=1,2,6"' in row
    assert "failure;s=85;p=2" in row
    assert ",false," in row
    assert '"2,3,13",equivalent' in row


def test_sweep_deterministic_across_worker_counts(tmp_path):
    one = sweep_csv(3, 4, None, 1)
    three = sweep_csv(3, 4, None, 3)
    assert one == three


def test_seed_fixtures_round_trip(capsys, tmp_path):
    data = run_json(capsys, "seed-fixtures", "--out", str(tmp_path))
    assert len(data["written"]) == 2
    regenerated = json.loads((tmp_path / "lambda_2_3_7.json").read_text())
    from pathlib import Path

    committed = json.loads(
        (Path(__file__).parent / "fixtures" / "lambda_2_3_7.json").read_text()
    )
    assert regenerated == committed


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "monideal", "normal", "--lambda", "2,3,7"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["normal"] is False
    proc = subprocess.run(
        [sys.executable, "-m", "monideal", "normal", "--lambda", "nope"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
