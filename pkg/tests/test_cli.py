import json
import subprocess
import sys

import pytest

from cutinterdict.cli import main, solution_from_dict
from cutinterdict.generate import random_instance
from cutinterdict.instance import format_instance, parse_instance

T1 = "# T1\n3 3 2\n1 2 4 2\n2 3 3 1\n1 3 5 3\n"


@pytest.fixture
def t1_file(tmp_path):
    path = tmp_path / "t1.txt"
    path.write_text(T1)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_json(capsys, t1_file):
    code, out, _ = run(capsys, "solve", "--json", t1_file)
    assert code == 0
    data = json.loads(out)
    assert data["value"] == 3 and data["candidates"] == 3
    assert data["lambda_star"] == {"num": 2, "den": 1}
    assert data["S"] == [0, 1] and data["R"] == [0]


def test_solution_json_round_trip(capsys, t1_file):
    _, out, _ = run(capsys, "solve", "--json", t1_file)
    sol = solution_from_dict(json.loads(out))
    sol.check(parse_instance(T1))
    assert sol.L_star == 6


def test_degenerate(capsys, tmp_path):
    path = tmp_path / "d.txt"
    path.write_text("3 3 2\n1 2 4 1\n2 3 3 1\n1 3 5 1\n")
    code, out, _ = run(capsys, "solve", "--json", str(path))
    data = json.loads(out)
    assert code == 0 and data["value"] == 0 and data["degenerate"] is True


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 1 2\n1 2 x 3\n")
    code, _, err = run(capsys, "solve", str(path))
    assert code == 2 and "line 2" in err


def test_check(capsys, t1_file, tmp_path):
    code, out, _ = run(capsys, "check", t1_file)
    assert code == 0 and out.startswith("ok")
    big = tmp_path / "big.txt"
    big.write_text(format_instance(random_instance(17, 20, seed=1)))
    code, _, err = run(capsys, "check", str(big))
    assert code == 2 and "n <= 16" in err


def test_check_many_generated(capsys, tmp_path):
    paths = []
    for seed in range(100):
        n = 3 + seed % 5
        path = tmp_path / f"g{seed}.txt"
        path.write_text(format_instance(random_instance(n, n - 1 + seed % 6, seed=seed)))
        paths.append(str(path))
    code, out, _ = run(capsys, "check", *paths)
    assert code == 0 and out.count("ok") == 100


def test_lambda(capsys, t1_file):
    code, out, _ = run(capsys, "lambda", "--json", t1_file)
    data = json.loads(out)
    assert data["lambda_star"] == {"num": 2, "den": 1}
    assert data["line_lo"]["slope"] == 1 and data["line_hi"]["slope"] == -1


def test_enumerate(capsys, t1_file):
    code, out, _ = run(capsys, "enumerate", "--json", t1_file)
    data = json.loads(out)
    assert sorted(c["value"]["num"] for c in data["cuts"]) == [6, 7, 9]
    code, out, _ = run(capsys, "enumerate", t1_file, "--threshold-mult", "7/6")
    assert out.startswith("1 cuts")


def test_oracle(capsys, t1_file):
    code, out, _ = run(capsys, "oracle", "--json", t1_file)
    assert json.loads(out)["value"] == 3


def test_text_output(capsys, t1_file):
    code, out, _ = run(capsys, "solve", t1_file)
    assert "value      3" in out and "lambda*    2" in out


def test_gen_is_deterministic(capsys):
    _, a, _ = run(capsys, "gen", "8", "14", "--seed", "42")
    _, b, _ = run(capsys, "gen", "8", "14", "--seed", "42")
    assert a == b
    inst = parse_instance(a)
    assert inst.n == 8 and inst.m == 14


def test_stdin_and_module_entry(t1_file):
    proc = subprocess.run([sys.executable, "-m", "cutinterdict", "solve", "--json", "-"],
                          input=T1, capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["value"] == 3
