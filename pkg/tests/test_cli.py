import json
import subprocess
import sys

import pytest

from fixtures import A_WORD, el
from ussbraid.cli import main
from ussbraid.normal_form import GroupElement, multiply


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "-n", "4", A_WORD)
    assert code == 0
    assert out == "D^0 . 1 2 3 2 . 2 1 3 . 1 3\n"


def test_nf_round_trip(capsys):
    _, first, _ = run(capsys, "nf", "-n", "5", "-1 2 -3 4 D 2 -1")
    _, second, _ = run(capsys, "nf", "-n", "5", first.strip())
    assert first == second


def test_uss_of_delta(capsys):
    code, out, _ = run(capsys, "uss", "-n", "4", "D")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "D^1"
    assert lines[1] == "# 1 elements, 1 orbits, orbit size 1"


def test_uss_example_a(capsys):
    _, out, _ = run(capsys, "uss", "-n", "4", A_WORD)
    assert out.splitlines()[-1] == "# 6 elements, 2 orbits, orbit size 3"


def test_conjugate_witness_verifies(capsys):
    x, y = A_WORD, "1 3 2 1 2 1 3 1 3"
    code, out, _ = run(capsys, "conjugate", "-n", "4", x, "--", y)
    assert code == 0
    w = GroupElement.parse(4, out.strip())
    assert multiply(multiply(w.inverse(), el(4, x)), w) == el(4, y)
    # substituted back through nf
    _, lhs, _ = run(capsys, "nf", "-n", "4", f"{w.inverse().serialize()} {x} {out.strip()}")
    _, rhs, _ = run(capsys, "nf", "-n", "4", y)
    assert lhs == rhs


def test_conjugate_fail(capsys):
    code, out, _ = run(capsys, "conjugate", "-n", "4", "1 2", "--", "1 1")
    assert code == 1 and out == "FAIL\n"


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "-n", "4", A_WORD, "--", "-2 1 " + A_WORD + " -1 2")
    assert code == 0 and out.startswith("D^")
    code, _, err = run(capsys, "oracle", "-n", "6", "1", "--", "2")
    assert code == 2 and "n <= 5" in err
    code, out, _ = run(capsys, "oracle", "-n", "5", "--budget", "3", "1 2 -3 4 2", "--", "2 -3 4 2 1")
    assert code == 3 and out == "INCONCLUSIVE\n"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "nf", "-n", "4", "1 5")
    assert code == 2 and "invalid generator" in err
    code, _, _ = run(capsys, "cycle", "-n", "4", "D^2")
    assert code == 2
    code, _, _ = run(capsys, "nf", "-n", "1", "1")
    assert code == 2
    with pytest.raises(SystemExit) as e:
        main(["nf", "1 2"])
    assert e.value.code == 2


def test_unary_commands(capsys):
    assert run(capsys, "inv", "-n", "3", "1 2")[1] == "D^-1 . 2\n"
    assert run(capsys, "pow", "-n", "3", "1 2", "3")[1] == "D^2\n"
    assert run(capsys, "cycle", "-n", "4", A_WORD)[1] == "D^0 . 2 1 3 . 1 3 . 1 2 3 2\n"
    assert run(capsys, "decycle", "-n", "4", A_WORD)[1] == "D^0 . 1 3 . 1 2 3 2 . 2 1 3\n"
    assert run(capsys, "tdecycle", "-n", "4", A_WORD)[1] == "D^0 . 1 3 . 1 3 2 1 . 2 1 3\n"
    assert run(capsys, "rigid", "-n", "4", A_WORD)[1] == "rigid\n"
    assert run(capsys, "rigid", "-n", "4", "1 3 1")[1] == "not rigid\n"
    assert run(capsys, "periodic", "-n", "4", "3 2 1")[1] == "periodic: x^4 = D^2\n"
    assert run(capsys, "periodic", "-n", "4", A_WORD)[1] == "not periodic\n"
    out = run(capsys, "sss", "-n", "4", "-1 " + A_WORD + " 1")[1].splitlines()
    assert out[0].startswith("D^0 .") and out[1].startswith("conjugator ")


def test_graph_outputs(capsys, tmp_path):
    _, dot, _ = run(capsys, "graph", "-n", "4", A_WORD)
    assert dot.startswith("digraph USS {") and dot.count("->") == 12
    _, js, _ = run(capsys, "graph", "-n", "4", "--format", "json", A_WORD)
    assert len(json.loads(js)["vertices"]) == 6
    _, q, _ = run(capsys, "quotient", "-n", "4", A_WORD)
    assert q.count("[label=\"O") == 2
    _, b, _ = run(capsys, "black", "-n", "4", "--format", "json", A_WORD)
    assert len(json.loads(b)["vertices"]) == 3
    _, g, _ = run(capsys, "grey", "-n", "4", "--format", "json", A_WORD)
    assert len(json.loads(g)["vertices"]) == 6
    path = tmp_path / "a.dot"
    assert main(["graph", "-n", "4", "-o", str(path), A_WORD]) == 0
    assert path.read_text() == dot


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "ussbraid", "graph", "-n", "4", "--format", "json", "1 3 1"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and json.loads(first)["n"] == 4
