import json
import subprocess
import sys

import pytest

from sclkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_se(capsys):
    code, out, _ = run(capsys, "se", "!b && a")
    assert code == 0
    assert out == "(F <b> (T <a> F))\n"


def test_se_json_and_dot(capsys):
    code, out, _ = run(capsys, "se", "a", "--json")
    assert code == 0
    assert json.loads(out) == {
        "node": "a",
        "l": {"leaf": "T"},
        "r": {"leaf": "F"},
    }
    code, out, _ = run(capsys, "se", "a", "--dot")
    assert code == 0
    assert out.startswith("digraph tree {")
    assert '"a"' in out and "shape=box" in out


def test_se_expands_full_connectives(capsys):
    code, out, _ = run(capsys, "se", "a &.& F")
    assert code == 0
    code2, out2, _ = run(capsys, "se", "F &.& a")
    assert out == out2


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "a")
    assert code == 0
    assert out == "T && (a && T || F)\n"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "(a && T) || F")
    assert (code, out) == (0, "l-term\n")


def test_eq_exit_codes(capsys):
    code, out, _ = run(capsys, "eq", "a && a", "a")
    assert (code, out) == (1, "INEQUAL\n")
    code, out, _ = run(capsys, "eq", "(a && b) && c", "a && (b && c)")
    assert (code, out) == (0, "EQUAL\n")
    code, _, err = run(capsys, "eq", "a &&", "a")
    assert code == 2 and "ParseError" in err
    code, _, err = run(capsys, "eq", "a <| b |> c", "a", "--engine", "nf")
    assert code == 2 and "ModeViolation" in err


def test_eq_engines_same_verdict(capsys):
    for engine in ("tree", "nf", "cp"):
        code, out, _ = run(capsys, "eq", "!!a", "a", "--engine", engine)
        assert (code, out) == (0, "EQUAL\n")


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "((T <b> F) <a> F)", "--kind", "cd")
    assert code == 0
    assert out.splitlines() == [
        "candidate 1: context=(^ <a> F) core=(T <b> F)",
        "selected: context=(^ <a> F) core=(T <b> F)",
    ]
    code, out, _ = run(capsys, "decompose", "((T <b> F) <a> F)", "--kind", "dd")
    assert code == 0
    assert out == "selected: none\n"


def test_decompose_json_tree_input(capsys):
    tree_json = '{"node":"a","l":{"node":"b","l":{"leaf":"T"},"r":{"leaf":"F"}},"r":{"leaf":"F"}}'
    code, out, _ = run(capsys, "decompose", tree_json, "--kind", "cd")
    assert code == 0
    data = json.loads(run(capsys, "decompose", tree_json, "--kind", "cd", "--json")[1])
    assert data["selected"]["core"] == {
        "node": "b",
        "l": {"leaf": "T"},
        "r": {"leaf": "F"},
    }


def test_invert(capsys):
    code, out, _ = run(capsys, "invert", "(F <b> (T <a> F))")
    assert code == 0
    nf_out = run(capsys, "nf", "!b && a")[1]
    assert out == nf_out


def test_translate(capsys):
    code, out, _ = run(capsys, "translate", "!a", "--to", "cp")
    assert (code, out) == (0, "F <| a |> T\n")
    code, out, _ = run(capsys, "translate", "a &.& b", "--to", "full")
    assert (code, out) == (0, "(a || b && F) && b\n")


def test_basic(capsys):
    code, out, _ = run(capsys, "basic", "a")
    assert (code, out) == (0, "T <| a |> F\n")
    code, out, _ = run(capsys, "basic", "a || b")
    assert (code, out) == (0, "T <| a |> (T <| b |> F)\n")


def test_models_check(capsys):
    code, out, _ = run(capsys, "models", "check")
    assert code == 0
    assert "result: PASS" in out
    assert "M_F10: refutes F10" in out and "[3 != 1]" in out
    code, out, _ = run(capsys, "models", "check", "--json")
    data = json.loads(out)
    assert data["pass"] is True
    assert len(data["models"]) == 8


def test_fuzz_is_deterministic(capsys):
    first = run(capsys, "fuzz", "--count", "25", "--seed", "9")
    second = run(capsys, "fuzz", "--count", "25", "--seed", "9")
    assert first == second
    assert first[0] == 0
    data = json.loads(first[1])
    assert data["pass"] is True
    assert data["checks"]["invert_roundtrip"] == 25


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["eq", "only-one-arg"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "T", "--kind", "zz"])
    assert exc.value.code == 64


def test_semantic_error_exit_code(capsys):
    code, _, err = run(capsys, "se", "a &&")
    assert code == 65 and "ParseError" in err
    code, _, err = run(capsys, "se", "(a || b) && (a || b) && (a || b)", "--cap", "9")
    assert code == 65 and "TreeTooLarge" in err
    code, _, err = run(capsys, "invert", "(T <a> T")
    assert code == 65


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sclkit.cli", "se", "!b && a"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "(F <b> (T <a> F))\n"
