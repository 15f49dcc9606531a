import json
import subprocess
import sys
from pathlib import Path

import pytest

from frobw.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_report_zigzag(capsys):
    code, out, _ = run(capsys, "report", "--builtin", "zigzag", "--graph", "path2")
    assert code == 0
    assert "cocenter: dim 3" in out
    assert "kappa = 0" in out
    assert "<e1> <> <e1> = 2<c1>" in out
    assert "<e1> <> <e2> = -<c1>" in out
    assert "<c1> <> <e1> = 0" in out


def test_report_matrix(capsys):
    code, out, _ = run(capsys, "report", "--builtin", "matrix", "--n", "2")
    assert code == 0
    assert "cocenter: dim 1" in out
    assert "kappa = E11 + E22" in out


def test_report_machine_format(capsys):
    code, out, _ = run(capsys, "report", "--builtin", "matrix", "--n", "2", "--format", "machine")
    assert code == 0
    lines = out.splitlines()
    assert all("=" in line for line in lines)
    assert "cocenter_dim=1" in lines
    assert "kappa=(1/1, 0/1, 0/1, 1/1)" in lines


def test_report_degenerate_file(capsys):
    code, out, _ = run(capsys, "report", "--file", str(FIXTURES / "degenerate_gram.json"))
    assert code == 2
    assert "axiom violated: nondegeneracy (Gram singular)" in out


def test_report_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "report", "--file", str(tmp_path / "nope.json"))
    assert code == 2
    assert err.startswith("error:")


def test_report_file_round_trip(capsys, tmp_path, zigzag2):
    path = tmp_path / "z.json"
    path.write_text(json.dumps(zigzag2.data.to_json()))
    _, from_file, _ = run(capsys, "report", "--file", str(path))
    _, builtin, _ = run(capsys, "report", "--builtin", "zigzag", "--graph", "path2")
    assert from_file.splitlines()[1:] == builtin.splitlines()[1:]


@pytest.mark.parametrize(
    "lhs, rhs, expected",
    [
        ("L(1,0,1)", "L(-1,0,1)", "1·C"),
        ("L(0,2,1)", "L(3,1,1)", "6·L(3,2,1)"),
        ("C", "L(2,1,1)", "0"),
        ("L(2,1,1)", "C", "0"),
    ],
)
def test_bracket_field(capsys, lhs, rhs, expected):
    code, out, _ = run(capsys, "bracket", lhs, rhs)
    assert code == 0
    assert out.strip() == expected


def test_bracket_zigzag_labels(capsys):
    code, out, _ = run(capsys, "bracket", "--builtin", "zigzag", "--graph", "path2", "L(2,1,e1)", "L(3,2,e2)")
    assert code == 0
    assert out.strip() == "1·L(5,2,c1)"


def test_bracket_index_label(capsys):
    _, by_label, _ = run(capsys, "bracket", "--builtin", "zigzag", "--graph", "path2", "L(1,1,e1)", "L(1,0,e1)")
    _, by_index, _ = run(capsys, "bracket", "--builtin", "zigzag", "--graph", "path2", "L(1,1,0)", "L(1,0,0)")
    assert by_label == by_index


@pytest.mark.parametrize("term", ["L(1,0,zz)", "L(1,0)", "M(1,0,1)", "L(1,-1,1)"])
def test_bracket_bad_terms(capsys, term):
    code, _, err = run(capsys, "bracket", term, "C")
    assert code == 2
    assert err.startswith("error:")


def test_normal_form(capsys):
    code, out, _ = run(capsys, "normal-form", "--k", "1", "L(1,0,1) L(-1,0,1)")
    assert code == 0
    assert out.strip() == "L(-1,0,1)L(1,0,1) + 1"


def test_normal_form_rational_k(capsys):
    code, out, _ = run(capsys, "normal-form", "--k", "1/2", "L(1,0,1) L(-1,0,1)")
    assert code == 0
    assert out.strip() == "L(-1,0,1)L(1,0,1) + 1/2"


def test_wreath_banner(capsys):
    code, out, _ = run(capsys, "wreath", "--n", "2", "--cocenter-dim", "--D", "1", "--Dcomm", "3")
    assert code == 0
    first = out.splitlines()[0]
    assert first.startswith("truncation: D = 1, Dcomm = 3")
    assert "dimension 4" in out
    assert "independent in the quotient: yes" in out


def test_wreath_machine(capsys):
    code, out, _ = run(
        capsys, "wreath", "--n", "2", "--cocenter-dim", "--D", "1", "--Dcomm", "3", "--format", "machine"
    )
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.splitlines())
    assert kv["D"] == "1" and kv["Dcomm"] == "3"
    assert kv["dimension"] == "4"
    assert kv["claimed_independent"] == "1"


def test_wreath_degree_cap(capsys, monkeypatch):
    monkeypatch.setenv("FROBW_MAX_DEGREE", "2")
    code, _, err = run(capsys, "wreath", "--n", "2", "--cocenter-dim", "--D", "1", "--Dcomm", "3")
    assert code == 2
    assert err.startswith("error:")


def test_verify_jacobi(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "jacobi", "--seed", "7")
    assert code == 0
    assert "PASS 300/300" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    assert "jacobi" in out and "cocenter-truncated" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from frobw import verify

    def broken(A, rng, params):
        yield 3, "big case", False
        yield 1, "small case", False
        yield 0, "fine case", True

    monkeypatch.setitem(verify.SUITES, "broken", ("always fails", broken))
    code, out, _ = run(capsys, "verify", "--suite", "broken")
    assert code == 1
    assert "FAIL" in out
    assert "minimal counterexample" in out and "small case" in out


def test_determinism_machine(capsys):
    argv = ["verify", "--builtin", "zigzag", "--graph", "path2", "--suite", "diamond", "--suite", "jacobi",
            "--seed", "3", "--format", "machine"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "frobw", "bracket", "L(1,0,1)", "L(-1,0,1)"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1·C"
