import json
import subprocess
import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "liaison.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc


def test_colon_prints_paper_generators():
    proc = run_cli(str(FIXTURES / "double_lines.session"), "colon", "Y", "I1")
    assert proc.returncode == 0
    assert "x*z - y*u" in proc.stdout
    assert "x^2" in proc.stdout and "x*y" in proc.stdout and "y^2" in proc.stdout


def test_verify_triple_fossum():
    proc = run_cli(str(FIXTURES / "fossum.session"), "verify-triple", "B", "A1", "A2")
    assert proc.returncode == 0
    assert "passed: True" in proc.stdout
    assert "(4, 2, 2)" in proc.stdout


def test_doubling_false_exit_code():
    proc = run_cli(str(FIXTURES / "fossum.session"), "doubling", "B", "A1")
    assert proc.returncode == 1
    assert "False" in proc.stdout


def test_classify_violating_pair_exits_one():
    proc = run_cli(
        str(FIXTURES / "double_lines.session"), "classify", "V1", "V2", "--mode", "both"
    )
    assert proc.returncode == 1
    assert "lal: False" in proc.stdout


def test_classify_linked_pair_exits_zero():
    proc = run_cli(
        str(FIXTURES / "double_lines.session"), "classify", "L1", "L2", "--mode", "both"
    )
    assert proc.returncode == 0
    assert "same_support_pm" in proc.stdout


def test_unknown_name_exits_two():
    proc = run_cli(str(FIXTURES / "fossum.session"), "gb", "NOPE")
    assert proc.returncode == 2
    assert "unknown ideal" in proc.stderr


def test_parse_error_exits_two(tmp_path):
    bad = tmp_path / "bad.session"
    bad.write_text("ring Q[x] order lex\nideal I = x +\n")
    proc = run_cli(str(bad), "gb", "I")
    assert proc.returncode == 2
    assert "line 2" in proc.stderr


def test_missing_file_exits_two(tmp_path):
    proc = run_cli(str(tmp_path / "absent.session"), "gb", "I")
    assert proc.returncode == 2


def test_wrong_arity_exits_two():
    proc = run_cli(str(FIXTURES / "fossum.session"), "colon", "B")
    assert proc.returncode == 2


def test_json_schema_fields():
    proc = run_cli(str(FIXTURES / "fossum.session"), "gb", "B", "--json")
    doc = json.loads(proc.stdout)
    assert doc["schema"] == 1
    assert doc["command"] == "gb"
    assert doc["inputs"] == ["B"]
    assert doc["seed"] == 0
    assert doc["timings"] is None
    assert "result" in doc and "witnesses" in doc and "points_tested" in doc


def test_json_byte_stable_across_runs():
    commands = [
        ("fossum.session", ["verify-triple", "B", "A1", "A2", "--seed", "7"]),
        ("double_lines.session", ["classify", "M1", "M2", "--mode", "both", "--seed", "7"]),
        ("double_lines.session", ["colon", "Y", "I1"]),
    ]
    for fixture, args in commands:
        first = run_cli(str(FIXTURES / fixture), *args, "--json")
        second = run_cli(str(FIXTURES / fixture), *args, "--json")
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode


def test_json_round_trip_ideal_generators():
    from liaison import Ideal, ideal_equal, parse_polynomial, parse_session

    proc = run_cli(str(FIXTURES / "double_lines.session"), "colon", "Y", "I1", "--json")
    doc = json.loads(proc.stdout)
    session = parse_session((FIXTURES / "double_lines.session").read_text())
    R = session.ring
    reparsed = Ideal(R, [parse_polynomial(s, R) for s in doc["result"]["generators"]])
    assert ideal_equal(reparsed, session.ideals["I2"])


def test_gorenstein_command_and_exit_codes():
    proc = run_cli(str(FIXTURES / "double_lines.session"), "gorenstein", "Y", "P")
    assert proc.returncode == 0
    assert "gorenstein = True" in proc.stdout


def test_lci_and_mu_commands():
    proc = run_cli(str(FIXTURES / "double_lines.session"), "mu", "I1", "P", "--json")
    assert json.loads(proc.stdout)["result"]["mu"] == 2
    proc = run_cli(str(FIXTURES / "double_lines.session"), "lci", "I1", "S")
    assert proc.returncode == 0


def test_intersect_saturate_link_hilbert_localize():
    base = str(FIXTURES / "double_lines.session")
    assert run_cli(base, "intersect", "I1", "I2").returncode == 0
    assert run_cli(base, "saturate", "Y", "I1").returncode == 0
    assert run_cli(base, "link", "Y", "I1").returncode == 0
    proc = run_cli(base, "hilbert", "I1", "--json")
    assert json.loads(proc.stdout)["result"]["degree"] == 2
    assert run_cli(base, "localize", "I1", "P").returncode == 0


def test_gorenstein_inconclusive_exits_three(tmp_path):
    session = tmp_path / "allateral.session"
    session.write_text(
        "ring F3[x,y,z] order grevlex\n"
        "ideal I = x^3*y - x*y^3\n"
        "point P = (0:0:1)\n"
    )
    proc = run_cli(str(session), "gorenstein", "I", "P")
    assert proc.returncode == 3
    assert "inconclusive" in proc.stdout


def test_timings_flag_included_only_on_request():
    proc = run_cli(str(FIXTURES / "fossum.session"), "gb", "B", "--json", "--timings")
    doc = json.loads(proc.stdout)
    assert doc["timings"] is not None and "seconds" in doc["timings"]
