from __future__ import annotations

import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import run_cli
from fanodescent.cli import RunReport, parse_split_vector_file

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "verify_full.json": (["verify", "--max-i", "12", "--max-n", "12", "--json"], 0),
    "verify_minimal.json": (["verify", "--max-i", "1", "--json"], 0),
    "verify_flip_b1.json": (
        ["verify", "--max-i", "2", "--max-n", "4", "--flip-b1", "--json"],
        1,
    ),
    "chain_p4.json": (["chain", "projective_space", "4", "--json"], 0),
    "chain_q5.json": (["chain", "quadric", "5", "--json"], 0),
    "chain_g25.json": (["chain", "grassmannian", "2", "5", "--json"], 0),
    "check_q6_thm5_maxm.json": (
        ["check", "quadric", "6", "--theorem", "thm5", "--json"],
        0,
    ),
    "check_p7_thm4_m7.json": (
        ["check", "projective_space", "7", "--theorem", "thm4", "--m", "7", "--json"],
        0,
    ),
    "check_q7_strong_m4.json": (
        ["check", "quadric", "7", "--theorem", "thm5-strong", "--m", "4", "--json"],
        1,
    ),
    "verify_minimal.txt": (["verify", "--max-i", "1"], 0),
    "chain_q5.txt": (["chain", "quadric", "5"], 0),
    "check_p7_thm4_m7.txt": (["check", "projective_space", "7", "--theorem", "thm4", "--m", "7"], 0),
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_outputs(name):
    argv, expected_code = GOLDEN_CASES[name]
    code, out, _ = run_cli(argv)
    assert code == expected_code
    assert out == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_reports_are_deterministic_across_runs(name):
    argv, _ = GOLDEN_CASES[name]
    first = run_cli(argv)
    second = run_cli(argv)
    assert first == second


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_no_floating_point_in_output(name):
    argv, _ = GOLDEN_CASES[name]
    _, out, _ = run_cli(argv)
    assert not re.search(r"\d+\.\d+", out)


def test_json_reports_round_trip():
    for name in GOLDEN_CASES:
        if not name.endswith(".json"):
            continue
        text = (GOLDEN / name).read_text()
        report = RunReport.from_json(text)
        assert RunReport.from_json(report.to_json()) == report
        assert json.loads(report.to_json()) == json.loads(text)


# --- exit-code contract -------------------------------------------------------


def test_exit_zero_on_pass():
    code, _, _ = run_cli(["check", "quadric", "4", "--theorem", "thm5", "--m", "2"])
    assert code == 0


def test_exit_one_on_hypothesis_failure():
    code, out, _ = run_cli(["check", "quadric", "6", "--theorem", "thm4", "--m", "3"])
    assert code == 1
    assert "FAIL" in out


def test_exit_one_on_flipped_bernoulli_hook():
    code, out, _ = run_cli(["verify", "--max-i", "1", "--flip-b1"])
    assert code == 1
    assert "(i,j,k)=(1,1,1)" in out
    assert "expected 1/2, got -1/2 (diff -1)" in out


def test_exit_two_on_unknown_manifold():
    code, _, err = run_cli(["chain", "enriques_surface", "3"])
    assert code == 2
    assert "unknown manifold" in err


def test_exit_two_on_bad_parameters():
    assert run_cli(["chain", "projective_space"])[0] == 2
    assert run_cli(["chain", "projective_space", "x"])[0] == 2
    assert run_cli(["chain", "quadric", "3", "7"])[0] == 2
    assert run_cli(["check", "--theorem", "thm4"])[0] == 2


def test_exit_two_on_invalid_flags():
    assert run_cli(["verify", "--max-i", "0"])[0] == 2
    assert run_cli(["check", "quadric", "4", "--theorem", "thm9"])[0] == 2
    assert run_cli(["chain", "quadric", "5", "--degrees", "1,0"])[0] == 2
    assert run_cli(["frobnicate"])[0] == 2


def test_exit_two_when_m_exceeds_dimension():
    code, _, err = run_cli(["check", "quadric", "3", "--theorem", "thm4", "--m", "4"])
    assert code == 2
    assert "exceeds the manifold dimension" in err


def test_exit_two_for_grassmannian_gate():
    code, _, err = run_cli(["check", "grassmannian", "2", "5", "--theorem", "thm4"])
    assert code == 2
    assert "no split vector" in err


def test_version_flag():
    code, out, _ = run_cli(["--version"])
    assert code == 0


# --- vector files ---------------------------------------------------------------


def test_parse_split_vector_file(tmp_path):
    path = tmp_path / "vector.txt"
    path.write_text("# a projective 4-space\n4\n5 5/2 5/6 5/24\n")
    v = parse_split_vector_file(path)
    assert v.dim == 4
    assert str(v.ch(2)) == "5/2"


@pytest.mark.parametrize(
    "content,message",
    [
        ("", "no data"),
        ("x\n1", "first token"),
        ("0\n", "dimension must be >= 1"),
        ("3\n1 2", "expected 3 scalars"),
        ("2\n1 1/0", "bad rational"),
        ("2\n1 nope", "bad rational"),
    ],
)
def test_bad_vector_files_exit_two(tmp_path, content, message):
    path = tmp_path / "vector.txt"
    path.write_text(content)
    code, _, err = run_cli(["chain", "--input", str(path)])
    assert code == 2
    assert message in err


def test_chain_from_input_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("4\n5 5/2 5/6 5/24\n")
    code, out, _ = run_cli(["chain", "--input", str(path)])
    assert code == 0
    assert "N (first non-Fano member): 4" in out
    # no catalogue expectation line for file input
    assert "expected chain" not in out


def test_check_from_input_file(tmp_path):
    path = tmp_path / "q6.txt"
    path.write_text("6\n6 2 0 -1/3 -1/5 -7/90\n")
    code, out, _ = run_cli(["check", "--input", str(path), "--theorem", "thm5"])
    assert code == 0
    assert "max m: 3" in out


def test_input_and_name_are_mutually_exclusive(tmp_path):
    path = tmp_path / "v.txt"
    path.write_text("1\n2\n")
    code, _, err = run_cli(["chain", "quadric", "4", "--input", str(path)])
    assert code == 2
    assert "not both" in err


def test_missing_input_file_exits_two(tmp_path):
    code, _, _ = run_cli(["chain", "--input", str(tmp_path / "absent.txt")])
    assert code == 2


# --- degrees flag ----------------------------------------------------------------


def test_chain_with_custom_degrees():
    code, out, _ = run_cli(["chain", "quadric", "5", "--degrees", "1,1,1"])
    assert code == 0
    assert "terminal: negative_dimension" in out
    assert "N (first non-Fano member): undetermined" in out
    assert "expected chain" not in out


def test_chain_degrees_rejected_for_grassmannian():
    code, _, err = run_cli(["chain", "grassmannian", "2", "5", "--degrees", "1"])
    assert code == 2
    assert "--degrees" in err


# --- subprocess smoke -------------------------------------------------------------


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "fanodescent", "chain", "quadric", "6"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "N (first non-Fano member): 3" in proc.stdout
