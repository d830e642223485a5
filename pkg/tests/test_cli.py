import json
import io
import sys

import pytest

from spinetorsion.cli import main

from fixtures import GOLDEN, ONE_TET, TORSION2, TWO_VARIANT


def run_cli(argv, capsys):
    status = main(argv)
    out = capsys.readouterr().out
    return status, json.loads(out)


@pytest.fixture
def golden_file(tmp_path):
    p = tmp_path / "golden.txt"
    p.write_text(GOLDEN)
    return str(p)


@pytest.fixture
def two_variant_file(tmp_path):
    p = tmp_path / "twovar.txt"
    p.write_text(TWO_VARIANT)
    return str(p)


def test_validate_ok(golden_file, capsys):
    status, report = run_cli(["validate", golden_file], capsys)
    assert status == 0
    assert report["ok"]
    assert report["summary"]["tetrahedra"] == 2
    assert report["summary"]["boundary_components"] == [{"chi": 0, "genus": 1}]


def test_validate_syntax_error_exit_1(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text(ONE_TET.replace("glue 0.2 -> 0.3 : 012",
                                 "glue 0.2 -> 0.3 : 0zz"))
    status, report = run_cli(["validate", str(p)], capsys)
    assert status == 1
    assert report["error"] == "SpineSyntaxError"
    assert "line 4" in report["message"]


def test_branchings(two_variant_file, capsys):
    status, report = run_cli(["branchings", two_variant_file], capsys)
    assert status == 0
    assert report["count"] >= 1
    assert all(len(b) == 5 for b in report["branchings"])


def test_summary_and_determinism(golden_file, capsys):
    status1, report1 = run_cli(["summary", golden_file], capsys)
    status2, report2 = run_cli(["summary", golden_file], capsys)
    assert status1 == status2 == 0
    assert report1 == report2
    assert report1["rigid"] is False


def test_move_and_out_file(two_variant_file, tmp_path, capsys):
    out = tmp_path / "after.txt"
    status, report = run_cli(["move", two_variant_file, "--face", "0",
                              "--variant", "1", "--out", str(out)], capsys)
    assert status == 0
    assert report["move"]["after_tetrahedra"] == 3
    assert out.read_text() == report["move"]["after_spine"]


def test_move_requires_exactly_one_site(two_variant_file, capsys):
    status, report = run_cli(["move", two_variant_file], capsys)
    assert status == 1


def test_hcheck_golden_table(golden_file, capsys):
    status, report = run_cli(["hcheck", golden_file, "--face", "0",
                              "--variant", "0"], capsys)
    assert status == 0
    table = report["table"]
    assert len(table["rows"]) == 21
    assert table["is_null"]
    assert table["total"] == "0"
    assert table["rows"][0] == {"simplex": "v", "sign": 1, "end0": "d",
                                "end1": "c", "boundary": "d-c"}


def test_torsion_errors_exit_2(golden_file, capsys):
    status, report = run_cli(["torsion", golden_file, "--rep", "trivial"],
                             capsys)
    assert status == 2
    assert report["error"] == "NotAcyclicNoBasis"


def test_torsion_with_auto_basis(golden_file, capsys):
    status, report = run_cli(["torsion", golden_file, "--rep", "free-abelian",
                              "--homology-basis", "auto"], capsys)
    assert status == 0
    assert report["value"]
    status, refined = run_cli(["torsion", golden_file, "--rep", "cyclic:5",
                               "--homology-basis", "auto", "--sign-refined"],
                              capsys)
    assert status == 0
    assert refined["sign_refined"]


def test_zero_step_walk_keeps_torsion(two_variant_file, tmp_path, capsys):
    out = tmp_path / "same.txt"
    status, report = run_cli(["walk", two_variant_file, "--steps", "0",
                              "--seed", "5", "--out", str(out)], capsys)
    assert status == 0
    assert report["steps"] == 0
    _s1, before = run_cli(["torsion", two_variant_file, "--rep",
                           "free-abelian", "--homology-basis", "auto"], capsys)
    _s2, after = run_cli(["torsion", str(out), "--rep", "free-abelian",
                          "--homology-basis", "auto"], capsys)
    assert before["value"] == after["value"]


def test_walk_replayable(two_variant_file, capsys):
    status1, r1 = run_cli(["walk", two_variant_file, "--steps", "3",
                           "--seed", "11", "--max-tets", "6"], capsys)
    status2, r2 = run_cli(["walk", two_variant_file, "--steps", "3",
                           "--seed", "11", "--max-tets", "6"], capsys)
    assert status1 == status2 == 0
    assert r1 == r2
    assert r1["move_log"].count("\n") == 4  # header + 3 moves


def test_census_command(capsys):
    status, report = run_cli(["census", "--tets", "1"], capsys)
    assert status == 0
    assert report["count"] == 4
    assert len(report["spines"]) == 4


def test_invariance_command(two_variant_file, capsys):
    status, report = run_cli(["invariance", two_variant_file, "--steps", "2",
                              "--seed", "4", "--rep", "free-abelian",
                              "--max-tets", "6"], capsys)
    assert status == 0
    assert report["all_equal"]
    assert report["first_violation"] is None
    assert len(report["steps"]) == 2
    for step in report["steps"]:
        assert step["equal_up_to_sign"]


def test_euler_command(golden_file, capsys):
    status, report = run_cli(["euler", golden_file], capsys)
    assert status == 0
    assert report["path_choice_independent"]
    assert report["dual_consistent"]
    assert all(isinstance(x, int) for x in report["cochain"])
