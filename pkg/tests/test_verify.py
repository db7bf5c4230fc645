from __future__ import annotations

import json

import pytest

from fpdata import verify
from fpdata.fixedpoints import conj_action_data
from fpdata.groups import OCT, Dihedral
from fpdata.lattice import constraints
from fpdata.naming import parse_group
from fpdata.reps import pair_class_basis
from fpdata.rotations import build_model


def _by_subject(reports):
    return {r.subject: r for r in reports}


def test_dihedral_six():
    reports = _by_subject(verify.verify_dihedral(6))
    assert all(r.passed for r in reports.values())
    # m/k = 3 for k = 2 (odd) and m/k = 2 for k = 3 (even)
    assert sorted(map(sorted, reports["D6 constraints"].expected)) == [
        ["D2:std"], ["D3d:1/3", "D3u:1/3"], ["D6:1/6"],
    ]
    assert reports["D6 dims"].computed == [3, 1]


def test_dihedral_two_and_nine():
    two = _by_subject(verify.verify_dihedral(2))
    assert two["D2 constraints"].expected == [["D2:std"]]
    assert two["D2 dims"].computed == [1, 0]
    nine = _by_subject(verify.verify_dihedral(9))
    assert nine["D9 dims"].computed == [4, 0]
    assert nine["D9 dims"].passed


def test_dihedral_rejects_small_m():
    with pytest.raises(ValueError):
        verify.verify_dihedral(1)


def test_dihedral_without_oracle():
    assert [r.subject for r in verify.verify_dihedral(4, oracle=False)] == [
        "D4 basis", "D4 constraints", "D4 dims",
    ]


@pytest.mark.parametrize("which,dims", [("A4", [1, 1]), ("S4", [3, 3]), ("A5", [4, 3])])
def test_platonic(which, dims):
    reports = verify.verify_platonic(which)
    assert reports and all(r.passed for r in reports)
    assert {tuple(r.computed) for r in reports if r.subject.endswith("dims")} == {tuple(dims)}


def test_icos_checked_in_both_chiralities():
    subjects = [r.subject for r in verify.verify_platonic("A5")]
    assert "A5+ generator table" in subjects and "A5- generator table" in subjects


def test_oct_table_lower_triangular():
    M = build_model(OCT)
    t = verify.PLATONIC["S4"]["table"]
    table = verify.generator_table(M, t["coordinates"], t["actions"])
    assert [table[i][i] for i in range(3)] == [1, 1, 1]
    assert table[0][1:] == [0, 0] and table[1][2] == 0


def test_table_mismatch_detected():
    assert not verify._table_matches([[1, 0], [None, 1]], [[1, 1], [5, 1]])
    assert verify._table_matches([[1, 0], [None, 1]], [[1, 0], [5, 1]])
    assert not verify._table_matches([[1]], [[None]])


def test_span_comparison_not_row_equality():
    M = build_model(Dihedral(4))
    B = pair_class_basis(M)
    rows = constraints(M).rows
    # a different but equivalent presentation
    assert verify._same_span(B, [["D4:1/4", "D2u:std", "D2d:std"], ["D2u:std", "D2d:std"]], rows)
    assert not verify._same_span(B, [["D4:1/4"]], rows)
    assert not verify._same_span(B, [["D9:1/9"]], rows)


@pytest.mark.parametrize("label", ["S4", "A5+", "A5-", "D30"])
def test_global(label):
    reports = verify.verify_global(parse_group(label))
    assert len(reports) == 4 and all(r.passed for r in reports)


def test_oct_conj_total_is_four():
    assert conj_action_data(build_model(OCT)).total() == 4


def test_suite_and_rendering():
    reports = verify.run_suite(max_m=8)
    assert all(r.passed for r in reports)
    text = verify.render_text(reports)
    assert text.splitlines()[-1] == f"{len(reports)}/{len(reports)} checks passed"
    obj = json.loads(verify.render_json(reports))
    assert obj["passed"] and obj["failures"] == 0 and obj["count"] == len(reports)


def test_failed_report_rendering():
    r = verify.VerificationReport("X dims", [1, 0], [0, 1], False)
    text = verify.render_text([r])
    assert "FAIL  X dims" in text and "expected: [1, 0]" in text
    assert json.loads(verify.render_json([r]))["passed"] is False
