import dataclasses
import json

import pytest

from cptgroups import fixtures as fx
from cptgroups.exact_arith import Cyclotomic
from cptgroups.verifier import VERDICTS, DiscrepancyReport, Finding, verify_paper

EXPECTED_DEFECTS = {
    "g_A-map-T-row",
    "table5-phi8-glyphs",
    "table5-phi10-minus-CT",
    "dim-square-sum-sentence",
    "only-one-z2-sentence",
}


@pytest.fixture(scope="module")
def report():
    return verify_paper()


def test_clean_run_has_no_mismatches(report):
    assert report.mismatches == ()
    assert report.passed


def test_exactly_the_listed_defects_are_confirmed(report):
    assert len(report.defects) == 5
    assert set(report.defect_ids) == EXPECTED_DEFECTS == set(fx.DEFECT_IDS)


def test_every_defect_carries_a_derivation():
    for d in fx.DEFECTS:
        assert d.derivation and d.corrected and d.printed
        assert any(word in d.derivation for word in ("group law", "consistency", "identification",
                                                    "equals the group order", "subgroup search"))


def test_every_table_is_covered(report):
    for k in range(1, 7):
        assert any(f.location.startswith(f"Table {k}") for f in report.findings), k


def test_report_order_is_stable(report):
    again = verify_paper()
    assert [f.location for f in again.findings] == [f.location for f in report.findings]
    assert again.to_json_text() == report.to_json_text()


def test_json_output(report):
    data = json.loads(report.to_json_text())
    assert data["counts"] == {"match": len(report.findings) - 5, "paper-defect-confirmed": 5, "mismatch": 0}
    assert all(set(f) == {"location", "expected", "computed", "verdict", "note", "defect_id"} for f in data["findings"])
    assert {f["defect_id"] for f in data["findings"] if f["defect_id"]} == EXPECTED_DEFECTS


def test_text_output(report):
    text = report.to_text()
    last = text.rstrip("\n").splitlines()[-1]
    assert last == f"{len(report.findings)} findings: {len(report.findings) - 5} match, 5 paper-defect-confirmed, 0 mismatch"
    assert text.count("[paper-defect-confirmed]") == 5
    assert "[mismatch]" not in text


def test_finding_rejects_unknown_verdict():
    with pytest.raises(ValueError):
        Finding("x", "a", "b", "maybe")
    assert VERDICTS == ("match", "paper-defect-confirmed", "mismatch")


def test_passed_requires_the_full_defect_list():
    partial = DiscrepancyReport((Finding("x", "a", "b", "paper-defect-confirmed", defect_id="g_A-map-T-row"),))
    assert not partial.passed


# --- tampering ----------------------------------------------------------------------------

def _replace_row(fixture, row_name, column, value):
    j = fixture.columns.index(column)
    rows = []
    for name, row in fixture.rows:
        if name == row_name:
            row = row[:j] + (value,) + row[j + 1:]
        rows.append((name, row))
    return dataclasses.replace(fixture, rows=tuple(rows))


def test_altered_table_entry_is_a_mismatch(monkeypatch):
    col = fx.TABLE1.columns[1]
    monkeypatch.setattr(fx, "TABLE1", _replace_row(fx.TABLE1, "χ2", col, -fx.TABLE1.row("χ2")[1]))
    rep = verify_paper()
    assert rep.mismatches
    assert any(f.location.startswith("Table 1") for f in rep.mismatches)
    assert not rep.passed


def test_altered_class_table_entry_is_a_mismatch(monkeypatch):
    col = fx.TABLE3.columns[-1]
    old = fx.TABLE3.row("λ9")[-1]
    monkeypatch.setattr(fx, "TABLE3", _replace_row(fx.TABLE3, "λ9", col, old + Cyclotomic.rational(1)))
    rep = verify_paper()
    assert any(f.location.startswith("Table 3") for f in rep.mismatches)


def test_unlisted_defect_is_a_mismatch(monkeypatch):
    kept = tuple(d for d in fx.DEFECTS if d.defect_id != "table5-phi10-minus-CT")
    monkeypatch.setattr(fx, "DEFECTS", kept)
    monkeypatch.setattr(fx, "DEFECT_IDS", tuple(d.defect_id for d in kept))
    rep = verify_paper()
    assert any(f.location == "Table 5, row φ10" for f in rep.mismatches)
    assert "table5-phi10-minus-CT" not in rep.defect_ids


@pytest.mark.parametrize("defect_id", sorted(EXPECTED_DEFECTS))
def test_removing_any_defect_entry_is_a_mismatch(monkeypatch, defect_id):
    kept = tuple(d for d in fx.DEFECTS if d.defect_id != defect_id)
    monkeypatch.setattr(fx, "DEFECTS", kept)
    monkeypatch.setattr(fx, "DEFECT_IDS", tuple(d.defect_id for d in kept))
    rep = verify_paper()
    assert rep.mismatches
    assert defect_id not in rep.defect_ids


@pytest.mark.parametrize("defect_id, wrong", [
    ("table5-phi10-minus-CT", "[[0,-1],[-1,0]]"),
    ("table5-phi8-glyphs", "-1"),
    ("g_A-map-T-row", "T -> (a,e,a)"),
    ("dim-square-sum-sentence", "10"),
    ("only-one-z2-sentence", "1 subgroups of order 2"),
])
def test_wrong_correction_is_not_confirmed(monkeypatch, defect_id, wrong):
    tampered = tuple(dataclasses.replace(d, corrected=wrong) if d.defect_id == defect_id else d for d in fx.DEFECTS)
    monkeypatch.setattr(fx, "DEFECTS", tampered)
    rep = verify_paper()
    assert defect_id not in rep.defect_ids
    assert any(f.defect_id == defect_id and f.verdict == "mismatch" for f in rep.findings)


def test_fixed_printed_content_is_no_longer_a_defect(monkeypatch):
    # if the printed table already held the corrected matrix, the defect would not be reported
    fixed = _replace_row(fx.TABLE5, "φ10", "-CT", fx.matrix("0 1; 1 0"))
    monkeypatch.setattr(fx, "TABLE5", fixed)
    rep = verify_paper()
    assert "table5-phi10-minus-CT" not in rep.defect_ids
    assert rep.mismatches
