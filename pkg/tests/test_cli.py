import json
import os
import re
import subprocess
import sys

import pytest

from cptgroups import cpt_models as cm
from cptgroups import fixtures as fx
from cptgroups.cli import main
from cptgroups.exact_arith import Cyclotomic
from cptgroups.group_core import FiniteGroup
from cptgroups.repr_theory import CharacterTable, tables_match


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_process(*argv, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "cptgroups.cli", *argv], capture_output=True, env=full_env)


# --- exit codes ------------------------------------------------------------------------

def test_unknown_group_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["classes", "S5"])
    assert e.value.code == 1
    assert "unknown group id" in capsys.readouterr().err


def test_missing_verb_and_bad_flag_are_usage_errors(capsys):
    for argv in ([], ["classes"], ["classes", "Q", "--format", "yaml"], ["chartable", "Q", "--method", "guess"]):
        with pytest.raises(SystemExit) as e:
            main(argv)
        assert e.value.code == 1
    capsys.readouterr()


@pytest.mark.parametrize("verb", ["build", "iso", "embed", "verify-paper"])
def test_formats_not_offered_by_a_verb_are_rejected(capsys, verb):
    args = {"build": ["Q"], "iso": ["Q", "D4"], "embed": ["Q", "D4"], "verify-paper": []}[verb]
    code, out, err = run(capsys, verb, *args, "--format", "csv")
    assert code == 1 and out == "" and "not available" in err


def test_verify_paper_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert out.rstrip().endswith("5 paper-defect-confirmed, 0 mismatch")
    kept = tuple(d for d in fx.DEFECTS if d.defect_id != "table5-phi8-glyphs")
    monkeypatch.setattr(fx, "DEFECTS", kept)
    monkeypatch.setattr(fx, "DEFECT_IDS", tuple(d.defect_id for d in kept))
    code, out, _ = run(capsys, "verify-paper", "--format", "json")
    assert code == 2
    assert json.loads(out)["counts"]["mismatch"] >= 1


# --- verbs ------------------------------------------------------------------------------

def test_classes_of_dirac_equation_group(capsys):
    code, out, _ = run(capsys, "classes", "G_psi_eq")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "G_psi_eq: 10 conjugacy classes"
    assert any(re.fullmatch(r"\[T\]\s+= \{T\}", ln) for ln in lines)
    assert any(re.fullmatch(r"\[-T\]\s+= \{-T\}", ln) for ln in lines)


def test_classes_json(capsys):
    code, out, _ = run(capsys, "classes", "G_psi_eq", "-f", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 10
    assert sum(c["size"] for c in data) == 16
    assert {"label": "[T]", "size": 1, "representative": "T", "members": ["T"]} in data


def test_iso_reports_table_coincidence(capsys):
    code, out, _ = run(capsys, "iso", "G_psi_hat", "D4xZ2")
    assert code == 0 and out == "not isomorphic; character tables match\n"
    code, out, _ = run(capsys, "iso", "Z2^3", "G_A", "-f", "json")
    data = json.loads(out)
    assert data["isomorphic"] and data["character_tables_match"] and len(data["map"]) == 8


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", "Z2^3", "G_psi_eq")
    assert code == 0 and out == "Z2^3 does not embed in G_psi_eq\n"
    code, out, _ = run(capsys, "embed", "Q", "G_psi_hat", "-f", "json")
    data = json.loads(out)
    assert data["embeds"] and len(set(data["map"].values())) == 8


def test_build_summary(capsys):
    code, out, _ = run(capsys, "build", "G_QED")
    assert code == 0
    assert "order 128" in out.splitlines() and "classes 80" in out.splitlines()


def test_chartable_methods_agree(capsys):
    _, constructive, _ = run(capsys, "chartable", "G_psi_eq", "-f", "json")
    _, dixon, _ = run(capsys, "chartable", "G_psi_eq", "-f", "json", "--method", "dixon")
    a, b = json.loads(constructive), json.loads(dixon)
    assert [c["label"] for c in a["classes"]] == [c["label"] for c in b["classes"]]
    rows_a = {tuple(json.dumps(v) for v in r["values"]) for r in a["rows"]}
    rows_b = {tuple(json.dumps(v) for v in r["values"]) for r in b["rows"]}
    assert rows_a == rows_b
    assert {r["provenance"] for r in b["rows"]} == {"dixon"}


def test_chartable_json_values_round_trip(capsys):
    _, out, _ = run(capsys, "chartable", "G_psi_eq", "-f", "json")
    data = json.loads(out)
    col = next(j for j, c in enumerate(data["classes"]) if c["label"] == "[T]")
    values = [Cyclotomic.from_json(r["values"][col]) for r in data["rows"]]
    assert values[8] == fx.value("2i") and values[9] == fx.value("-2i")
    assert all(v.is_rational() for v in values[:8])


def test_irreps_csv_has_one_column_per_element(capsys):
    code, out, _ = run(capsys, "irreps", "G_psi_eq", "-f", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 11
    assert lines[0].count(",") == 16


# --- output files and determinism --------------------------------------------------------------

def test_output_file(tmp_path, capsys):
    target = tmp_path / "classes.txt"
    code, out, _ = run(capsys, "classes", "Q", "-o", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8").startswith("Q: 5 conjugacy classes")


def test_unwritable_output_is_a_usage_error(tmp_path, capsys):
    code, out, err = run(capsys, "classes", "Q", "-o", str(tmp_path / "missing" / "x.txt"))
    assert code == 1 and out == "" and "cannot write" in err
    code, _, _ = run(capsys, "classes", "Q", "-o", str(tmp_path))
    assert code == 1


@pytest.mark.parametrize("argv", [
    ("chartable", "G_psi_eq", "-f", "latex"),
    ("irreps", "G_psi_hat", "-f", "json"),
    ("classes", "G_QED", "-f", "csv"),
    ("verify-paper", "-f", "json"),
])
def test_output_is_byte_identical_across_processes(argv):
    first = run_process(*argv)
    second = run_process(*argv)
    assert first.returncode == 0
    assert first.stdout == second.stdout and first.stdout


def test_order_cap_environment_variable():
    res = run_process("build", "G_QED", env={"CPTGROUPS_ORDER_CAP": "64"})
    assert res.returncode == 1
    assert b"exceeds cap 64" in res.stderr
    res = run_process("build", "G_psi_hat", env={"CPTGROUPS_ORDER_CAP": "64"})
    assert res.returncode == 0
    res = run_process("build", "Q", env={"CPTGROUPS_ORDER_CAP": "many"})
    assert res.returncode == 1


# --- export / import ---------------------------------------------------------------------------

def test_export_json_round_trip(tmp_path, capsys):
    path = tmp_path / "g.json"
    assert run(capsys, "export", "G_psi_eq", "-f", "json", "-o", str(path))[0] == 0
    data = json.loads(path.read_text(encoding="utf-8"))
    g = FiniteGroup.from_json(data)
    original = cm.named_group("G_psi_eq")
    assert g.labels == original.labels and (g.cayley == original.cayley).all()
    code, out, _ = run(capsys, "build", "--from-json", str(path), "-f", "json")
    assert code == 0 and json.loads(out) == data


def test_tampered_import_is_rejected(tmp_path, capsys):
    data = cm.named_group("G_psi_eq").to_json()
    data["cayley"][3][4], data["cayley"][3][5] = data["cayley"][3][5], data["cayley"][3][4]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    code, out, err = run(capsys, "build", "--from-json", str(path))
    assert code == 1 and out == "" and "rejected" in err
    path.write_text("{not json", encoding="utf-8")
    assert run(capsys, "build", "--from-json", str(path))[0] == 1
    assert run(capsys, "build", "--from-json", str(tmp_path / "nope.json"))[0] == 1
    assert run(capsys, "build", "Q", "--from-json", str(path))[0] == 1


def test_export_text_is_the_cayley_table(capsys):
    code, out, _ = run(capsys, "export", "Z2", "-f", "csv")
    assert code == 0 and out == "·,e,a\ne,e,a\na,a,e\n"


# --- LaTeX output parses back to the published table ----------------------------------------------

_LATEX_TOKENS = [(r"\hat{\Theta}", "Theta"), (r"\Theta{}", "Theta"), (r"\hat{", ""), ("}", ""), ("*", "")]


def _token_from_latex(cell):
    body = re.fullmatch(r"\$(?:\d+)?\[(.*)\]\$", cell).group(1)
    for a, b in _LATEX_TOKENS:
        body = body.replace(a, b)
    return body


def test_latex_chartable_matches_published_table(capsys):
    code, out, _ = run(capsys, "chartable", "G_psi_hat", "-f", "latex")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.endswith(r"\\")]
    header, body = lines[0], lines[1:]
    cells = [c.strip() for c in header[:-2].split("&")][1:]
    cg = cm.named_cpt("G_psi_hat")
    g = cg.group
    classes = [g.classes[g.class_of[cg.element(_token_from_latex(c))]] for c in cells]
    rows = []
    for ln in body:
        vals = [c.strip().strip("$") for c in ln[:-2].split("&")][1:]
        rows.append([fx.value(v) for v in vals])
    parsed = CharacterTable(g, classes, rows, ["constructive"] * len(rows))
    assert parsed.problems() == []
    assert tables_match(parsed, cm.fixture_table(fx.TABLE3)) is not None
