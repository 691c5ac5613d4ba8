"""Command-line behaviour: exit codes, output channels, JSON mode."""

import json

import pytest

from kocalc.cli import run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


# --- classify ---------------------------------------------------------------


def test_classify_reports_algebra(capsys):
    code, out, _ = run(capsys, "classify", "--p", "1", "--q", "3")
    assert code == 0
    assert "M₂(H)" in out
    assert "σ=6" in out
    assert "Θ²=-1" in out


def test_classify_json(capsys):
    code, doc, _ = run_json(capsys, "classify", "--p", "0", "--q", "2")
    assert code == 0
    assert doc["algebra"] == "H"
    assert doc["sigma"] == 6
    assert "SU(2)" in doc["unitary_group"]


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "classify", "--p", "1")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys)[0] == 2


# --- epsilon-table ------------------------------------------------------------


def test_epsilon_table_marks_provenance(capsys):
    code, out, _ = run(capsys, "epsilon-table")
    assert code == 0
    assert "+1*" in out and "-1*" in out  # verified cells
    assert "stored" in out


def test_epsilon_table_json(capsys):
    code, doc, _ = run_json(capsys, "epsilon-table")
    assert code == 0
    assert doc["consistent"] is True
    col0 = doc["columns"]["0"]
    assert col0["eps"] == {"value": 1, "provenance": "verified"}
    col1 = doc["columns"]["1"]
    assert col1["eps"]["provenance"] == "stored"
    assert doc["columns"]["7"]["eps_dprime"]["value"] is None


# --- make-triple / validate -----------------------------------------------------


def test_make_and_validate_round_trip(tmp_path, capsys):
    out = tmp_path / "t.json"
    code, _, _ = run(capsys, "make-triple", "--p", "2", "--q", "0",
                     "--dirac", "gamma1", "--out", str(out))
    assert code == 0
    assert out.exists()

    code, text, _ = run(capsys, "validate", str(out))
    assert code == 0
    assert "PASS" in text
    assert "KO dimension: 2" in text


def test_make_triple_rejects_odd_dimension(tmp_path, capsys):
    out = tmp_path / "t.json"
    code, _, err = run(capsys, "make-triple", "--p", "2", "--q", "1",
                       "--out", str(out))
    assert code == 2
    assert "even" in err
    assert not out.exists()


def test_make_triple_rejects_gamma1_without_positive_generator(tmp_path, capsys):
    code, _, err = run(capsys, "make-triple", "--p", "0", "--q", "2",
                       "--dirac", "gamma1", "--out", str(tmp_path / "t.json"))
    assert code == 2
    assert "hermitian" in err


def test_validate_corrupted_file_exits_1(tmp_path, capsys):
    out = tmp_path / "t.json"
    run(capsys, "make-triple", "--p", "2", "--q", "0", "--dirac", "gamma1",
        "--out", str(out))
    doc = json.loads(out.read_text())
    doc["dirac"]["entries"][1]["re"] = "5"  # break hermiticity
    out.write_text(json.dumps(doc))
    code, text, _ = run(capsys, "validate", str(out))
    assert code == 1
    assert "FAIL" in text and "dirac_hermitian" in text


def test_validate_unparseable_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "validate", str(bad))[0] == 2
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 2


def test_validate_json_mode(tmp_path, capsys):
    out = tmp_path / "t.json"
    run(capsys, "make-triple", "--p", "1", "--q", "1", "--dirac", "gamma1",
        "--out", str(out))
    code, doc, _ = run_json(capsys, "validate", str(out))
    assert code == 0
    assert doc["passed"] is True
    assert doc["ko_dimension"] == 0
    assert {"name": "dirac_hermitian", "passed": True, "witness": None} in doc["checks"]


# --- product ------------------------------------------------------------------------


@pytest.fixture
def triple_files(tmp_path, capsys):
    def make(p, q, dirac):
        path = tmp_path / f"t{p}{q}{dirac}.json"
        code = run_cli(["make-triple", "--p", str(p), "--q", str(q),
                        "--dirac", dirac, "--out", str(path)])
        capsys.readouterr()
        assert code == 0
        return str(path)
    return make


def test_product_compatible_writes_output(triple_files, tmp_path, capsys):
    a = triple_files(4, 0, "gamma1")
    b = triple_files(2, 0, "gamma1")
    out = tmp_path / "prod.json"
    code, text, _ = run(capsys, "product", "--mode", "natural", a, b,
                        "--out", str(out))
    assert code == 0
    assert "confirmed-compatible" in text
    assert out.exists()
    code, text, _ = run(capsys, "validate", str(out))
    assert code == 0
    assert "KO dimension: 6" in text


def test_product_incompatible_exits_1(triple_files, tmp_path, capsys):
    a = triple_files(2, 0, "gamma1")
    out = tmp_path / "prod.json"
    code, text, _ = run(capsys, "product", "--mode", "natural", a, a,
                        "--out", str(out))
    assert code == 1
    assert "confirmed-incompatible" in text
    assert not out.exists()


def test_product_json(triple_files, capsys):
    a = triple_files(3, 1, "gamma1")
    b = triple_files(0, 2, "zero")
    code, doc, _ = run_json(capsys, "product", "--mode", "modified", a, b)
    assert code == 0
    assert doc["status"] == "confirmed-compatible"
    assert doc["matrix_ko"] == 0
    assert doc["matrix_signs"] == {"eps": 1, "eps_prime": 1, "eps_dprime": 1}


# --- enumerate ------------------------------------------------------------------------


def test_enumerate_prints_divergence_annotation(capsys):
    code, out, _ = run(capsys, "enumerate", "--sigma1", "6", "--mode", "natural")
    assert code == 0
    assert "σ₂ = 3: compatible" in out
    assert "σ₂ = 7: compatible" in out
    assert "divergence" in out
    assert "{1, 5}" in out and "{3, 7}" in out


def test_enumerate_json(capsys):
    code, doc, _ = run_json(capsys, "enumerate", "--sigma1", "4", "--mode", "natural")
    assert code == 0
    assert doc["compatible_sigma2"] == [0, 1, 2, 4, 5, 6]
    assert doc["annotations"] == []


def test_enumerate_rejects_bad_sigma(capsys):
    assert run(capsys, "enumerate", "--sigma1", "9", "--mode", "natural")[0] == 2


# --- scenario ----------------------------------------------------------------------------


def test_scenario_connes(capsys):
    code, out, _ = run(capsys, "scenario", "--name", "connes")
    assert code == 0
    assert "σ₁ = 4" in out and "{2}" in out
    assert "as expected" in out


def test_scenario_barrett_json(capsys):
    code, doc, _ = run_json(capsys, "scenario", "--name", "barrett")
    assert code == 0
    assert doc["matches_expected"] is True
    assert {"sigma1": 2, "solutions": [6]} in doc["cases"]
    assert {"sigma1": 6, "solutions": [2]} in doc["cases"]


# --- twist / restrict ----------------------------------------------------------------------


def test_twist_round_trip(triple_files, tmp_path, capsys):
    a = triple_files(2, 0, "gamma1")
    out = tmp_path / "twisted.json"
    code, text, _ = run(capsys, "twist", a, "--out", str(out))
    assert code == 0
    assert "(+1, +1, -1) -> (-1, -1, -1)" in text
    code, out2, _ = run(capsys, "validate", str(out))
    assert code == 0
    assert "no table row" in out2


def test_restrict_reports_dimensions(triple_files, capsys):
    a = triple_files(1, 1, "gamma1")
    code, out, _ = run(capsys, "restrict", a)
    assert code == 0
    assert ": 2" in out and ": 1" in out


def test_restrict_undefined_exits_1(triple_files, capsys):
    a = triple_files(2, 0, "gamma1")
    code, _, err = run(capsys, "restrict", a)
    assert code == 1
    assert err


def test_restrict_json(triple_files, capsys):
    a = triple_files(1, 1, "gamma1")
    code, doc, _ = run_json(capsys, "restrict", a)
    assert code == 0
    assert doc == {"file": a, "real_fixed_dim": 2, "majorana_weyl_dim": 1,
                   "complex_dim": 2}


# --- scan -------------------------------------------------------------------------------------


def test_scan_summarizes_grids(capsys):
    code, out, _ = run(capsys, "scan")
    assert code == 0
    assert "128 cells" in out
    assert "24 compatible" in out
    assert "agree" in out


def test_scan_json(capsys):
    code, doc, _ = run_json(capsys, "scan")
    assert code == 0
    assert doc["calculus_cells"] == 128
    assert doc["compatible_cells"] == 24
    assert doc["all_consistent"] is True
    assert len(doc["matrix_cells"]) == 32
