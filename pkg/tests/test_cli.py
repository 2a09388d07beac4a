import json

import pytest

from coxcell.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "examples/a1tilde.json")
    assert code == 0 and json.loads(out)["type"] == "affine"
    code, out, _ = run(capsys, "classify", "a2")
    assert code == 0 and json.loads(out)["type"] == "spherical"


def test_graph_file_on_disk(capsys, tmp_path):
    p = tmp_path / "h.json"
    p.write_text(json.dumps({"generators": ["a", "b"], "m": [[1, 7], [7, 1]]}))
    code, out, _ = run(capsys, "classify", str(p))
    assert code == 0 and json.loads(out)["type"] == "spherical"
    p.write_text(json.dumps({"generators": ["a", "b"], "m": [[1, 1], [1, 1]]}))
    code, _, err = run(capsys, "classify", str(p))
    assert code == 2 and "LabelError" in err


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "b2")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 8 and doc["complete"]
    code, _, _ = run(capsys, "roots", "a1tilde")
    assert code == 2
    code, out, _ = run(capsys, "roots", "a1tilde", "--depth", "10")
    assert code == 0 and json.loads(out)["count"] == 44


def test_ap_enum(capsys):
    code, out, _ = run(capsys, "ap-enum", "a2", "--k", "2")
    assert code == 0 and len(json.loads(out)) == 6
    code, _, _ = run(capsys, "ap-enum", "a2")
    assert code == 2


def test_build_and_determinism(capsys):
    code, first, _ = run(capsys, "build", "beer", "a2")
    code2, second, _ = run(capsys, "build", "beer", "a2")
    assert code == code2 == 0 and first == second
    code, out, _ = run(capsys, "build", "theta-omega", "a3", "--max-dim", "2")
    assert code == 0 and json.loads(out)["f_vector"][:3] == [24, 288, 864]


def test_verify_cover_iso_and_threads(capsys):
    code, one, _ = run(capsys, "verify-cover-iso", "examples/b2.json", "--threads", "1")
    code4, four, _ = run(capsys, "verify-cover-iso", "examples/b2.json", "--threads", "4")
    doc = json.loads(one)
    assert code == code4 == 0 and one == four
    assert doc["pass"] and doc["checked"] == 136


def test_pi1(capsys):
    code, out, _ = run(capsys, "pi1", "beer", "a2")
    doc = json.loads(out)
    assert code == 0 and len(doc["generators"]) == 6 and len(doc["relations"]) == 6


def test_omega_n_and_crosscheck(capsys):
    code, out, _ = run(capsys, "omega-n", "4")
    assert code == 0 and json.loads(out)["f_vector"] == [1, 12, 36, 24]
    code, out, _ = run(capsys, "crosscheck-an", "3")
    assert code == 0 and json.loads(out)["pass"]
    code, _, _ = run(capsys, "omega-n", "9")
    assert code == 2


def test_link_check(capsys):
    code, out, _ = run(capsys, "link-check", "a2", "--space", "beer")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "NotLocallyCAT0" and doc["skeleton"] == 2
    code, out, _ = run(capsys, "link-check", "--space", "omega-n", "3")
    assert code == 0 and json.loads(out)["systole_over_pi"] == "4/3"
    code, out, _ = run(capsys, "link-check", "a1xa1")
    assert code == 0 and json.loads(out)["verdict"] == "LocallyCAT0"
    code, _, err = run(capsys, "link-check", "a1tilde", "--depth", "4", "--wlen", "4")
    assert code == 1 and "HypothesisNotMet" in err
    code, _, _ = run(capsys, "link-check", "--space", "omega-n")
    assert code == 2


def test_report_file(capsys, tmp_path):
    rep = tmp_path / "r.json"
    code, out, _ = run(capsys, "classify", "a2", "--report", str(rep))
    doc = json.loads(rep.read_text())
    assert code == 0 and doc["command"] == "classify"
    assert set(doc) == {"command", "inputs", "output_digest", "checks", "wall_clock"}
    import hashlib

    assert doc["output_digest"] == hashlib.sha256(out.strip().encode()).hexdigest()


def test_pretty(capsys):
    code, out, _ = run(capsys, "classify", "a2", "--pretty")
    assert code == 0 and "\n  " in out


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "classify", "no_such_graph.json")[0] == 2
    assert run(capsys, "acceptance", "--only", "11")[0] == 2


def test_acceptance_subset(capsys):
    code, out, err = run(capsys, "acceptance", "--only", "1", "2")
    doc = json.loads(out)
    assert code == 0 and [r["criterion"] for r in doc["results"]] == [1, 2]
    assert "PASS criterion 1" in err and "PASS criterion 2" in err
