from __future__ import annotations

import io
import json

import pytest

from splitquad.cli import main

POINT = {"a": "1+j", "b": "i+2j+k", "c": "-1/4+5/2i+3/4j+5/2k"}
PLANE = {"a": "1+j", "b": "i+k", "c": "-1+i-j+k"}
LINE_AND_POINT = {"a": "1+j", "b": "i+j", "c": "-1+i"}


def run(capsys, tmp_path, doc, *args):
    path = tmp_path / "eq.json"
    path.write_text(json.dumps(doc))
    code = main([args[0], str(path), *args[1:]])
    return code, capsys.readouterr()


def test_solve_point_json(capsys, tmp_path):
    code, out = run(capsys, tmp_path, POINT, "solve", "--json")
    assert code == 0
    sol = json.loads(out.out)["solutions"]
    assert sol["points"] == [{"x0": "-1/2", "x1": "1", "x2": "0", "x3": "1"}] and sol["families"] == []


def test_solve_plane_family(capsys, tmp_path):
    code, out = run(capsys, tmp_path, PLANE, "solve", "--json")
    assert code == 0
    (fam,) = json.loads(out.out)["solutions"]["families"]
    assert fam["params"] == ["x0", "x1"]


def test_solve_empty_exit_code(capsys, tmp_path):
    code, _ = run(capsys, tmp_path, {"a": "1+j", "b": "i+k", "c": "-1+i-j+2k"}, "solve")
    assert code == 2


def test_quartic_family_samples(capsys, tmp_path):
    code, out = run(capsys, tmp_path, {"a": "1+j", "b": "-i+k", "c": "-1+i-j-k"}, "solve", "--json", "--params", "1,1")
    assert code == 0
    (sample,) = json.loads(out.out)["semi_explicit"]
    assert "-2+2i+j+k" in sample["text"]


def test_pure_quadratic_with_y(capsys, tmp_path):
    code, out = run(capsys, tmp_path, {"a": "1+j", "b": "0", "c": "-1-j"}, "solve", "--y", "1")
    assert code == 0 and "square roots for y = 1" in out.out


def test_bad_input_exit_code(capsys, tmp_path):
    code, out = run(capsys, tmp_path, {"a": "1/0", "b": "i", "c": "1"}, "solve")
    assert code == 1 and out.err.startswith("error:")
    code, _ = run(capsys, tmp_path, {"a": "1+j", "b": "i"}, "solve")
    assert code == 1


def test_unnormalized_document(capsys, tmp_path):
    doc = {"unnormalized": {"d": "1+j", "e": "1+i+3j+k", "f": "3i+2j+3k"}}
    code, out = run(capsys, tmp_path, doc, "solve", "--json")
    assert code == 0
    assert json.loads(out.out)["solutions"]["points"] == [{"x0": "-1", "x1": "1", "x2": "0", "x3": "1"}]
    doc.update({"a": "1+j", "b": "i", "c": "0"})
    code, _ = run(capsys, tmp_path, doc, "solve")
    assert code == 1


def test_companion_inapplicable(capsys, tmp_path):
    code, out = run(capsys, tmp_path, PLANE, "companion")
    assert code == 3 and "companion polynomial identically zero" in out.out


def test_companion_divisors(capsys, tmp_path):
    code, out = run(capsys, tmp_path, LINE_AND_POINT, "companion", "--json")
    assert code == 0
    assert len(json.loads(out.out)["divisors"]) == 2
    code, out = run(capsys, tmp_path, {"a": "1+j", "b": "2i+k", "c": "1+i+2j+k"}, "companion", "--json")
    assert code == 0 and len(json.loads(out.out)["divisors"]) == 1


def test_verify(capsys, tmp_path):
    code, out = run(capsys, tmp_path, LINE_AND_POINT, "verify", "--grid=-1:1:1/2")
    assert code == 0 and "grid completeness: ok" in out.out


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(POINT)))
    assert main(["solve", "-"]) == 0
    assert "-1/2+i+k" in capsys.readouterr().out


def test_corpus_commands(capsys):
    assert main(["corpus", "--only", "quartic"]) == 0
    assert "passed" in capsys.readouterr().out
    assert main(["corpus", "--only", "pure-quadratic", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True
    assert main(["corpus", "--list"]) == 0
    assert "si-affine-plane" in capsys.readouterr().out
    assert main(["corpus", "--only", "no-such-entry"]) == 1


def test_unknown_command_is_rejected():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
