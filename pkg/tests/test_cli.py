import json

import pytest

from platkit.cli import main

from conftest import CORPUS_25


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_info_example(capsys):
    code, out = run(capsys, "info", "2 4 1 3 1")
    assert code == 0
    assert "strands 6" in out
    assert "bridge index 3" in out
    assert "components 1" in out
    assert "writhe 5" in out


def test_info_json(capsys):
    code, data = run_json(capsys, "info", "2 4 1 3 1")
    assert code == 0
    assert data["strands"] == 6 and data["bridge_index"] == 3
    assert data["components"] == 1 and data["writhe"] == 5


def test_invariants_json(capsys):
    code, data = run_json(capsys, "invariants", "2 2 2")
    assert code == 0
    assert data["components"] == 1
    assert data["jones"]["terms"] == {"-4": 1, "-12": 1, "-16": -1}
    assert data["alexander_normalized"]["terms"] == {"0": 1, "1": -1, "2": 1}


def test_move_and_inverse(capsys):
    code, data = run_json(capsys, "move", "", "--strands", "2",
                          "--side", "bottom", "--gen", "sigma1")
    assert code == 0 and data["word"] == [1]
    code, data = run_json(capsys, "move", "1", "--strands", "2",
                          "--side", "bottom", "--gen", "sigma1", "--inverse")
    assert code == 0 and data["word"] == []


def test_stabilize_destabilize(capsys):
    code, data = run_json(capsys, "stabilize", "", "--strands", "2")
    assert code == 0 and data == {"strands": 4, "word": [2],
                                  "convention": "standard-cups"}
    code, data = run_json(capsys, "destabilize", "2", "--strands", "4")
    assert code == 0 and data["found"] and data["plat"]["strands"] == 2
    code, data = run_json(capsys, "destabilize",
                          " ".join(str(x) for x in CORPUS_25))
    assert code == 0 and not data["found"]


def test_flip(capsys):
    code, data = run_json(capsys, "flip", "1", "--strands", "4")
    assert code == 0 and data["word"] == [3]


def test_pocket(capsys):
    code, data = run_json(capsys, "pocket", "", "--strands", "4",
                          "--side", "bottom", "--bridge", "1",
                          "--path", "right:over")
    assert code == 0
    assert data["plat"]["word"] == [2, 1, 3, 2]
    assert data["trace"] == [{"gen": "cross_1", "inverse": False,
                              "side": "bottom"}]


def test_equiv_exit_codes(capsys):
    code, data = run_json(capsys, "equiv", "", "1", "--strands", "2")
    assert code == 0 and data["result"] == "found" and data["moves"] == 1
    code, data = run_json(capsys, "equiv", "", "2 2 2", "--strands", "4")
    assert code == 2 and data["result"] == "distinct"
    code, data = run_json(capsys, "equiv", "2 1 3 2", "", "--strands", "4",
                          "--budget-nodes", "2")
    assert code in (0, 3)


def test_parse_error_exit_code(capsys):
    code, data = run_json(capsys, "info", "x y z")
    assert code == 1
    assert data["error"]["code"] == "parse"


def test_precondition_error(capsys):
    code, data = run_json(capsys, "info", "1 2", "--strands", "3")
    assert code == 1 and "error" in data


def test_render_stdout(capsys):
    code, out = run(capsys, "render", "1", "--strands", "2")
    assert code == 0 and out.startswith("<svg")


def test_render_to_file(tmp_path, capsys):
    target = tmp_path / "out.svg"
    code, data = run_json(capsys, "render", "2 4 1 3 1", "-o", str(target))
    assert code == 0
    assert target.read_text().count('id="crossing-') == 5


def test_graph(capsys):
    code, data = run_json(capsys, "graph", "", "--strands", "2",
                          "--max-level", "2",
                          "--budget-nodes", "20000", "--budget-seconds", "10")
    assert code == 0
    assert len(data["vertices"]) >= 2


def test_corpus_list(capsys):
    code, data = run_json(capsys, "corpus", "list")
    assert code == 0
    assert any(e["name"] == "torus-k3" for e in data["entries"])


def test_corpus_verify_reports(capsys):
    code, data = run_json(capsys, "corpus", "verify")
    names = {c["name"]: c["ok"] for c in data["checks"]}
    assert names["example-6plat-info"]
    assert names["fourbridge-no-syntactic-destabilization"]
    # the shipped pair mismatch keeps the overall verdict honest
    assert code == (0 if data["ok"] else 1)
