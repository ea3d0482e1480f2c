import json

import nasharc.cli as cli
from nasharc import cluster_fixture, standard_fixture


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_graph_check_fixture_text(capsys):
    code, out, err = run_cli(capsys, "graph", "check", "fixtures/E8")
    assert code == 0 and err == ""
    assert "negative definite: yes" in out
    assert "det(M) = 1" in out
    assert "all entries strictly negative" in out


def test_graph_check_structured_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "graph", "check", "A2", "--format", "structured")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "report/1"
    assert report["negative_definite"] is True
    assert report["determinant"] == "3"
    assert report["matrices"]["M"]["rows"] == [["-2", "1"], ["1", "-2"]]
    # canonical serialization: dumping the parsed report reproduces the output
    assert json.dumps(report, indent=2, sort_keys=True) == out.strip()


def test_graph_check_document_and_diagnostics(tmp_path, capsys):
    good = tmp_path / "graph.json"
    good.write_text(json.dumps(standard_fixture("A3").to_doc()), encoding="utf-8")
    code, out, _ = run_cli(capsys, "graph", "check", str(good))
    assert code == 0 and "3 vertices" in out

    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps({"schema": "dualgraph/1", "vertices": [{"id": 0, "self_int": -2}], "edges": [[0, 0]]}),
        encoding="utf-8",
    )
    code, _, err = run_cli(capsys, "graph", "check", str(bad))
    assert code == 2
    assert "loop" in err


def test_graph_check_unknown_input(capsys):
    code, _, err = run_cli(capsys, "graph", "check", "no-such-thing")
    assert code == 2 and "fixtures" in err


def test_graph_check_dot_export(tmp_path, capsys):
    target = tmp_path / "graph.dot"
    code, out, _ = run_cli(capsys, "graph", "check", "A2", "--export-dot", str(target))
    assert code == 0
    assert target.read_text(encoding="utf-8").startswith("graph")


def test_cluster_build(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "cluster", "build", "satellite3")
    assert code == 0
    assert "canonical coefficients: (1, 2, 4)" in out
    assert "cross-checked" in out

    doc = tmp_path / "cluster.json"
    doc.write_text(json.dumps(cluster_fixture("chain3").to_doc()), encoding="utf-8")
    code, out, _ = run_cli(capsys, "cluster", "build", str(doc), "--format", "structured")
    assert code == 0
    report = json.loads(out)
    assert report["canonical_coefficients"] == [1, 2, 3]
    assert report["determinant"] in ("1", "-1")


def test_cluster_build_internal_invariant_exit_code(tmp_path, capsys, monkeypatch):
    from nasharc import ExactMatrix

    monkeypatch.setattr(
        cli, "intersection_from_proximity", lambda P: ExactMatrix.from_rows([[0]])
    )
    code, _, err = run_cli(capsys, "cluster", "build", "chain2")
    assert code == 3
    assert "invariant" in err


def test_val_compare(capsys):
    code, out, _ = run_cli(capsys, "val", "compare", "chain2", "0", "1")
    assert code == 0
    assert "LESS_EQ" in out
    code, out, _ = run_cli(capsys, "val", "compare", "twodir", "1", "2", "--format", "structured")
    assert json.loads(out)["comparison"] == "INCOMPARABLE"


def test_val_ord(capsys):
    code, out, _ = run_cli(capsys, "val", "ord", "chain2", "1", "--poly", "y - x^2")
    assert code == 0 and ": 2" in out
    code, _, err = run_cli(capsys, "val", "ord", "chain2", "1", "--poly", "y -")
    assert code == 2 and "parse error" in err


def test_adj_obstruct_matches_spec_example(capsys):
    code, out, _ = run_cli(capsys, "adj", "obstruct", "chain2", "0", "1")
    assert code == 0
    assert "N_1 in N_0: NOT_RULED_OUT" in out


def test_adj_obstruct_with_returns(capsys):
    code, out, _ = run_cli(
        capsys, "adj", "obstruct", "chain2", "0", "1", "--returns", "0,0", "--format", "structured"
    )
    assert code == 0
    report = json.loads(out)
    assert report["returns_special"] == 1
    assert report["returns_system"]["solution"] == ["1", "2"]
    assert report["returns_system"]["verdict"]["status"] == "NOT_RULED_OUT"
    assert report["returns_system"]["printed_solution"] == ["-1", "-2"]


def test_adj_table(capsys):
    code, out, _ = run_cli(capsys, "adj", "table", "satellite3")
    assert code == 0
    assert "N_1 in N_0: not ruled out" in out
    assert "N_0 in N_1: ruled out" in out


def test_euler_bound_example(capsys):
    code, out, _ = run_cli(capsys, "euler", "bound", "fixtures/A1", "--coeffs", "1", "--attach", "0")
    assert code == 0
    assert "final bound:           0" in out
    assert "cannot normalize to a disk" in out


def test_euler_bound_guard(capsys):
    code, _, err = run_cli(capsys, "euler", "bound", "A2", "--coeffs", "0,1", "--attach", "0")
    assert code == 2
    assert "lifts" in err


def test_dfd_check(tmp_path, capsys):
    doc = {
        "schema": "wedgemodel/1",
        "cluster": cluster_fixture("chain2").to_doc(),
        "special": 1,
        "c": [0, 0],
        "d": [0, 1],
    }
    path = tmp_path / "model.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run_cli(
        capsys, "dfd", "check", str(path), "--minimal-target", "--assert-b1-lt-1",
        "--format", "structured",
    )
    assert code == 0
    report = json.loads(out)
    assert report["b_solved"] == ["2", "4"]
    assert report["lifting"]["contradiction"] is True

    doc["b"] = ["2", "4"]
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run_cli(capsys, "dfd", "check", str(path))
    assert code == 0
    assert "supplied b verifies the identity: yes" in out

    doc["cluster"] = "chain2"
    doc["b"] = ["2", "5"]
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run_cli(capsys, "dfd", "check", str(path))
    assert code == 0
    assert "supplied b verifies the identity: no" in out


def test_dfd_check_schema_errors(tmp_path, capsys):
    path = tmp_path / "model.json"
    path.write_text(json.dumps({"schema": "wedgemodel/2"}), encoding="utf-8")
    code, _, err = run_cli(capsys, "dfd", "check", str(path))
    assert code == 2 and "schema" in err

    path.write_text(
        json.dumps({"schema": "wedgemodel/1", "cluster": "chain2", "c": [0, 0], "d": [0, 0]}),
        encoding="utf-8",
    )
    code, _, err = run_cli(capsys, "dfd", "check", str(path))
    assert code == 2 and "special" in err


def test_pair_canon_kb_flow(tmp_path, capsys):
    kb = tmp_path / "kb.jsonl"
    code, out, _ = run_cli(capsys, "pair", "canon", "chain2", "0", "1", "--kb", str(kb))
    assert code == 0 and "miss" in out

    code, out, _ = run_cli(
        capsys, "pair", "canon", "chain2", "0", "1",
        "--kb", str(kb), "--store", "NOT_RULED_OUT", "--provenance", "valuative",
    )
    assert code == 0 and "stored verdict NOT_RULED_OUT" in out

    code, out, _ = run_cli(capsys, "pair", "canon", "chain2", "0", "1", "--kb", str(kb))
    assert code == 0 and "hit, verdict NOT_RULED_OUT" in out

    code, _, err = run_cli(
        capsys, "pair", "canon", "chain2", "0", "1", "--kb", str(kb), "--store", "RULED_OUT"
    )
    assert code == 2 and "conflicts" in err


def test_pair_canon_structured(capsys):
    code, out, _ = run_cli(capsys, "pair", "canon", "chain1", "0", "0", "--format", "structured")
    assert code == 0
    report = json.loads(out)
    labels = report["pair_graph"]["vertices"][0]["labels"]
    assert labels == ["E", "F"]
    assert report["canonical_key"].startswith("{")
