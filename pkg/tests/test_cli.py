import json

import pytest

from antimagic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_solve_verify_pipe(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "cycle", "5")
    assert code == 0
    graph_file = tmp_path / "c5.txt"
    graph_file.write_text(out)

    code, out, _ = run(capsys, "solve", str(graph_file), "--variant", "oriented")
    assert code == 0
    doc = json.loads(out)
    assert doc["verify"]["ok"]
    assert doc["variant"] == "quasi-oriented-antimagic"
    sol_file = tmp_path / "sol.json"
    sol_file.write_text(out)

    code, out, _ = run(capsys, "verify", str(graph_file), str(sol_file))
    assert code == 0
    assert json.loads(out)["ok"]


def test_verify_duplicate_label_exits_1(tmp_path, capsys):
    graph_file = tmp_path / "p3.txt"
    graph_file.write_text("1 2\n2 3\n")
    bad = tmp_path / "bad.json"
    bad.write_text('{"labels": {"1-2": "1", "2-3": "1"}}')
    code, out, _ = run(capsys, "verify", str(graph_file), str(bad))
    assert code == 1
    report = json.loads(out)
    assert any(v["kind"] == "duplicate-label" for v in report["violations"])


def test_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 3\n")
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 2
    assert "line 1" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "solve", "/nonexistent/input.txt")
    assert code == 2


def test_certify_json(capsys):
    code, out, _ = run(capsys, "certify", "--n-range", "4..6", "--mode", "undirected")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [4, 5, 6]
    assert all(r["nonzero"] for r in rows)
    assert rows[0]["abc"] == [4, 3, 2]
    assert isinstance(rows[0]["coefficient"], str)


def test_certify_csv_with_jobs(capsys):
    code, out, _ = run(capsys, "certify", "--n-range", "4..8", "--format", "csv", "--jobs", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("mode,n,a,b,c")
    assert len(lines) == 1 + 2 * 5  # both modes


def test_oracle_count(tmp_path, capsys):
    graph_file = tmp_path / "c4.txt"
    graph_file.write_text("1 2\n2 3\n3 4\n1 4\n")
    code, out, _ = run(capsys, "oracle", str(graph_file), "--variant", "antimagic", "--mode", "count")
    assert code == 0
    assert json.loads(out)["count"] == 8


def test_oracle_nonexistence_exits_1(tmp_path, capsys):
    graph_file = tmp_path / "k2.txt"
    graph_file.write_text("1 2\n")
    code, out, _ = run(capsys, "oracle", str(graph_file), "--variant", "antimagic")
    assert code == 1
    assert json.loads(out)["exists"] is False


def test_sweep_csv(tmp_path, capsys):
    graph_file = tmp_path / "p3.txt"
    graph_file.write_text("1 2\n2 3\n")
    code, out, _ = run(capsys, "sweep", str(graph_file), "--trials", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "variant,k,successes,samples,is_min"


def test_solve_output_is_deterministic(tmp_path, capsys):
    graph_file = tmp_path / "g.txt"
    code, out, _ = run(capsys, "gen", "random", "7", "--seed", "3")
    assert code == 0
    graph_file.write_text(out)
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "solve", str(graph_file), "--variant", "weighted-list", "--trace")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_gen_families(capsys):
    code, out, _ = run(capsys, "gen", "wheel", "6")
    assert code == 0
    assert len(out.strip().splitlines()) == 10
    code, out, _ = run(capsys, "gen", "star", "5")
    assert code == 0
    assert all(line.startswith("1 ") for line in out.strip().splitlines())


def test_solve_with_weights_and_lists(tmp_path, capsys):
    graph_file = tmp_path / "p3.txt"
    graph_file.write_text("1 2\n2 3\n")
    weights = tmp_path / "w.json"
    weights.write_text('{"weights": {"1": "3/2", "3": "-1"}}')
    lists = tmp_path / "l.json"
    lists.write_text(
        json.dumps(
            {"lists": {"1-2": [str(i) for i in range(1, 7)], "2-3": [str(i) for i in range(1, 7)]}}
        )
    )
    code, out, _ = run(
        capsys, "solve", str(graph_file), "--weights", str(weights), "--lists", str(lists)
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verify"]["ok"]

    sol = tmp_path / "sol.json"
    sol.write_text(out)
    code, out, _ = run(
        capsys, "verify", str(graph_file), str(sol), "--weights", str(weights), "--lists", str(lists)
    )
    assert code == 0


def test_infeasible_k_override_exits_1(tmp_path, capsys):
    graph_file = tmp_path / "p3.txt"
    graph_file.write_text("1 2\n2 3\n")
    weights = tmp_path / "w.json"
    weights.write_text('{"weights": {"1": "1"}}')
    code, _, err = run(capsys, "solve", str(graph_file), "--k", "0", "--weights", str(weights))
    assert code == 1
    assert "error:" in err
