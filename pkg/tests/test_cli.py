import json
import subprocess
import sys

import pytest

from failset.cli import main
from failset.graph import parse_edge_list


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path, worked_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p
    return {
        "worked": worked_path,
        "path3": write("path3.txt", "a b\nb c\n"),
        "star5": write("star5.txt", "c l1\nc l2\nc l3\nc l4\n"),
        "c6": write("c6.txt", "".join(f"v{i} v{(i + 1) % 6}\n" for i in range(6))),
        "single": write("single.txt", "x\n"),
        "good": write("good.txt", "# candidate\na\na2\naba\n"),
        "bad": write("bad.txt", "a2\n"),
        "unknown": write("unknown.txt", "zz\n"),
        "all": write("all.txt", "a\na2\nab\nac\na3\na2b\naba\naba2\n"),
        "write": write,
    }


def test_solve_worked_text_and_json(capsys, files):
    code, out, _ = run(capsys, "solve", files["worked"], "--k", 1, "--ell", 1, "--root", "a")
    assert code == 0
    assert out.splitlines() == ["lambda: 3", "failure_set: a a2 aba", "root: a"]
    code, out, _ = run(capsys, "solve", files["worked"], "--k", 1, "--ell", 1, "--format", "json")
    assert json.loads(out) == {"lambda": 3, "failure_set": ["a", "a2", "aba"], "root": "a", "k": 1, "ell": 1}


def test_solve_small_files(capsys, files):
    assert run(capsys, "solve", files["path3"], "--k", 1, "--ell", 1)[1].startswith("lambda: 1\n")
    assert run(capsys, "solve", files["star5"], "--k", 2, "--ell", 0)[1].startswith("lambda: 1\n")


def test_solve_forest_and_dot(capsys, files, tmp_path):
    forest = files["write"]("forest.txt", "a b\nb c\nx\n")
    dot = tmp_path / "out.dot"
    code, out, _ = run(capsys, "solve", forest, "--k", 1, "--ell", 1, "--dot", dot, "--format", "json")
    assert code == 0 and json.loads(out)["root"] is None and json.loads(out)["lambda"] == 2
    text = dot.read_text()
    assert text.startswith("graph failset {") and '"b" [fillcolor=black' in text
    run(capsys, "solve", files["worked"], "--k", 3, "--ell", 0, "--dot", dot)
    assert 'status="surviving"' in dot.read_text()


def test_solve_errors(capsys, files):
    broken = files["write"]("broken.txt", "a b c\n")
    code, _, err = run(capsys, "solve", broken, "--k", 1, "--ell", 1)
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "solve", files["c6"], "--k", 1, "--ell", 1)
    assert code == 3 and "cycle" in err
    assert run(capsys, "solve", files["worked"], "--k", 9, "--ell", 1)[0] == 2
    assert run(capsys, "solve", files["worked"], "--k", 1, "--ell", 1, "--root", "nope")[0] == 2
    assert run(capsys, "solve", "/no/such/file", "--k", 1, "--ell", 1)[0] == 2


def test_verify(capsys, files):
    assert run(capsys, "verify", files["worked"], files["good"], "--k", 1, "--ell", 1)[:2] == (0, "VALID\n")
    code, out, _ = run(capsys, "verify", files["worked"], files["bad"], "--k", 1, "--ell", 1)
    assert code == 1 and out == "INVALID: component {ab, aba, aba2} order 3\n"
    assert run(capsys, "verify", files["worked"], files["all"], "--k", 1, "--ell", 1)[0] == 0
    assert run(capsys, "verify", files["worked"], files["unknown"], "--k", 1, "--ell", 1)[0] == 2
    code, out, _ = run(capsys, "verify", files["worked"], files["bad"], "--k", 1, "--ell", 1, "--format", "json")
    assert json.loads(out) == {"valid": False, "component": ["ab", "aba", "aba2"], "order": 3}


def test_solve_then_verify_round_trip(capsys, files, tmp_path):
    for k, ell in [(1, 1), (2, 0), (3, 2), (1, 0)]:
        out = run(capsys, "solve", files["worked"], "--k", k, "--ell", ell, "--format", "json")[1]
        cand = tmp_path / "cand.txt"
        cand.write_text("\n".join(json.loads(out)["failure_set"]) + "\n")
        assert run(capsys, "verify", files["worked"], cand, "--k", k, "--ell", ell)[0] == 0


def test_oracle(capsys, files):
    assert run(capsys, "oracle", files["worked"], "--k", 1, "--ell", 1)[1].startswith("minimum: 3\n")
    assert run(capsys, "oracle", files["c6"], "--k", 1, "--ell", 1)[1].startswith("minimum: 2\n")
    assert run(capsys, "oracle", files["single"], "--k", 1, "--ell", 5)[1].startswith("minimum: 1\n")


def test_oracle_cap_and_force(capsys, files):
    code, _, err = run(capsys, "oracle", files["worked"], "--k", 1, "--ell", 1, "--cap", 5)
    assert code == 4 and "cap of 5" in err
    code, out, err = run(capsys, "oracle", files["worked"], "--k", 1, "--ell", 1, "--cap", 5, "--force")
    assert code == 0 and "minimum: 3" in out and "exceeds" in err


def test_map(capsys, files):
    code, out, _ = run(capsys, "map", files["worked"], "--k", 1, "--ell", 1)
    assert code == 0
    assert "aba2 -> aba" in out and "F <= image: True" in out
    code, out, _ = run(capsys, "map", files["worked"], "--k", 1, "--ell", 1, "--candidates", files["bad"])
    assert code == 0 and "lemma checks skipped" in out
    code, out, _ = run(capsys, "map", files["worked"], "--k", 1, "--ell", 1, "--candidates", files["good"],
                       "--format", "json")
    payload = json.loads(out)
    assert payload["ok"] and payload["image"] == ["a", "a2", "aba"]


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--family", "path", "--n", 3)
    assert code == 0 and parse_edge_list(out).edges() == [(0, 1), (1, 2)]
    out = run(capsys, "gen", "--n", 12, "--seed", 9)[1]
    assert out == run(capsys, "gen", "--n", 12, "--seed", 9)[1]
    assert parse_edge_list(out).m == 11
    out = run(capsys, "gen", "--family", "complete-enumeration", "--n", 4)[1]
    assert out.count("# tree") == 16


def test_props(capsys):
    code, out, _ = run(capsys, "props", "--count", 15)
    assert code == 0 and out.rstrip().endswith("PASS")
    assert int(out.split("instances: ")[1].split()[0]) == 15
    code, out, _ = run(capsys, "props", "--family", "path", "--n", "1..15")
    assert code == 0 and "instances: 15" in out
    code, out, _ = run(capsys, "props", "--n-max", 5, "--exhaustive", "--format", "json")
    assert code == 0 and json.loads(out)["instances"] == 1 + 1 + 3 + 16 + 125


def test_stdin_and_entry_point(worked_path):
    proc = subprocess.run(
        [sys.executable, "-m", "failset.cli", "solve", "-", "--k", "1", "--ell", "1"],
        input=worked_path.read_text(), capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "failure_set: a a2 aba" in proc.stdout
