import io
import json
import sys

import pytest

from forcebrush.cli import main


@pytest.fixture
def stdin(monkeypatch):
    def feed(text):
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(text.encode())))
    return feed


def test_zf_edgelist_stdin(stdin, capsys):
    stdin("0 1\n1 2")
    assert main(["zf", "--format", "edgelist", "-"]) == 0
    assert capsys.readouterr().out == "1 {0}\n"


def test_zf_many_graph6_lines(tmp_path, capsys):
    p = tmp_path / "g.g6"
    p.write_text("Bg\nBw\n")
    assert main(["zf", str(p)]) == 0
    assert capsys.readouterr().out.splitlines() == ["1 {0}", "2 {0, 1}"]


def test_brush(stdin, capsys):
    stdin("Cr\n")
    assert main(["brush", "-"]) == 0
    assert capsys.readouterr().out.startswith("2 ")
    stdin("B?\n")
    assert main(["brush", "-"]) == 0
    assert "degenerate" in capsys.readouterr().out


def test_linegraph(stdin, capsys):
    stdin("0 1\n0 2\n0 3\n")
    assert main(["linegraph", "--format", "edgelist", "-"]) == 0
    out = capsys.readouterr().out
    assert "# vertex 0 = edge 0 1" in out and "0 2" in out
    stdin("Bg\n")
    assert main(["linegraph", "-"]) == 0
    assert capsys.readouterr().out == "A_\n"


def test_transfer_then_verify(tmp_path, stdin, capsys):
    stdin("Dhc\n")
    out = tmp_path / "w.json"
    dot = tmp_path / "o.dot"
    assert main(["transfer", "-", "--out", str(out), "--dot", str(dot)]) == 0
    assert "->" in dot.read_text()
    assert main(["verify", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "ok"

    doc = json.loads(out.read_text())
    doc["paths"][0].pop()
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["verify", str(bad)]) == 1
    assert "FAIL uncovered_edge" in capsys.readouterr().out


def test_transfer_strips_isolated(stdin, capsys):
    stdin("n 4\n0 1\n1 2\n")
    assert main(["transfer", "--format", "edgelist", "-"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["isolated_stripped"] == 1
    assert "isolated" in captured.err


def test_usage_errors(stdin, capsys, tmp_path):
    stdin("0 0\n")
    assert main(["zf", "--format", "edgelist", "-"]) == 2
    err = capsys.readouterr().err
    assert len(err.splitlines()) == 1 and "self-loop" in err
    stdin("A_\nBg\n")
    assert main(["transfer", "-"]) == 2
    stdin("0 1\n2 3\n")
    assert main(["transfer", "--format", "edgelist", "-"]) == 2
    assert "disconnected" in capsys.readouterr().err
    assert main(["zf", str(tmp_path / "missing.g6")]) == 2
    assert main(["corpus", "nonsense"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["zf"])
    assert info.value.code == 2


def test_corpus_family_and_outputs(tmp_path, capsys):
    assert main(["corpus", "complete_bipartite:2,3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["violations"] == 0
    csv_out = tmp_path / "r.csv"
    assert main(["corpus", "@connected_n2-5", "--out", str(csv_out)]) == 0
    assert len(csv_out.read_text().splitlines()) == 31


def test_corpus_jobs_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["corpus", "@connected_n2-5", "--jobs", "1", "--out", str(a)]) == 0
    assert main(["corpus", "@connected_n2-5", "--jobs", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
