import subprocess
import sys
from pathlib import Path

import pytest

from topecycle.cli import main
from topecycle.formats import parse_certificate, parse_graph

DATA = Path(__file__).parent / "data"


def run(*argv):
    return main([str(a) for a in argv])


def test_pipeline_r0(tmp_path, capsys):
    arr, graph, cyc = tmp_path / "r0.arr", tmp_path / "r0.graph", tmp_path / "r0.cycle"
    assert run("gen", "--family", "R0", "--m", 6, "--out", arr) == 0
    assert run("graph", "--in", arr, "--out", graph) == 0
    assert len(parse_graph(graph).topes) == 20
    assert run("cycle", "--in", arr, "--method", "supersolvable", "--out", cyc) == 0
    assert len(parse_certificate(cyc)) == 20
    capsys.readouterr()
    assert run("verify", "--graph", graph, "--cycle", cyc) == 0
    assert capsys.readouterr().out.startswith("ok")


def test_graph_oracle_matches(tmp_path):
    arr = tmp_path / "b.arr"
    run("gen", "--family", "B", "--n", 3, "--out", arr)
    run("graph", "--in", arr, "--out", tmp_path / "x.graph")
    run("graph", "--in", arr, "--algo", "oracle", "--out", tmp_path / "y.graph")
    assert (tmp_path / "x.graph").read_bytes() == (tmp_path / "y.graph").read_bytes()


def test_a2_graph_header(tmp_path, capsys):
    arr = tmp_path / "a.arr"
    run("gen", "--family", "A", "--n", 3, "--out", arr)
    capsys.readouterr()
    assert run("graph", "--in", arr) == 0
    assert capsys.readouterr().out.splitlines()[0] == "topes 6 edges 6 m 3"


def test_dns_on_wrong_input_is_usage_error(tmp_path, capsys):
    arr = tmp_path / "r0.arr"
    run("gen", "--family", "R0", "--m", 6, "--out", arr)
    assert run("cycle", "--in", arr, "--method", "dns") == 2
    assert "UsageError" in capsys.readouterr().err


def test_dns_method(tmp_path, capsys):
    arr, graph, cyc = tmp_path / "d.arr", tmp_path / "d.graph", tmp_path / "d.cycle"
    run("gen", "--family", "Dns", "--n", 4, "--s", 2, "--out", arr)
    run("graph", "--in", arr, "--out", graph)
    assert run("cycle", "--in", arr, "--method", "dns", "--out", cyc) == 0
    assert run("verify", "--graph", graph, "--cycle", cyc) == 0


def test_cycle_from_graph_file(tmp_path):
    arr, graph, cyc = tmp_path / "a.arr", tmp_path / "a.graph", tmp_path / "a.cycle"
    run("gen", "--family", "R1", "--m", 4, "--out", arr)
    run("graph", "--in", arr, "--out", graph)
    assert run("cycle", "--in", graph, "--out", cyc) == 0
    assert run("verify", "--graph", graph, "--cycle", cyc) == 0
    assert run("cycle", "--in", graph, "--method", "supersolvable") == 2


def test_corrupted_certificate(tmp_path, capsys):
    arr, graph, cyc = tmp_path / "a.arr", tmp_path / "a.graph", tmp_path / "a.cycle"
    run("gen", "--family", "B", "--n", 2, "--out", arr)
    run("graph", "--in", arr, "--out", graph)
    run("cycle", "--in", arr, "--out", cyc)
    head, flips = cyc.read_text().splitlines()
    short = flips.split()[:-2]
    cyc.write_text(head.replace("len 8", "len 6") + "\n" + " ".join(short) + "\n")
    capsys.readouterr()
    assert run("verify", "--graph", graph, "--cycle", cyc) == 1
    assert "NotSpanning" in capsys.readouterr().err


def test_byte_identical_outputs(tmp_path):
    outs = []
    for k in range(2):
        arr, graph, cyc = tmp_path / f"{k}.arr", tmp_path / f"{k}.graph", tmp_path / f"{k}.cycle"
        run("gen", "--family", "R2", "--m", 2, "--out", arr)
        run("graph", "--in", arr, "--out", graph)
        run("cycle", "--in", arr, "--out", cyc)
        outs.append([p.read_bytes() for p in (arr, graph, cyc)])
    assert outs[0] == outs[1]


def test_lattice_command(tmp_path, capsys):
    arr = tmp_path / "a.arr"
    run("gen", "--family", "D", "--n", 4, "--out", arr)
    capsys.readouterr()
    assert run("lattice", "--in", arr) == 0
    out = capsys.readouterr().out
    assert "rank 1: 12 flats" in out and "supersolvable: no" in out
    run("gen", "--family", "R0", "--m", 6, "--out", arr)
    capsys.readouterr()
    run("lattice", "--in", arr)
    assert "level 0: A0 0 1 2 3 4 | A1 5" in capsys.readouterr().out


def test_sweep(tmp_path, capsys):
    src = tmp_path / "in"
    src.mkdir()
    for name, args in (("b3", ("--family", "B", "--n", 3)), ("d4", ("--family", "D", "--n", 4)),
                       ("r1", ("--family", "R1", "--m", 5))):
        run("gen", *args, "--out", src / f"{name}.arr")
    (src / "h3.arr").write_bytes((DATA / "h3.arr").read_bytes())
    manifests = []
    for k in range(2):
        out = tmp_path / f"out{k}"
        assert run("sweep", "--dir", src, "--out-dir", out) == 0
        lines = (out / "manifest.tsv").read_text().splitlines()
        manifests.append([line.rsplit("\t", 1)[0] for line in lines])
        for line in lines[1:]:
            fields = line.split("\t")
            assert fields[6] == "true"
            rc = run("verify", "--graph", out / (Path(fields[0]).stem + ".graph"), "--cycle", out / fields[5])
            assert rc == 0
    assert manifests[0] == manifests[1]
    rows = {r.split("\t")[0]: r.split("\t") for r in manifests[0][1:]}
    assert rows["d4.arr"][4] == "dns" and rows["h3.arr"][4] == "search"
    assert rows["b3.arr"][3] == "72"


def test_sweep_reports_failures(tmp_path, capsys):
    src = tmp_path / "in"
    src.mkdir()
    (src / "bad.arr").write_text("dim 2\nnormal 1\n")
    assert run("sweep", "--dir", src, "--out-dir", tmp_path / "out") == 1
    assert "ParseError" in capsys.readouterr().err


def test_errors(tmp_path, capsys, monkeypatch):
    assert run("graph", "--in", tmp_path / "missing.arr") == 1
    assert "OSError" in capsys.readouterr().err
    assert run("gen", "--family", "R1", "--m", 7) == 1
    assert "UnsupportedField" in capsys.readouterr().err
    assert run("gen", "--family", "D", "--n", 2) == 2
    monkeypatch.setenv("TOPECYCLE_SEED", "x")
    arr = tmp_path / "a.arr"
    run("gen", "--family", "A", "--n", 3, "--out", arr)
    assert run("graph", "--in", arr) == 2
    with pytest.raises(SystemExit):
        run("cycle")


def test_seed_does_not_change_output(tmp_path, monkeypatch, capsys):
    arr = tmp_path / "a.arr"
    run("gen", "--family", "R1", "--m", 6, "--out", arr)
    capsys.readouterr()
    run("graph", "--in", arr)
    first = capsys.readouterr().out
    monkeypatch.setenv("TOPECYCLE_SEED", "12345")
    run("graph", "--in", arr)
    assert capsys.readouterr().out == first


def test_module_entry_point(tmp_path):
    arr = tmp_path / "a.arr"
    proc = subprocess.run([sys.executable, "-m", "topecycle", "gen", "--family", "A", "--n", "3", "--out", str(arr)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and arr.read_text().startswith("dim 3")
