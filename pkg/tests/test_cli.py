import csv
import io
import json

import pytest

from gael.cli import main
from gael.corpus import fibonacci, rose
from gael.graph import serialize


@pytest.fixture
def rose_file(tmp_path):
    p = tmp_path / "rose2.json"
    p.write_text(serialize(rose(2)))
    return str(p)


@pytest.fixture
def fib_edges(tmp_path):
    p = tmp_path / "fib.txt"
    p.write_text("# fibonacci graph\nv -> v f\nv -> w g\nw -> v h\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys, rose_file, fib_edges):
    code, out, _ = run(capsys, "info", rose_file)
    doc = json.loads(out)
    assert code == 0 and doc["command"] == "info"
    assert doc["results"]["adjacency"] == [[2]] and doc["results"]["regular"] == ["v"]
    code, out, _ = run(capsys, "info", fib_edges)
    assert json.loads(out)["results"]["adjacency"] == [[1, 1], [1, 0]]


def test_dims_csv_rows(capsys, rose_file):
    for kind, expected in (
        ("path", lambda k: 2**k),
        ("cohn", lambda k: (k + 1) * 2**k),
        ("leavitt", lambda k: [1, 4][k] if k < 2 else 2 ** (k - 2) * (3 * k + 5)),
    ):
        code, out, _ = run(capsys, "dims", rose_file, "--kind", kind, "--kmax", "20", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and rows[0] == ["k", "dim"]
        assert [(int(k), int(d)) for k, d in rows[1:]] == [(k, expected(k)) for k in range(21)]


def test_dims_json_big_integers(capsys, rose_file):
    code, out, _ = run(capsys, "dims", rose_file, "--kmax", "200")
    dims = json.loads(out)["results"]["dims"]
    assert code == 0 and dims[200] == str(2**200)


def test_entropy(capsys, rose_file, fib_edges):
    code, out, _ = run(capsys, "entropy", rose_file, "--kmax", "100")
    res = json.loads(out)["results"]
    assert code == 0 and res["chain_ok"] and res["sandwich_ok"]
    assert res["closed_form"] == pytest.approx(0.6931471805599453, abs=1e-12)
    code, out, _ = run(capsys, "entropy", rose_file, "--kmax", "100", "--base", "2")
    assert json.loads(out)["results"]["closed_form"] == pytest.approx(1.0, abs=1e-12)
    code, out, _ = run(capsys, "entropy", fib_edges, "--kmax", "30", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "h_path", "h_cohn", "h_leavitt"] and len(rows) == 31


def test_verify_and_corruption(capsys, rose_file):
    code, out, _ = run(capsys, "verify", rose_file, "--kmax", "60")
    doc = json.loads(out)
    assert code == 0 and doc["results"]["all_ok"]
    code, out, _ = run(capsys, "verify", rose_file, "--kmax", "60", "--corrupt-dims")
    doc = json.loads(out)
    checks = doc["results"]["graphs"][0]["checks"]
    assert code == 1 and not checks["norm_sum_identity"]["ok"]


def test_verify_corpus_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "--corpus", "4,7", "--kmax", "40")
    _, second, _ = run(capsys, "verify", "--corpus", "4,7", "--kmax", "40")
    a, b = json.loads(first), json.loads(second)
    a.pop("duration_s"), b.pop("duration_s")
    assert a == b and a["results"]["all_ok"]


def test_cauchy(capsys, rose_file, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run(capsys, "cauchy", rose_file, "--k", "5", "--r", "3", "--nodes", "128", "--out", str(out_file))
    res = json.loads(out_file.read_text())["results"]
    assert code == 0 and out == ""
    assert res["max_error"] < 1e-12 and res["exact_power_rounds_back"] and res["within_bound"]


@pytest.mark.parametrize(
    "argv",
    [
        ["info", "/nonexistent/graph.json"],
        ["cauchy", "ROSE", "--r", "1.5"],
        ["cauchy", "ROSE", "--k", "20", "--nodes", "16"],
        ["entropy", "ROSE", "--kmax", "5"],
        ["verify"],
        ["verify", "--corpus", "abc"],
    ],
)
def test_input_errors(capsys, rose_file, argv):
    argv = [rose_file if a == "ROSE" else a for a in argv]
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("gael ")


def test_bad_document(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"vertices": ["v"], "edges": [["e", "v", "w"]]}))
    code, _, err = run(capsys, "dims", str(p))
    assert code == 2 and "'w'" in err
