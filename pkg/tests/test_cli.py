import io
import json
import subprocess
import sys

import pytest

from polyext.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.fixture
def poly(tmp_path):
    def write(name, data):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return str(p)
    return write


def test_enumerate_examples():
    code, text = run("enumerate", "--family", "perm", "--n", "3", "--filter", "loopless")
    assert code == 0 and json.loads(text)["count"] == 6
    code, text = run("enumerate", "--family", "permB", "--n", "2")
    assert code == 0 and json.loads(text)["count"] == 8
    code, text = run("enumerate", "--family", "perm", "--n", "0")
    assert json.loads(text)["count"] == 1


def test_ext_examples(poly):
    pt = poly("pt.json", {"ambient": 1, "vertices": [[0]]})
    seg = poly("seg.json", {"ambient": 1, "vertices": [[0], [2]]})
    code, text = run("ext", pt, seg)
    assert code == 0 and {"p": 0, "dim": 3} in json.loads(text)["totals"]
    code, text = run("ext", seg, pt)
    assert json.loads(text)["ext"] == [{"m": [1], "p": 1, "dim": 1}]
    code, text = run("ext", seg, seg, "--equivariant")
    assert json.loads(text) == {"ext": [{"p": 0, "dim": 1}]}


def test_verify_and_csv():
    code, text = run("verify", "--family", "stell", "--n", "2")
    assert code == 0 and json.loads(text)["status"] == "PASS"
    code, text = run("verify", "--family", "perm", "--n", "3", "--format", "csv")
    rows = [list(map(int, line.split(","))) for line in text.strip().splitlines()]
    assert len(rows) == 6 and all(rows[i][i] == 1 for i in range(6))


def test_quiver_and_counts():
    code, text = run("quiver", "--family", "perm", "--n", "3", "--format", "dot")
    assert code == 0 and text.count("->") == 12
    code, text = run("quiver", "--family", "stell", "--n", "2", "--format", "json")
    assert len(json.loads(text)["arrows"]) == 9
    code, text = run("counts", "--family", "perm", "--n", "4", "--cuspidal")
    assert json.loads(text)["count"] == 9


def test_certify(poly):
    cube = poly("cube.json", {"ambient": 2, "vertices": [[0, 0], [2, 0], [0, 2], [2, 2]]})
    code, text = run("certify", "--polytope", cube, "--family", "stell")
    assert code == 0 and json.loads(text)["verification"]["passed"]
    tri = poly("tri.json", {"ambient": 2, "vertices": [[0, 0], [2, 0], [0, 1]]})
    assert run("certify", "--polytope", tri, "--family", "perm")[0] == 2


def test_gallery_and_suite():
    code, text = run("gallery", "--kind", "typeC")
    rep = json.loads(text)
    assert code == 0 and rep["interior_points"] == [[1, 1]] and not rep["exceptional"]
    code, text = run("gallery", "--kind", "hirzebruch", "--param", "1")
    assert code == 0 and json.loads(text)["strongly_exceptional"]
    assert run("gallery", "--kind", "projective")[0] == 2
    code, text = run("suite", "cp1")
    assert code == 0 and json.loads(text)["passed"]


def test_exit_codes(poly, monkeypatch):
    bad = poly("bad.json", {"ambient": 1, "vertices": [[0.5]]})
    pt = poly("pt.json", {"ambient": 1, "vertices": [[0]]})
    assert run("ext", bad, pt)[0] == 2
    assert run("ext", "/nonexistent.json", pt)[0] == 2
    assert run("enumerate", "--family", "perm", "--n", "9")[0] == 3
    assert run("frobnicate")[0] == 2
    monkeypatch.setenv("POLYEXT_CAPS", '{"schubert_n": 2}')
    assert run("enumerate", "--family", "perm", "--n", "3")[0] == 3
    monkeypatch.setenv("POLYEXT_CAPS", '{"perm_n": 2}')
    assert run("counts", "--family", "perm", "--n", "3")[0] == 3
    monkeypatch.setenv("POLYEXT_CAPS", '{"perm_n": -1}')
    assert run("enumerate", "--family", "perm", "--n", "1")[0] == 2
    monkeypatch.setenv("POLYEXT_CAPS", '{"bogus": 1}')
    assert run("enumerate", "--family", "perm", "--n", "1")[0] == 2


def test_schema_rejects_malformed(poly):
    pt = poly("pt.json", {"ambient": 1, "vertices": [[0]]})
    for data in ({"vertices": [[0]]}, {"ambient": 1, "vertices": "x"}, [1, 2]):
        assert run("ext", poly("m.json", data), pt)[0] == 2
    assert run("counts", "--family", "perm", "--n", "-1")[0] == 2
    assert run("--jobs", "0", "counts", "--family", "perm", "--n", "2")[0] == 2


def test_failed_verification_exit_code(monkeypatch):
    import polyext.collections as colls

    real = colls.verify_strong_exceptionality

    def broken(c, jobs=1):
        rep = real(c, jobs)
        rep["passed"] = False
        return rep

    monkeypatch.setattr(colls, "verify_strong_exceptionality", broken)
    assert run("verify", "--family", "perm", "--n", "2")[0] == 1


def test_jobs_byte_identical():
    a = run("--jobs", "1", "verify", "--family", "stell", "--n", "2")[1]
    b = run("--jobs", "2", "verify", "--family", "stell", "--n", "2")[1]
    assert a == b
    c = run("--seed", "3", "suite", "certificates", "--count", "2")[1]
    d = run("--seed", "3", "suite", "certificates", "--count", "2")[1]
    assert c == d


def test_output_flag(tmp_path):
    out = tmp_path / "o.json"
    code, text = run("--output", str(out), "counts", "--family", "stell", "--n", "2")
    assert code == 0 and text == "" and json.loads(out.read_text())["count"] == 5


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polyext.cli", "counts", "--family", "perm", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["count"] == 6
