import json

import pytest

from zdg.cli import EXIT_AXIOM, EXIT_CHECK, EXIT_INPUT, EXIT_OK, generate, main
from zdg.graph_inverse import parse_graph
from zdg.semigroup import check_associativity, parse_semigroup, verify_inverse


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def test_analyze_b2(capsys, write):
    path = write("b2.sgp", generate("b2", []))
    code, out, _ = run(capsys, "analyze", path)
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["schema"] == "zdg/1"
    assert rep["semigroup"]["order"] == 5
    g = rep["graph"]
    assert set(g["vertices"]) == {"e", "f", "a", "b"} and len(g["edges"]) == 6
    assert (g["diameter"], g["girth"], g["diam_case"], g["girth_case"]) == (1, 3, "ii", "odd-cycle")
    assert all(c["passed"] for c in rep["checks"])


def test_analyze_trivial(capsys, write):
    code, out, _ = run(capsys, "analyze", write("t.sgp", "elements: z\ntable:\nz\n"))
    assert code == EXIT_OK
    g = json.loads(out)["graph"]
    assert g["vertices"] == [] and g["diameter"] is None and g["girth"] is None


def test_analyze_non_associative(capsys, write):
    text = "elements: a b\ntable:\nb a\na a\n"
    code, _, err = run(capsys, "analyze", write("bad.sgp", text))
    assert code == EXIT_AXIOM and "not associative" in err


def test_analyze_non_inverse(capsys, write):
    code, _, err = run(capsys, "analyze", write("lz.sgp", "elements: x y\ntable:\nx x\ny y\n"))
    assert code == EXIT_AXIOM and "commute" in err


def test_input_errors(capsys, write, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "missing.sgp"))[0] == EXIT_INPUT
    assert run(capsys, "analyze", write("r.sgp", "elements: a b\ntable:\na\n"))[0] == EXIT_INPUT
    code, _, err = run(capsys, "ig", write("t.dgf", "vertices: v\n"))
    assert code == EXIT_INPUT and "no zero-divisors" in err


def test_zero_free_report_has_sigma(capsys, write):
    path = write("c.sgp", generate("clifford", [], groups="2,2", homs="1"))
    code, out, _ = run(capsys, "analyze", path)
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["sigma"]["class_sizes"] == [2, 2]
    assert (rep["sigma"]["predicted_diameter"], rep["sigma"]["predicted_girth"]) == (2, 4)
    assert (rep["graph"]["diameter"], rep["graph"]["girth"]) == (2, 4)


@pytest.mark.parametrize("which, vertices, edges, metrics", [
    ("g1", 2, 1, [1, "inf"]),
    ("g2", 3, 3, [1, 3]),
    ("g3", 5, 9, [2, 3]),
])
def test_ig_examples(capsys, write, which, vertices, edges, metrics):
    path = write(f"{which}.dgf", generate("digraph", [which]))
    code, out, _ = run(capsys, "ig", path)
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["digraph"]["exact"] is True
    assert len(rep["graph"]["vertices"]) == vertices and len(rep["graph"]["edges"]) == edges
    assert [rep["graph"]["diameter"], rep["graph"]["girth"]] == metrics == rep["digraph"]["predicted"]


def test_ig_loop_truncated(capsys, write):
    code, out, _ = run(capsys, "ig", write("loop.dgf", generate("loop", [])), "--max-len", "3")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["digraph"]["truncated"] is True
    assert rep["digraph"]["predicted"] == [2, 3]
    skipped = [c for c in rep["checks"] if c.get("skipped")]
    assert [c["name"] for c in skipped] == ["ig-truncated-metrics"]


def test_gen_b2_table():
    S = parse_semigroup(generate("b2", []))
    rows = {S.elements[i]: [S.elements[j] for j in S.table[i]] for i in range(5)}
    assert S.elements == ("0", "e", "f", "a", "b")
    assert rows == {"0": list("00000"), "e": list("0e0a0"), "f": list("00f0b"),
                    "a": list("00a0e"), "b": list("0b0f0")}


def test_gen_i2():
    S = parse_semigroup(generate("i2", []))
    assert S.order == 7 and S.elements[S.zero] == "[]"
    assert S.elements[:3] == ("[]", "[1>1]", "[1>2]")


def test_gen_g3():
    G = parse_graph(generate("digraph", ["g3"]))
    assert G == parse_graph("vertices: w1 w2\nedges:\ne: w1 -> w2\n")


@pytest.mark.parametrize("name, params", [
    ("b2", []), ("i1", []), ("i2", []), ("i3", []), ("in", ["2"]), ("cyclic", ["4"]),
    ("s3", []), ("clifford", ["1,2,3", "0,0"]), ("clifford", ["3,3", "2"]),
])
def test_generated_semigroups_reparse(name, params):
    S = parse_semigroup(generate(name, params))
    assert check_associativity(S) is None
    assert verify_inverse(S).is_inverse


def test_gen_errors(capsys):
    assert run(capsys, "gen", "in", "4")[0] == EXIT_AXIOM
    assert run(capsys, "gen", "nope")[0] == EXIT_INPUT


def test_gen_to_file(capsys, tmp_path):
    out = tmp_path / "s3.sgp"
    assert run(capsys, "gen", "s3", "-o", str(out))[0] == EXIT_OK
    assert parse_semigroup(out.read_text()).order == 6


def test_reports_are_deterministic(capsys, write, tmp_path):
    path = write("i2.sgp", generate("i2", []))
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    da, db = tmp_path / "a.dot", tmp_path / "b.dot"
    run(capsys, "analyze", path, "--json", str(a), "--dot", str(da))
    run(capsys, "analyze", path, "--json", str(b), "--dot", str(db))
    assert a.read_bytes() == b.read_bytes()
    assert da.read_bytes() == db.read_bytes()


def test_export_dot(capsys, write):
    code, out, _ = run(capsys, "export-dot", write("g3.dgf", generate("digraph", ["g3"])))
    assert code == EXIT_OK
    assert out.startswith('graph "gamma" {')
    assert '"e^-1" -- "e";' in out
    assert '"w1" -- "ee^-1"' not in out and '"ee^-1" -- "w1"' not in out
    assert out.count("--") == 9


def test_export_dot_semigroup(capsys, write):
    code, out, _ = run(capsys, "export-dot", write("b2.sgp", generate("b2", [])))
    assert code == EXIT_OK and out.count("--") == 6


@pytest.mark.parametrize("family, count", [("groups", 7), ("i2-closures", 30),
                                           ("random-digraphs", 15)])
def test_verify(capsys, tmp_path, family, count):
    js = tmp_path / "v.json"
    code, out, _ = run(capsys, "verify", "--family", family, "--count", str(count),
                       "--seed", "3", "--json", str(js))
    summary = json.loads(js.read_text())
    assert code == EXIT_OK and summary["ok"]
    assert summary["instances"] == (7 if family == "groups" else count)
    assert "FAIL" not in out


def test_verify_is_reproducible(tmp_path, capsys):
    outs = []
    for name in ("a", "b"):
        p = tmp_path / f"{name}.json"
        run(capsys, "verify", "--family", "i3-closures", "--count", "10", "--seed", "9",
            "--json", str(p))
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]
