import json

import pytest

from edgesquare.cli import EXIT_CAP, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, main, parse_graph_spec
from edgesquare.graph import GraphError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_show_ideal(capsys):
    code, out, _ = run(capsys, "show-ideal", "p3")
    assert code == EXIT_OK
    assert "I(G)      = (x*y, x*z, y*w)" in out
    assert "x1*y1*z1*w1" in out
    code, out, _ = run(capsys, "show-ideal", "edge", "--subscript", "--format", "json")
    rec = json.loads(out)
    assert rec["polarized_square"] == ["x_1*x_2*y_1*y_2"]


def test_facets_p3(capsys):
    code, out, _ = run(capsys, "facets", "p3")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 9
    assert "x1 y1 y2 z1 z2 w2" in out.splitlines()


def test_facets_witness_and_routes(capsys):
    code, out, _ = run(capsys, "facets", "triangle", "--witness", "--route", "both")
    assert code == EXIT_OK
    assert sum("star" in line for line in out.splitlines()) == 6
    code, out, _ = run(capsys, "facets", "edge", "--witness", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 4 and all("kinds" in r for r in recs)
    code, out, _ = run(capsys, "facets", "c4", "--route", "generic", "--subscript")
    assert "v0_1" in out


def test_is_pure(capsys):
    code, out, _ = run(capsys, "is-pure", "triangle")
    assert code == EXIT_OK and out.startswith("pure=False")
    code, out, _ = run(capsys, "is-pure", "c5", "--format", "json")
    assert json.loads(out)["dim"] == 6


def test_is_cm(capsys):
    code, out, _ = run(capsys, "is-cm", "p3")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "NOT CM (p=2); witness face {x1,y1,z2,w2}, b~0(link)=1"
    code, out, _ = run(capsys, "is-cm", "c5", "--char", "3")
    assert out.strip() == "CM (p=3)"
    code, out, _ = run(capsys, "is-cm", "triangle")
    assert "fast-fail: not-pure" in out
    code, out, _ = run(capsys, "is-cm", "p3", "--format", "json", "--no-fast-fail")
    rec = json.loads(out)
    assert rec["witness"]["face"] == ["x1", "y1", "z2", "w2"] and rec["char"] == 2


def test_classify_cycle(capsys):
    code, out, _ = run(capsys, "classify-cycle", "5", "--verify")
    assert code == EXIT_OK and out.strip() == "C5: CM (theorem) = CM (verified, p=2)"
    code, out, _ = run(capsys, "classify-cycle", "40")
    assert code == EXIT_OK and "NOT CM" in out
    code, _, err = run(capsys, "classify-cycle", "12", "--verify")
    assert code == EXIT_CAP and "too big" in err


def test_screen(capsys):
    code, out, _ = run(capsys, "screen", "p3")
    assert out.strip() == "rejected: leaf-path-3 (path z-x-y-w)"
    code, out, _ = run(capsys, "screen", "c5", "--format", "json")
    assert json.loads(out) == {"reason": None, "witness": None}


def test_census(capsys):
    code, out, _ = run(capsys, "census", "4")
    assert code == EXIT_OK and "CM squares: A_" in out
    code, out, _ = run(capsys, "census", "3", "--format", "json", "--char", "2")
    assert len(out.splitlines()) == 3
    code, _, err = run(capsys, "census", "7")
    assert code == EXIT_CAP


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "is-cm", "nonsense")[0] == EXIT_INPUT
    assert run(capsys, "is-cm", "g6:~~")[0] == EXIT_INPUT
    bad = tmp_path / "bad.txt"
    bad.write_text("a b\na b c\n")
    code, _, err = run(capsys, "facets", str(bad))
    assert code == EXIT_INPUT and "line 2, column 5" in err
    iso = tmp_path / "iso.txt"
    iso.write_text("a b\nc\n")
    assert run(capsys, "is-cm", str(iso))[0] == EXIT_INPUT
    assert run(capsys, "is-cm", "p3", "--char", "4")[0] == EXIT_INPUT


def test_mismatch_exit(capsys, monkeypatch):
    import edgesquare.cm as cm
    from edgesquare.complexes import SimplicialComplex

    monkeypatch.setattr(cm, "generic_square_complex", lambda G: SimplicialComplex.from_facets(("q",), [1]))
    code, _, err = run(capsys, "facets", "p3", "--route", "both")
    assert code == EXIT_MISMATCH and "disagree" in err


def test_graph_files(tmp_path):
    el = tmp_path / "g.txt"
    el.write_text("z x\nx y\ny w\n")
    assert parse_graph_spec(str(el)).num_edges == 3
    g6 = tmp_path / "g.g6"
    g6.write_text("Dhc\n")
    assert parse_graph_spec(str(g6)).num_edges == 5


def test_builtin_specs():
    assert parse_graph_spec("k3,3").num_edges == 9
    assert parse_graph_spec("k4").num_edges == 6
    assert parse_graph_spec("p4").num_edges == 4
    assert len(parse_graph_spec("whisker:triangle")) == 6
    assert len(parse_graph_spec("doublestar:2,3")) == 7
    assert parse_graph_spec("stars").num_edges == 6
    with pytest.raises(GraphError):
        parse_graph_spec("doublestar:x")


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "edgesquare", "is-cm", "edge"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "CM (p=2)"
