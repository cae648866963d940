import json

import pytest

from tqftlab.cli import run


def call(*argv):
    out, err = [], []
    code = run(list(argv), out=out.append, err=err.append)
    return code, "\n".join(out), "\n".join(err)


@pytest.mark.parametrize("argv, code, text", [
    (("euler", "examples/s2_tetra.json"), 0, "chi = 2"),
    (("statesum", "z", "examples/torus2.json", "--group", "cyclic:2"), 0, "Z = 2"),
    (("statesum", "z", "pillowcase.json", "--group", "symmetric:3"), 0, "Z = 1/6"),
    (("vect", "circle", "--dim", "2"), 0, "Z_S1 = 2"),
    (("vect", "snake", "--dim", "4"), 0, "pass"),
    (("homology", "disk.json", "--rel", "rim"), 0, "b2 = 1"),
    (("quinn", "--preset", "balanced", "eval", "interval_rel_pt.json"), 0, "u^(1/2)"),
    (("quinn", "--c1", "1", "--c2", "-1/2", "--c3", "-1/2", "--c4", "0", "eval", "interval_rel_pt.json"), 0, "u^(1/2)"),
    (("quinn", "--preset", "skew", "check-functor"), 0, "functorial"),
    (("quinn", "--c1", "1", "--c2", "1", "--c3", "0", "--c4", "0", "check-functor"), 1, "counterexample"),
    (("glue", "path_self.json"), 0, "chi(M_phi) = 0"),
    (("statesum", "pachner-check", "torus2.json", "--group", "cyclic:2", "--moves", "5", "--seed", "1"), 0, "Z = 2"),
])
def test_commands(argv, code, text):
    got, out, err = call(*argv)
    assert got == code, err
    assert text in out


@pytest.mark.parametrize("argv", [
    ("euler", "no/such/file.json"),
    ("frobnicate",),
    ("vect", "circle", "--dim", "0"),
    ("quinn", "--c1", "0.5", "--c2", "0", "--c3", "0", "--c4", "0", "eval", "disk.json"),
    ("quinn", "--preset", "euler", "--c1", "1", "eval", "disk.json"),
    ("statesum", "z", "torus2.json", "--group", "dihedral:4"),
    ("glue", "cylinder_min_self.json"),
])
def test_input_errors(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_malformed_json_reports_location(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"simplices": [[0],\n  [1,]]}')
    code, _, err = call("euler", str(p))
    assert code == 2
    assert "broken.json:2:" in err


def test_invalid_complex_is_input_error(tmp_path):
    p = tmp_path / "holes.json"
    p.write_text('{"simplices": [[0], [1], [0, 1, 2]]}')
    code, _, err = call("euler", str(p))
    assert code == 2 and "missing" in err


def test_glue_writes_output(tmp_path):
    dest = tmp_path / "torus.json"
    code, _, _ = call("glue", "annulus_torus.json", "-o", str(dest))
    assert code == 0
    assert call("homology", str(dest))[1].splitlines()[:3] == ["b0 = 1", "b1 = 2", "b2 = 1"]


def test_corpus_verify_json_report():
    code, out, _ = call("corpus-verify", "--json", "--seed", "0")
    report = json.loads(out)
    names = [c["name"] for c in report["checks"]]
    assert names[0] == "corpus-round-trip"
    failed = {c["criterion"] for c in report["checks"] if not c["passed"]}
    assert code == (1 if failed else 0)
