import json

import pytest

from tqftlab import corpus, io
from tqftlab.complex import Label
from tqftlab.errors import InvalidComplex

ENTRIES = corpus.definitions()


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.file)
def test_files_match_generator(entry):
    assert (corpus.CORPUS_DIR / entry.file).read_text(encoding="utf-8") == entry.to_json()


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.file)
def test_round_trip(entry):
    text = (corpus.CORPUS_DIR / entry.file).read_text(encoding="utf-8")
    data = json.loads(text)
    if entry.kind == "complex":
        again = io.dumps_complex(io.complex_from_dict(data))
    elif entry.kind == "gluing":
        again = io.canonical(io.gluing_to_dict(io.gluing_from_dict(data)))
    elif entry.kind == "staged":
        src, stages = io.staged_from_dict(data)
        specs = [io.stage_spec(s, src, i) for i, s in enumerate(stages)]
        again = io.canonical(io.staged_to_dict(src, specs))
    else:
        again = io.canonical(io.surface_to_dict(io.surface_from_dict(data)))
    assert again == text


def test_manifest_sources():
    man = corpus.load_manifest()
    assert man == corpus.manifest(ENTRIES)["entries"]
    for e in man:
        assert e["expect"], e["name"]
        for v in e["expect"].values():
            assert v["source"] in corpus.SOURCES


def test_closure_flag_and_labels():
    d = {"simplices": [[0, 1, 2]], "closure": True,
         "boundary": [{"name": "A", "label": "IN", "simplices": [[0, 1]]}]}
    m = io.complex_from_dict(d)
    assert len(m.complex.simplices) == 7
    assert m.component("A").label is Label.IN
    assert len(m.component("A").subcomplex.simplices) == 3


def test_example_from_format_description():
    text = ('{"vertices":[0,1,2], "simplices":[[0],[1],[2],[0,1],[1,2],[0,2]], '
            '"boundary":[{"name":"A","label":"in","simplices":[[0],[1],[0,1]]}]}')
    m = io.complex_from_dict(io.parse_json(text))
    assert io.dumps_complex(m) == io.canonical(json.loads(io.dumps_complex(m)))
    assert m.names == ("A",)


def test_malformed_json_location():
    with pytest.raises(io.FormatError, match=r"x.json:1:\d+"):
        io.parse_json('{"a": [1,', "x.json")


@pytest.mark.parametrize("data", [
    {"simplices": [[0, "a"]]},
    {"simplices": [[0]], "boundary": [{"name": "A"}]},
    {"simplices": [[0]], "boundary": [{"name": "A", "label": "sideways", "simplices": []}]},
])
def test_schema_errors(data):
    with pytest.raises(io.FormatError):
        io.complex_from_dict(data)


def test_load_rejects_missing_faces(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"simplices":[[0],[1],[0,1,2]]}')
    with pytest.raises(InvalidComplex, match="missing"):
        io.load_complex(p)


@pytest.mark.parametrize("text, order", [
    ("cyclic:5", 5), ("symmetric:3", 6), ('{"kind":"cyclic","n":3}', 3),
    ('{"kind":"table","mul":[[0,1],[1,0]]}', 2),
])
def test_parse_group(text, order):
    assert io.parse_group(text).order == order


def test_parse_group_rejects():
    with pytest.raises(io.FormatError):
        io.parse_group("dihedral:4")
