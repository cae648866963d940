"""The bundled example corpus.

Files under ``corpus/`` are generated from :func:`definitions` by
``python -m tqftlab.corpus --write``; a test keeps them in sync. Every
expected value in the manifest records where it came from:

* ``literature`` -- a value stated in the published construction,
* ``by-hand``    -- immediate from counting,
* ``oracle``     -- computed by brute-force enumeration or an independent
  rank computation before the implementation existed.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import builders as B
from . import io
from .complex import Label, MarkedComplex, SimplicialComplex, marked
from .gluing import GluingMorphism, GluingSpec, compose, glue
from .statesum import Surface2D, pachner_13

CORPUS_DIR = Path(__file__).parent / "corpus"
SOURCES = ("literature", "by-hand", "oracle")


def _exp(value: Any, source: str) -> dict[str, Any]:
    assert source in SOURCES
    return {"value": value, "source": source}


@dataclass
class CorpusEntry:
    name: str
    kind: str  # complex | gluing | staged | surface
    payload: Any
    expect: dict[str, dict[str, Any]] = field(default_factory=dict)

    @property
    def file(self) -> str:
        folder = {"complex": "complexes", "gluing": "gluings", "staged": "staged", "surface": "surfaces"}
        return f"{folder[self.kind]}/{self.name}.json"

    def to_json(self) -> str:
        if self.kind == "complex":
            return io.dumps_complex(self.payload)
        if self.kind == "gluing":
            return io.canonical(io.gluing_to_dict(self.payload))
        if self.kind == "staged":
            src, specs = self.payload
            return io.canonical(io.staged_to_dict(src, specs))
        return io.canonical(io.surface_to_dict(self.payload))


def _shot(s1: list[str], s2: list[str], phi: dict[int, int]) -> dict[str, Any]:
    """The expected single-step gluing equivalent to a staged chain."""
    return {"sigma1": s1, "sigma2": s2, "phi": {str(k): str(v) for k, v in sorted(phi.items())}}


def _mutual(a: MarkedComplex, b: MarkedComplex) -> MarkedComplex:
    """Side-by-side union of two marked complexes already on disjoint vertex ids."""
    return MarkedComplex(a.complex.union(b.complex), a.boundary + b.boundary)


def definitions() -> list[CorpusEntry]:
    P, pt = B.path, B.point
    out: list[CorpusEntry] = []

    def cx(name: str, m: MarkedComplex, **expect: dict[str, Any]) -> None:
        out.append(CorpusEntry(name, "complex", m, expect))

    def gl(name: str, m: MarkedComplex, s1: list[str], s2: list[str], phi: dict[int, int],
           **expect: dict[str, Any]) -> None:
        out.append(CorpusEntry(name, "gluing", GluingSpec(m, tuple(s1), tuple(s2), phi), expect))

    # -- complexes
    cx("s2_tetra", MarkedComplex(B.tetra_boundary()),
       chi=_exp(2, "by-hand"), betti=_exp([1, 0, 1], "by-hand"))
    cx("circle3", MarkedComplex(B.triangle_boundary()),
       chi=_exp(0, "by-hand"), betti=_exp([1, 1], "by-hand"))
    cx("interval", MarkedComplex(B.interval()),
       chi=_exp(1, "by-hand"), betti=_exp([1, 0], "by-hand"))
    cx("interval_rel_pt", marked(B.interval(), ("A", Label.IN, pt(0))),
       chi=_exp(1, "by-hand"), betti=_exp([1, 0], "by-hand"),
       relative_betti=_exp({"rel": ["A"], "value": [0, 0]}, "oracle"),
       quinn_exponent=_exp({"euler": "0", "skew": "1", "balanced": "1/2"}, "by-hand"))
    cx("cylinder_min", B.marked_annulus(3, 2),
       chi=_exp(0, "by-hand"), betti=_exp([1, 1, 0], "by-hand"),
       relative_betti=_exp({"rel": ["bottom"], "value": [0, 0, 0]}, "oracle"))
    cx("disk", marked(B.cone_disk(3), ("rim", Label.OUT, B.cycle(3))),
       chi=_exp(1, "by-hand"), betti=_exp([1, 0, 0], "by-hand"),
       relative_betti=_exp({"rel": ["rim"], "value": [0, 0, 1]}, "oracle"))
    cx("balanced_circle", marked(B.triangle_boundary(), ("arc", Label.IN, P(2, 0)),
                                 ("tip", Label.OUT, pt(2))),
       chi=_exp(0, "by-hand"), betti=_exp([1, 1], "by-hand"),
       quinn_exponent=_exp({"euler": "-1", "skew": "-1", "balanced": "-1"}, "by-hand"))
    cx("two_points", MarkedComplex(pt(0).union(pt(1))),
       chi=_exp(2, "by-hand"), betti=_exp([2], "by-hand"))
    cx("empty", MarkedComplex(SimplicialComplex()), chi=_exp(0, "by-hand"), betti=_exp([], "by-hand"),
       quinn_exponent=_exp({"euler": "0", "skew": "0", "balanced": "0"}, "by-hand"))

    # -- single gluings
    gl("path_self", B.marked_path(4), ["L"], ["R"], {0: 3},
       chi_source=_exp(1, "by-hand"), chi_target=_exp(0, "literature"), chi_glued=_exp(1, "by-hand"),
       betti_target=_exp([1, 1], "by-hand"))
    intervals = marked(B.interval(0).union(B.interval(2)), ("A", Label.IN, pt(0)), ("X", Label.OUT, pt(1)),
                       ("Y", Label.IN, pt(2)), ("B", Label.OUT, pt(3)))
    gl("two_intervals", intervals, ["X"], ["Y"], {1: 2},
       chi_source=_exp(2, "by-hand"), chi_target=_exp(1, "literature"), chi_glued=_exp(1, "by-hand"),
       betti_target=_exp([1, 0], "by-hand"))
    gl("cylinder_min_self", B.marked_annulus(3, 2), ["bottom"], ["top"], {0: 3, 1: 4, 2: 5},
       error=_exp("non-simplicial-quotient", "by-hand"))
    gl("annulus_torus", B.marked_annulus(3, 4), ["bottom"], ["top"], {0: 9, 1: 10, 2: 11},
       chi_source=_exp(0, "by-hand"), chi_target=_exp(0, "by-hand"), chi_glued=_exp(0, "by-hand"),
       betti_target=_exp([1, 2, 1], "oracle"))
    disks = _mutual(marked(B.cone_disk(3, 0), ("rim", Label.OUT, B.cycle(3, 0))),
                    marked(B.cone_disk(3, 4), ("rim2", Label.IN, B.cycle(3, 4))))
    gl("disks_sphere", disks, ["rim"], ["rim2"], {0: 4, 1: 5, 2: 6},
       chi_source=_exp(2, "by-hand"), chi_target=_exp(2, "by-hand"), chi_glued=_exp(0, "by-hand"),
       betti_target=_exp([1, 0, 1], "oracle"))
    disk_ann = _mutual(marked(B.cone_disk(3, 0), ("rim", Label.OUT, B.cycle(3, 0))),
                       B.marked_annulus(3, 2, start=4))
    gl("disk_annulus", disk_ann, ["rim"], ["bottom"], {0: 4, 1: 5, 2: 6},
       chi_source=_exp(1, "by-hand"), chi_target=_exp(1, "by-hand"), chi_glued=_exp(0, "by-hand"),
       betti_target=_exp([1, 0, 0], "oracle"))
    spheres = marked(B.tetra_boundary(0).union(B.tetra_boundary(4)),
                     ("p", Label.OUT, pt(0)), ("q", Label.IN, pt(4)))
    gl("spheres_wedge", spheres, ["p"], ["q"], {0: 4},
       chi_source=_exp(4, "by-hand"), chi_target=_exp(3, "by-hand"), chi_glued=_exp(1, "by-hand"),
       betti_target=_exp([1, 0, 2], "oracle"))
    two_paths = marked(P(3, 0).union(P(3, 3)), ("L0", Label.IN, pt(0)), ("R0", Label.OUT, pt(2)),
                       ("L1", Label.IN, pt(3)), ("R1", Label.OUT, pt(5)))
    gl("paths_double", two_paths, ["R0", "R1"], ["L1", "L0"], {2: 3, 5: 0},
       chi_source=_exp(2, "by-hand"), chi_target=_exp(0, "by-hand"), chi_glued=_exp(2, "by-hand"),
       betti_target=_exp([1, 1], "by-hand"))
    annuli = _mutual(B.marked_annulus(3, 2), marked(B.annulus(3, 2, 6),
                                                     ("bottom2", Label.IN, B.cycle(3, 6)),
                                                     ("top2", Label.OUT, B.cycle(3, 9))))
    gl("annuli_stack", annuli, ["top"], ["bottom2"], {3: 6, 4: 7, 5: 8},
       chi_source=_exp(0, "by-hand"), chi_target=_exp(0, "by-hand"), chi_glued=_exp(0, "by-hand"),
       betti_target=_exp([1, 1, 0], "oracle"))

    # -- staged gluings (composition)
    ab = marked(P(3, 0).union(P(3, 3)), ("a0", Label.IN, pt(0)), ("a1", Label.OUT, pt(2)),
                ("b0", Label.IN, pt(3)), ("b1", Label.OUT, pt(5)))
    g1 = glue(GluingSpec(ab, ("a1",), ("b0",), {2: 3}))
    out.append(CorpusEntry("intervals_circle", "staged",
                           (ab, [g1.spec, GluingSpec(g1.target, ("a0",), ("b1",), {0: 5})]),
                           {"chi_stages": _exp([2, 1, 0], "oracle"),
                            "one_shot": _exp(_shot(["a1", "a0"], ["b0", "b1"], {2: 3, 0: 5}), "by-hand")}))

    chain = marked(P(3, 0).union(P(3, 3), P(3, 6)),
                   ("L0", Label.IN, pt(0)), ("R0", Label.OUT, pt(2)),
                   ("L1", Label.IN, pt(3)), ("R1", Label.OUT, pt(5)),
                   ("L2", Label.IN, pt(6)), ("R2", Label.OUT, pt(8)))
    c1 = glue(GluingSpec(chain, ("R0",), ("L1",), {2: 3}))
    c2 = glue(GluingSpec(c1.target, ("R1",), ("L2",), {5: 6}))
    out.append(CorpusEntry("chain3_circle", "staged",
                           (chain, [c1.spec, c2.spec, GluingSpec(c2.target, ("R2",), ("L0",), {8: 0})]),
                           {"chi_stages": _exp([3, 2, 1, 0], "oracle"),
                            "one_shot": _exp(_shot(["R0", "R1", "R2"], ["L1", "L2", "L0"],
                                                   {2: 3, 5: 6, 8: 0}), "by-hand")}))

    tor = _mutual(B.marked_annulus(3, 3), marked(B.annulus(3, 2, 9),
                                                  ("bottom2", Label.IN, B.cycle(3, 9)),
                                                  ("top2", Label.OUT, B.cycle(3, 12))))
    t1 = glue(GluingSpec(tor, ("top",), ("bottom2",), {6: 9, 7: 10, 8: 11}))
    out.append(CorpusEntry("annuli_torus", "staged",
                           (tor, [t1.spec, GluingSpec(t1.target, ("top2",), ("bottom",), {12: 0, 13: 1, 14: 2})]),
                           {"chi_stages": _exp([0, 0, 0], "oracle"),
                            "one_shot": _exp(_shot(["top", "top2"], ["bottom2", "bottom"],
                                                   {6: 9, 7: 10, 8: 11, 12: 0, 13: 1, 14: 2}), "by-hand")}))

    # -- surfaces
    zs = lambda z2, z3, s3, src: _exp({"cyclic:2": z2, "cyclic:3": z3, "symmetric:3": s3}, src)  # noqa: E731
    out.append(CorpusEntry("pillowcase", "surface", B.pillowcase(), {"Z": zs("1/2", "1/3", "1/6", "oracle")}))
    out.append(CorpusEntry("torus2", "surface", B.torus2(), {"Z": zs("2", "3", "3", "oracle")}))
    out.append(CorpusEntry("torus_sub", "surface", pachner_13(B.torus2(), 0), {"Z": zs("2", "3", "3", "oracle")}))
    out.append(CorpusEntry("tetra_sphere", "surface", B.tetra_surface(), {"Z": zs("1/2", "1/3", "1/6", "oracle")}))
    out.append(CorpusEntry("genus2", "surface", B.genus2(), {"Z": zs("8", "27", "81", "oracle")}))
    return out


def manifest(entries: list[CorpusEntry]) -> dict[str, Any]:
    return {"entries": [{"name": e.name, "kind": e.kind, "file": e.file, "expect": e.expect} for e in entries]}


def write_corpus(root: Path = CORPUS_DIR) -> list[Path]:
    entries = definitions()
    written = []
    for e in entries:
        p = root / e.file
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(e.to_json(), encoding="utf-8")
        written.append(p)
    mp = root / "manifest.json"
    mp.write_text(io.canonical(manifest(entries)), encoding="utf-8")
    written.append(mp)
    return written


# --- loading -------------------------------------------------------------------------

def load_manifest(root: Path = CORPUS_DIR) -> list[dict[str, Any]]:
    return io.read_json(root / "manifest.json")["entries"]


def load_entry(entry: dict[str, Any], root: Path = CORPUS_DIR) -> Any:
    path = root / entry["file"]
    kind = entry["kind"]
    if kind == "complex":
        return io.load_complex(path)
    if kind == "gluing":
        return io.load_gluing(path)
    if kind == "staged":
        return load_staged(path)
    return io.load_surface(path)


def load_staged(path: Path) -> list[GluingMorphism]:
    """Glue stage by stage; returns the list of single-stage morphisms."""
    src, stages = io.staged_from_dict(io.read_json(path))
    gs: list[GluingMorphism] = []
    for i, st in enumerate(stages):
        g = glue(io.stage_spec(st, src, i))
        gs.append(g)
        src = g.target
    return gs


def complexes(root: Path = CORPUS_DIR) -> dict[str, MarkedComplex]:
    return {e["name"]: load_entry(e, root) for e in load_manifest(root) if e["kind"] == "complex"}


def surfaces(root: Path = CORPUS_DIR) -> dict[str, Surface2D]:
    return {e["name"]: load_entry(e, root) for e in load_manifest(root) if e["kind"] == "surface"}


def gluing_specs(root: Path = CORPUS_DIR) -> dict[str, GluingSpec]:
    return {e["name"]: load_entry(e, root) for e in load_manifest(root) if e["kind"] == "gluing"}


def staged(root: Path = CORPUS_DIR) -> dict[str, list[GluingMorphism]]:
    return {e["name"]: load_entry(e, root) for e in load_manifest(root) if e["kind"] == "staged"}


def gluings(root: Path = CORPUS_DIR) -> list[GluingMorphism]:
    """Every accepted gluing in the corpus: single gluings, each stage of
    each staged gluing, and the composite of every staged chain."""
    out = []
    for name, spec in gluing_specs(root).items():
        try:
            out.append(glue(spec))
        except Exception:
            continue
    for stages in staged(root).values():
        out.extend(stages)
        acc = stages[0]
        for g in stages[1:]:
            acc = compose(acc, g)
            out.append(acc)
    return out


def all_complexes(root: Path = CORPUS_DIR) -> list[MarkedComplex]:
    """Every marked complex appearing in the corpus, sources and targets included."""
    seen = list(complexes(root).values())
    for g in gluings(root):
        seen += [g.source, g.target]
    return seen


def _main() -> None:
    ap = argparse.ArgumentParser(description="Regenerate the bundled corpus files.")
    ap.add_argument("--write", action="store_true", help="write files under the package corpus directory")
    args = ap.parse_args()
    if args.write:
        for p in write_corpus():
            print(p.relative_to(CORPUS_DIR.parent))
    else:
        for e in definitions():
            print(e.file)


if __name__ == "__main__":
    _main()
