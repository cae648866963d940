import pytest

from tqftlab import builders as B
from tqftlab import corpus
from tqftlab.complex import Label, MarkedComplex, SimplicialMap, marked
from tqftlab.errors import GluingError
from tqftlab.gluing import (
    GluingMorphism, GluingSpec, MarkedIsomorphism, check_conditions, compose, glue, identity,
    quotient_is_valid,
)
from tqftlab.homology import betti, euler_homological


def two_intervals():
    return marked(B.interval(0).union(B.interval(2)),
                  ("A", "in", B.point(0)), ("X", "out", B.point(1)),
                  ("Y", "in", B.point(2)), ("B", "out", B.point(3)))


def test_self_gluing_path_gives_circle():
    g = glue(GluingSpec(B.marked_path(4), ["L"], ["R"], {0: 3}))
    assert g.target.complex == B.cycle(3)
    assert g.target.boundary == ()
    assert g.f.vertex_map[3] == 0
    assert check_conditions(g.f, g.spec, g.target) is None
    assert quotient_is_valid(g)


def test_mutual_gluing_keeps_remaining_boundary():
    g = glue(GluingSpec(two_intervals(), ("X",), ("Y",), {1: 2}))
    assert g.target.names == ("A", "B")
    assert g.target.component("B").label is Label.OUT
    assert euler_homological(g.target.complex) == 1
    assert g.check() is None


@pytest.mark.parametrize("spec, code", [
    (GluingSpec(B.marked_annulus(3, 2), ("bottom",), ("top",), {0: 3, 1: 4, 2: 5}), "non-simplicial-quotient"),
    (GluingSpec(B.marked_path(4), ("L",), ("L",), {0: 0}), "not-disjoint"),
    (GluingSpec(B.marked_path(4), ("L",), ("Q",), {0: 3}), "unknown-component"),
    (GluingSpec(B.marked_path(4), ("L",), ("R",), {0: 2}), "not-isomorphism"),
    (GluingSpec(B.marked_path(4), ("L",), ("R",), {}), "not-isomorphism"),
    (GluingSpec(marked(B.path(3), ("A", "in", B.point(0)), ("B", "in", B.point(2))), ("A",), ("B",), {0: 2}),
     "not-isomorphism"),
    (GluingSpec(marked(B.path(2), ("A", "in", B.point(0)), ("B", "out", B.point(1))), ("A",), ("B",), {0: 1}),
     "non-simplicial-quotient"),
])
def test_rejections(spec, code):
    with pytest.raises(GluingError) as info:
        glue(spec)
    assert info.value.code == code


def test_conditions_detect_broken_maps():
    g = glue(GluingSpec(B.marked_path(4), ("L",), ("R",), {0: 3}))
    # collapse an interior edge: condition 2
    bad = dict(g.f.vertex_map)
    bad[2] = 1
    f2 = SimplicialMap(g.f.source, g.f.target, bad)
    assert check_conditions(f2, g.spec, g.target).condition in (1, 2)
    # forget to identify the ends: condition 4
    sep = dict(g.f.vertex_map)
    sep[3] = 3
    wide = B.path(4)
    f3 = SimplicialMap(wide, wide, sep)
    assert check_conditions(f3, g.spec, MarkedComplex(wide)).condition == 4
    # target does not match: condition 0
    assert check_conditions(g.f, g.spec, MarkedComplex(B.cycle(4))).condition == 0


def test_condition_three_requires_matching_boundary():
    g = glue(GluingSpec(two_intervals(), ("X",), ("Y",), {1: 2}))
    swapped = MarkedComplex(g.target.complex, tuple(reversed(g.target.boundary))[:1])
    assert check_conditions(g.f, g.spec, swapped).condition == 3


def test_two_stage_equals_one_shot():
    m = marked(B.path(3, 0).union(B.path(3, 3)), ("a0", "in", B.point(0)), ("a1", "out", B.point(2)),
               ("b0", "in", B.point(3)), ("b1", "out", B.point(5)))
    g1 = glue(GluingSpec(m, ("a1",), ("b0",), {2: 3}))
    g2 = glue(GluingSpec(g1.target, ("a0",), ("b1",), {0: 5}))
    comp = compose(g1, g2)
    one = glue(GluingSpec(m, ("a1", "a0"), ("b0", "b1"), {2: 3, 0: 5}))
    assert comp.target == one.target and comp.f == one.f
    assert comp.spec.phi == one.spec.phi
    assert comp.check() is None
    assert betti(comp.target.complex) == (1, 1)


def test_composition_with_isomorphisms():
    m = B.marked_path(4)
    g = glue(GluingSpec(m, ("L",), ("R",), {0: 3}))
    shift = {v: v + 10 for v in m.complex.vertices}
    moved = MarkedComplex(m.complex.shift(10), tuple(
        type(b)(b.name + "s", b.label, b.subcomplex.shift(10)) for b in m.boundary))
    iso = MarkedIsomorphism(moved, m, SimplicialMap(moved.complex, m.complex, {v + 10: v for v in shift}))
    h = compose(iso, g)
    assert isinstance(h, GluingMorphism)
    assert h.spec.sigma1 == ("Ls",) and h.spec.phi == {10: 13}
    assert h.target == g.target and h.check() is None
    k = compose(g, identity(g.target))
    assert k.target == g.target and k.f == g.f
    ii = compose(identity(m), identity(m))
    assert isinstance(ii, MarkedIsomorphism)


def test_isomorphism_must_preserve_labels():
    m = B.marked_path(3)
    rev = SimplicialMap(m.complex, m.complex, {0: 2, 1: 1, 2: 0})
    with pytest.raises(GluingError):
        MarkedIsomorphism(m, m, rev)


def test_not_composable():
    g = glue(GluingSpec(B.marked_path(4), ("L",), ("R",), {0: 3}))
    with pytest.raises(GluingError) as info:
        compose(g, g)
    assert info.value.code == "not-composable"


def test_associativity_on_corpus_chain():
    a, b, c = corpus.staged()["chain3_circle"]
    left, right = compose(compose(a, b), c), compose(a, compose(b, c))
    assert left.target == right.target and left.f == right.f


@pytest.mark.parametrize("g", corpus.gluings(), ids=lambda g: str(sorted(g.source.names)))
def test_corpus_gluings_satisfy_conditions(g):
    assert check_conditions(g.f, g.spec, g.target) is None
