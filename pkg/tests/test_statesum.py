import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tqftlab import builders as B
from tqftlab.errors import InvalidSurface, NotAGroup, NotFlippable
from tqftlab.statesum import (
    Surface2D, count_admissible, count_admissible_naive, cyclic_group, flippable, group_from_table,
    is_admissible, make_group, pachner_13, pachner_22, partition_function, random_move,
    surface_union, symmetric_group, triangle_product,
)

GROUPS = {"Z2": cyclic_group(2), "Z3": cyclic_group(3), "S3": symmetric_group(3)}


def brute_force(s, g):
    """Independent oracle: plain Python loop over every coloring."""
    n = sum(all(triangle_product(g, t, col) == g.identity for t in s.triangles)
            for col in itertools.product(range(g.order), repeat=len(s.edges)))
    return Fraction(n, g.order ** s.vertex_count)


def test_groups():
    s3 = symmetric_group(3)
    assert s3.order == 6 and not s3.is_abelian()
    assert cyclic_group(4).is_abelian()
    for a in range(6):
        assert s3.mul[a][s3.inverse[a]] == s3.identity


@pytest.mark.parametrize("table, needle", [
    ([[0, 1], [1, 1]], "inverse"),
    ([[0, 1], [1, 2]], "closure"),
    ([[0, 0], [0, 0]], "identity"),
])
def test_group_table_validation(table, needle):
    with pytest.raises(NotAGroup) as info:
        group_from_table(table)
    assert needle in str(info.value)


def test_non_associative_table():
    # a Latin square with identity 0 that is not associative
    t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup, match="associativity"):
        group_from_table(t)


def test_make_group_table():
    g = make_group("table", mul=[[0, 1], [1, 0]])
    assert g.order == 2


@pytest.mark.parametrize("surface, z", [
    (B.pillowcase, {"Z2": Fraction(1, 2), "Z3": Fraction(1, 3), "S3": Fraction(1, 6)}),
    (B.torus2, {"Z2": 2, "Z3": 3, "S3": 3}),
    (B.tetra_surface, {"Z2": Fraction(1, 2), "Z3": Fraction(1, 3), "S3": Fraction(1, 6)}),
])
def test_partition_function_against_brute_force(surface, z):
    s = surface()
    for name, g in GROUPS.items():
        assert partition_function(s, g) == z[name] == brute_force(s, g)


def test_genus_two():
    s = B.genus2()
    assert s.euler_characteristic() == -2
    assert partition_function(s, cyclic_group(2)) == 8
    assert partition_function(s, cyclic_group(3)) == 27


def test_invalid_surfaces():
    with pytest.raises(InvalidSurface):
        Surface2D(1, [(0, 0)], [((0, True), (0, True), (0, True))])
    with pytest.raises(InvalidSurface):
        Surface2D(3, [(0, 1), (1, 2), (2, 0)], [((0, True), (2, True), (1, True)), ((2, False), (1, False), (0, False))])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(sorted(GROUPS)))
def test_rotation_and_start_independence(seed, gname):
    g = GROUPS[gname]
    rng = random.Random(seed)
    s = B.torus2()
    col = [rng.randrange(g.order) for _ in s.edges]
    for tri in s.triangles:
        ident = [triangle_product(g, tri, col, k) == g.identity for k in range(3)]
        assert len(set(ident)) == 1


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_moves_preserve_z(seed):
    rng = random.Random(seed)
    g = cyclic_group(2)
    s = B.pillowcase()
    for _ in range(4):
        _, _, s = random_move(s, rng)
        assert s.euler_characteristic() == 2
        assert count_admissible(s, g) == count_admissible_naive(s, g)
        assert partition_function(s, g) == Fraction(1, 2)


def test_pachner_13_shape():
    s = pachner_13(B.torus2(), 0)
    assert (s.vertex_count, len(s.edges), len(s.triangles)) == (2, 6, 4)
    assert partition_function(s, symmetric_group(3)) == 3


def test_pachner_22():
    s = B.tetra_surface()
    e = next(e for e in range(len(s.edges)) if flippable(s, e))
    t = pachner_22(s, e)
    assert t.edges[e] != s.edges[e]
    assert partition_function(t, symmetric_group(3)) == Fraction(1, 6)
    with pytest.raises(NotFlippable):
        pachner_22(B.pillowcase(), 0)


def test_admissibility_and_union():
    s = B.torus2()
    g = cyclic_group(3)
    assert is_admissible(s, g, [1, 1, 2])
    assert not is_admissible(s, g, [1, 1, 1])
    u = surface_union(B.pillowcase(), s)
    assert partition_function(u, g) == partition_function(B.pillowcase(), g) * 3
