import pytest
import sympy
from hypothesis import given, settings

from tqftlab import builders as B
from tqftlab.complex import SimplicialComplex, euler_combinatorial, marked
from tqftlab.errors import NotASubcomplex
from tqftlab.homology import (
    betti, boundary_matrices, euler_homological, euler_relative, relative_chain_complex,
)

from strategies import complexes


@pytest.mark.parametrize("c, b", [
    (B.point(), (1,)),
    (B.interval(), (1, 0)),
    (B.cycle(4), (1, 1)),
    (B.tetra_boundary(), (1, 0, 1)),
    (B.simplex_boundary(4), (1, 0, 0, 1)),
    (B.cone_disk(5), (1, 0, 0)),
    (B.annulus(3, 2), (1, 1, 0)),
    (SimplicialComplex(), ()),
])
def test_betti_known(c, b):
    assert betti(c) == b


def test_boundary_of_boundary_vanishes():
    cc = boundary_matrices(B.simplex_boundary(4))
    for n in range(2, cc.top + 1):
        d_n, d_prev = sympy.Matrix(cc.boundary[n]), sympy.Matrix(cc.boundary[n - 1])
        assert (d_prev * d_n).is_zero_matrix


def _sympy_betti(c):
    cc = boundary_matrices(c)
    def r(n):
        if n < 1 or n > cc.top or not cc.boundary[n] or not cc.bases[n]:
            return 0
        return sympy.Matrix(cc.boundary[n]).rank()
    ranks = {n: r(n) for n in range(c.dim + 2)}
    return tuple(len(cc.bases[n]) - ranks.get(n, 0) - ranks.get(n + 1, 0) for n in range(c.dim + 1))


@settings(max_examples=60, deadline=None)
@given(complexes(max_vertices=7))
def test_betti_matches_sympy(c):
    assert betti(c) == _sympy_betti(c)


@settings(deadline=None)
@given(complexes())
def test_euler_poincare(c):
    assert euler_homological(c) == euler_combinatorial(c)


def test_relative_homology():
    disk = B.cone_disk(4)
    assert betti(disk, B.cycle(4)) == (0, 0, 1)
    assert betti(B.interval(), B.point(0)) == (0, 0)
    assert betti(B.interval(), B.point(0).union(B.point(1))) == (0, 1)
    assert euler_homological(disk, B.cycle(4)) == euler_combinatorial(disk) - 0


def test_relative_requires_subcomplex():
    with pytest.raises(NotASubcomplex):
        relative_chain_complex(B.interval(), B.point(7))


def test_euler_relative_named():
    m = marked(B.path(3), ("A", "in", B.point(0)), ("B", "out", B.point(2)))
    assert euler_relative(m) == 1
    assert euler_relative(m, ["A"]) == 0
    assert euler_relative(m, ["A", "B"]) == -1
