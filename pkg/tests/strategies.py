"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from tqftlab.complex import SimplicialComplex


@st.composite
def complexes(draw, max_vertices: int = 8, max_dim: int = 3, min_facets: int = 0):
    n = draw(st.integers(1, max_vertices))
    facets = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=max_dim + 1),
                           min_size=min_facets, max_size=6))
    return SimplicialComplex.from_simplices([sorted(f) for f in facets], closure=True)


@st.composite
def int_matrices(draw, max_rows: int = 6, max_cols: int = 6, bound: int = 4):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    return draw(st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r))
