import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tqftlab.errors import NotSquare
from tqftlab.vect import (
    LinearMap, cap, circle_invariant, cup, interval_map, is_projection, random_idempotent, snake,
    space_of, trace_closure,
)


@pytest.mark.parametrize("n", range(1, 9))
def test_circle_is_dimension(n):
    assert circle_invariant(n) == n


@pytest.mark.parametrize("n", range(1, 9))
def test_snake_is_identity(n):
    assert snake(n).is_identity()


def test_cup_cap_shapes():
    assert (cup(3).domain, cup(3).codomain) == (1, 9)
    assert (cap(3).domain, cap(3).codomain) == (9, 1)


def test_trace_closure():
    assert trace_closure(LinearMap.identity(64)) == 64
    m = LinearMap.from_rows([[1, 2], [3, Fraction(1, 2)]])
    assert trace_closure(m) == Fraction(3, 2)
    with pytest.raises(NotSquare):
        trace_closure(cup(2))


def test_space_of():
    assert space_of(["+", "-", "+"], 2).dimension == 8
    assert space_of([], 5).dimension == 1
    assert space_of(["+"], 3).dual().signs == ("-",)
    with pytest.raises(ValueError):
        space_of(["x"], 2)


def test_tensor_is_kronecker():
    a = LinearMap.from_rows([[1, 2], [3, 4]])
    b = LinearMap.identity(2)
    t = a.tensor(b)
    assert t.entries[0] == (1, 0, 2, 0)
    assert t.entries[3] == (0, 3, 0, 4)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_idempotent_surjective_is_identity(n, seed):
    rng = random.Random(seed)
    r = rng.randint(0, n)
    z = random_idempotent(n, r, rng)
    assert is_projection(z)
    assert z.rank() == r
    if r == n:
        assert interval_map(z).is_identity()
    else:
        with pytest.raises(ValueError, match="surjective"):
            interval_map(z)


def test_interval_map_rejects_non_idempotent():
    with pytest.raises(ValueError, match="Z o Z"):
        interval_map(LinearMap.from_rows([[2]]))


def test_trace_of_tensor_multiplies():
    a = LinearMap.from_rows([[1, 2], [0, 3]])
    b = LinearMap.from_rows([[Fraction(1, 2), 0], [5, 1]])
    assert trace_closure(a.tensor(b)) == trace_closure(a) * trace_closure(b)
