import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tqftlab import builders as B
from tqftlab import corpus
from tqftlab.complex import disjoint_union, marked
from tqftlab.gluing import GluingSpec, glue, identity
from tqftlab.quinn import (
    PRESETS, UNIT, EulerTheoryParams, ZValue, apply_gluing, check_constraint, parse_rational,
    random_params, verify_functoriality, z_value,
)

GLUINGS = corpus.gluings()
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))


def test_presets_satisfy_constraint():
    assert PRESETS["euler"].as_tuple() == (1, -1, 0, 0)
    assert PRESETS["balanced"].as_tuple() == (1, Fraction(-1, 2), Fraction(-1, 2), 0)
    assert all(check_constraint(p) for p in PRESETS.values())


def test_zvalue_arithmetic_and_format():
    a, b = ZValue(Fraction(1, 2)), ZValue(Fraction(-3, 2))
    assert (a * b).exponent == -1
    assert str(a * b) == "u^(-1)"
    assert str(ZValue(Fraction(-1, 2))) == "u^(-1/2)"
    assert a * UNIT == a


def test_z_value_of_marked_interval():
    m = marked(B.interval(), ("A", "in", B.point(0)), ("B", "out", B.point(1)))
    p = EulerTheoryParams(2, 3, 5, 7)
    assert z_value(m, p).exponent == 2 + 3 + 5


def test_empty_complex_is_unit():
    assert z_value(B.marked_path(1).__class__(), PRESETS["skew"]) == UNIT


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_functorial(name):
    assert verify_functoriality(GLUINGS, PRESETS[name]) is None


@given(rationals, rationals, rationals)
def test_constraint_implies_functorial(c1, c2, c3):
    p = EulerTheoryParams(c1, c2, c3, -(c1 + c2 + c3))
    assert verify_functoriality(GLUINGS, p) is None


@given(rationals, rationals, rationals, rationals)
def test_violation_is_detected(c1, c2, c3, c4):
    p = EulerTheoryParams(c1, c2, c3, c4)
    # path self-gluing has chi(Sigma_2) = 1, so any failure of the constraint shows up
    assert (verify_functoriality(GLUINGS, p) is None) == check_constraint(p)


def test_counterexample_is_first_in_order():
    p = EulerTheoryParams(1, 0, 0, 0)
    cx = verify_functoriality(GLUINGS, p)
    assert cx is not None
    assert all(verify_functoriality([g], p) is None for g in GLUINGS[:cx.index])
    assert cx.lhs != cx.rhs


def test_isomorphism_acts_trivially():
    m = B.marked_annulus(3, 2)
    z = z_value(m, PRESETS["skew"])
    assert apply_gluing(identity(m), z, PRESETS["skew"]) == z


def test_apply_gluing_weight():
    g = glue(GluingSpec(B.marked_path(4), ("L",), ("R",), {0: 3}))
    p = EulerTheoryParams(0, 0, 0, Fraction(5, 3))
    assert apply_gluing(g, UNIT, p).exponent == Fraction(5, 3)


def test_multiplicative_under_disjoint_union():
    a, b = B.marked_annulus(3, 2), B.marked_path(3)
    for p in PRESETS.values():
        assert z_value(disjoint_union(a, b), p) == z_value(a, p) * z_value(b, p)


def test_random_params():
    rng = random.Random(5)
    assert all(check_constraint(random_params(rng, satisfying=True)) for _ in range(50))
    assert not any(check_constraint(random_params(rng, satisfying=False)) for _ in range(50))


@pytest.mark.parametrize("text, value", [("-1/2", Fraction(-1, 2)), ("3", Fraction(3)), ("4/6", Fraction(2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "abc"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)
