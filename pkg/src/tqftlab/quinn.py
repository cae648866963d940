"""Euler-characteristic TQFTs with one-dimensional state spaces.

A theory is fixed by four rational constants. A marked complex ``M`` gets
the formal power ``u**(c1*chi(M) + c2*chi(M_in) + c3*chi(M_out))`` and
gluing along ``S`` multiplies by ``u**(c4*chi(S))``. The assignment is a
functor exactly when ``c1 + c2 + c3 + c4 == 0``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complex import Label, MarkedComplex, SimplicialComplex, euler_combinatorial
from .gluing import GluingMorphism, MarkedIsomorphism

Rational = Fraction | int | str


@dataclass(frozen=True)
class EulerTheoryParams:
    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction

    def __init__(self, c1: Rational, c2: Rational, c3: Rational, c4: Rational) -> None:
        for name, v in zip(("c1", "c2", "c3", "c4"), (c1, c2, c3, c4)):
            object.__setattr__(self, name, Fraction(v))

    def __str__(self) -> str:
        return f"({self.c1}, {self.c2}, {self.c3}, {self.c4})"

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.c1, self.c2, self.c3, self.c4)


PRESETS = {
    "euler": EulerTheoryParams(1, -1, 0, 0),
    "skew": EulerTheoryParams(1, 0, -1, 0),
    "balanced": EulerTheoryParams(1, Fraction(-1, 2), Fraction(-1, 2), 0),
}


@dataclass(frozen=True, order=True)
class ZValue:
    """The formal power ``u**exponent``; ``u`` is never evaluated."""

    exponent: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", Fraction(self.exponent))

    def __mul__(self, other: ZValue) -> ZValue:
        return ZValue(self.exponent + other.exponent)

    def __str__(self) -> str:
        return f"u^({self.exponent})"


UNIT = ZValue()


def z_value(m: MarkedComplex, p: EulerTheoryParams) -> ZValue:
    return ZValue(p.c1 * euler_combinatorial(m.complex)
                  + p.c2 * euler_combinatorial(m.labelled(Label.IN))
                  + p.c3 * euler_combinatorial(m.labelled(Label.OUT)))


def evaluation_exponent(sigma: SimplicialComplex, p: EulerTheoryParams) -> Fraction:
    return p.c4 * euler_combinatorial(sigma)


def apply_gluing(g: GluingMorphism | MarkedIsomorphism, z: ZValue, p: EulerTheoryParams) -> ZValue:
    """Image of ``z`` under the linear map assigned to ``g``.

    Boundary isomorphisms act trivially, so only the evaluation on the
    glued-onto piece contributes; isomorphisms act as the identity.
    """
    if isinstance(g, MarkedIsomorphism):
        return z
    return z * ZValue(evaluation_exponent(g.spec.glued_onto, p))


def check_constraint(p: EulerTheoryParams) -> bool:
    return p.c1 + p.c2 + p.c3 + p.c4 == 0


@dataclass(frozen=True)
class Counterexample:
    index: int
    morphism: GluingMorphism | MarkedIsomorphism
    lhs: ZValue
    rhs: ZValue

    def __str__(self) -> str:
        return f"morphism #{self.index}: Z(g)(Z(source)) = {self.lhs} but Z(target) = {self.rhs}"


def verify_functoriality(corpus: Sequence[GluingMorphism | MarkedIsomorphism],
                         p: EulerTheoryParams) -> Counterexample | None:
    """None if every morphism satisfies Z(g)(Z(source)) == Z(target), else
    the first offender in corpus order."""
    for i, g in enumerate(corpus):
        lhs = apply_gluing(g, z_value(g.source, p), p)
        rhs = z_value(g.target, p)
        if lhs != rhs:
            return Counterexample(i, g, lhs, rhs)
    return None


def random_params(rng: random.Random, *, satisfying: bool, bound: int = 9) -> EulerTheoryParams:
    """Random rational constants, either on or (strictly) off the constraint hyperplane."""
    def q() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    c1, c2, c3 = q(), q(), q()
    c4 = -(c1 + c2 + c3)
    if not satisfying:
        shift = q()
        while shift == 0:
            shift = q()
        c4 += shift
    return EulerTheoryParams(c1, c2, c3, c4)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer; floats are rejected."""
    if any(ch in text for ch in ".eE"):
        raise ValueError(f"expected an exact rational like '-1/2', got {text!r}")
    return Fraction(text)
