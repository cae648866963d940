"""The 0+1 dimensional TQFT over the rationals.

A positively oriented point gets ``Q^n``, a negative one its dual, and
disjoint unions get tensor products with the left factor most significant
in the basis order. Bending the interval gives ``cup`` and ``cap``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotSquare
from .linalg import rank


@dataclass(frozen=True)
class ExactVectorSpace:
    dimension: int
    signs: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.dimension < 0:
            raise ValueError("dimension must be non-negative")

    def dual(self) -> ExactVectorSpace:
        return ExactVectorSpace(self.dimension, tuple("-" if s == "+" else "+" for s in self.signs))


SignedPointConfig = Sequence[str]


def space_of(config: SignedPointConfig, n: int) -> ExactVectorSpace:
    """State space of a disjoint union of signed points, each carrying ``Q^n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    signs = tuple(config)
    for s in signs:
        if s not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {s!r}")
    return ExactVectorSpace(n ** len(signs), signs)


@dataclass(frozen=True)
class LinearMap:
    """Matrix of exact rationals, ``rows`` = codomain dimension."""

    entries: tuple[tuple[Fraction, ...], ...]
    domain: int
    codomain: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | Fraction]], domain: int | None = None) -> LinearMap:
        ents = tuple(tuple(Fraction(x) for x in r) for r in rows)
        dom = len(ents[0]) if ents else (domain or 0)
        if any(len(r) != dom for r in ents):
            raise ValueError("ragged matrix")
        return cls(ents, dom, len(ents))

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        """Composition ``self o other``."""
        if self.domain != other.codomain:
            raise ValueError(f"cannot compose {self.codomain}x{self.domain} with {other.codomain}x{other.domain}")
        cols = other.domain
        out = []
        for row in self.entries:
            acc = [Fraction(0)] * cols
            for k, x in enumerate(row):
                if x:
                    for j, y in enumerate(other.entries[k]):
                        if y:
                            acc[j] += x * y
            out.append(tuple(acc))
        return LinearMap(tuple(out), cols, self.codomain)

    def tensor(self, other: LinearMap) -> LinearMap:
        """Kronecker product, left factor most significant."""
        rows = []
        for r1 in self.entries:
            for r2 in other.entries:
                rows.append(tuple(a * b for a in r1 for b in r2))
        return LinearMap(tuple(rows), self.domain * other.domain, self.codomain * other.codomain)

    def __call__(self, vector: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
        if len(vector) != self.domain:
            raise ValueError("vector length does not match the domain")
        return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self.entries)

    @property
    def is_square(self) -> bool:
        return self.domain == self.codomain

    def is_identity(self) -> bool:
        return self.is_square and all(x == (i == j) for i, row in enumerate(self.entries) for j, x in enumerate(row))

    def rank(self) -> int:
        return rank(self.entries)

    def __str__(self) -> str:
        return "\n".join("[" + " ".join(str(x) for x in row) + "]" for row in self.entries)


def cup(n: int) -> LinearMap:
    """``1 -> sum_i e_i (x) e_i*`` as an n^2 x 1 matrix."""
    return LinearMap.from_rows([[int(k % (n + 1) == 0)] for k in range(n * n)])


def cap(n: int) -> LinearMap:
    """``e_i (x) e_j* -> delta_ij`` as a 1 x n^2 matrix."""
    return LinearMap.from_rows([[int(k % (n + 1) == 0) for k in range(n * n)]])


def circle_invariant(n: int) -> Fraction:
    (value,), = (cap(n) @ cup(n)).entries
    return value


def trace_closure(z: LinearMap) -> Fraction:
    """Close an endomorphism into a loop: its trace."""
    if not z.is_square:
        raise NotSquare(f"{z.codomain}x{z.domain} map has no trace")
    return sum((z.entries[i][i] for i in range(z.domain)), Fraction(0))


def snake(n: int) -> LinearMap:
    """Zig-zag ``(cap (x) id) o (id (x) cup)`` on ``Q^n``.

    The pairing acts on the first two factors of ``V* (x) V (x) V*``; its
    matrix coincides with ``cap(n)`` because the evaluation is symmetric in
    the chosen bases.
    """
    ident = LinearMap.identity(n)
    return cap(n).tensor(ident) @ ident.tensor(cup(n))


def is_projection(z: LinearMap) -> bool:
    return z.is_square and z @ z == z


def is_surjective(z: LinearMap) -> bool:
    return z.rank() == z.codomain


def interval_map(z: LinearMap) -> LinearMap:
    """Accept a candidate interval map: it must be idempotent and onto.
    Such a map is always the identity; a ValueError reports which condition fails."""
    if not is_projection(z):
        raise ValueError("interval map must satisfy Z o Z = Z")
    if not is_surjective(z):
        raise ValueError("interval map must be surjective")
    return z


def random_idempotent(n: int, r: int, rng: random.Random, bound: int = 5) -> LinearMap:
    """``P D P^-1`` with D = diag(1^r, 0^(n-r)) and a random invertible rational P."""
    while True:
        p = [[Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        if rank(p) == n:
            break
    p_inv = _inverse(p)
    d = [[Fraction(int(i == j and i < r)) for j in range(n)] for i in range(n)]
    P, D, Pi = (LinearMap.from_rows(m) for m in (p, d, p_inv))
    return P @ D @ Pi


def _inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]
