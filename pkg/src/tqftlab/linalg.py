"""Exact matrix rank over the rationals.

Rows are reduced fraction-free: every intermediate entry stays an integer
and each reduced row is divided by the gcd of its entries, so coefficients
stay small on the sparse 0/+-1 matrices produced by simplicial boundaries.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Number = int | Fraction


def _integer_row(row: Iterable[Number]) -> dict[int, int]:
    entries = {j: x for j, x in enumerate(row) if x}
    if not entries:
        return {}
    denom = 1
    for x in entries.values():
        if isinstance(x, Fraction):
            denom = lcm(denom, x.denominator)
    return {j: int(x * denom) for j, x in entries.items()}


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            return row
    return {j: x // g for j, x in row.items()}


class RowEchelon:
    """Incremental fraction-free echelon basis of a row space.

    Pivots are keyed by leading column; adding a row reduces it against
    the existing pivots and keeps it only if something survives.
    """

    __slots__ = ("pivots",)

    def __init__(self) -> None:
        self.pivots: dict[int, dict[int, int]] = {}

    def add(self, row: dict[int, int]) -> bool:
        row = dict(row)
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                self.pivots[lead] = _primitive(row)
                return True
            a, b = pivot[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {j: a * x for j, x in row.items()}
            for j, x in pivot.items():
                v = new.get(j, 0) - b * x
                if v:
                    new[j] = v
                else:
                    new.pop(j, None)
            row = _primitive(new) if new else new
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(matrix: Sequence[Sequence[Number]]) -> int:
    """Rank of an integer or rational matrix, computed exactly."""
    echelon = RowEchelon()
    for row in matrix:
        r = _integer_row(row)
        if r:
            echelon.add(r)
    return echelon.rank


def sparse_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank of a matrix given as sparse integer rows ``{column: value}``."""
    echelon = RowEchelon()
    for row in rows:
        if row:
            echelon.add(row)
    return echelon.rank


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> list[list[Number]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} @ {len(b)}x{len(b[0])}")
    cols = len(b[0]) if b else 0
    out: list[list[Number]] = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out
