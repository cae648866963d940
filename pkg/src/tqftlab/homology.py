"""Simplicial chain complexes and rational Betti numbers (absolute and relative)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complex import MarkedComplex, Simplex, SimplicialComplex
from .errors import NotASubcomplex
from .linalg import sparse_rank

BettiVector = tuple[int, ...]


@dataclass(frozen=True)
class ChainComplex:
    """``bases[n]`` lists the n-simplices; ``boundary[n]`` is the dense
    integer matrix of d_n (rows: (n-1)-simplices, columns: n-simplices).
    ``boundary[0]`` has no rows."""

    bases: tuple[tuple[Simplex, ...], ...]
    boundary: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def columns(self, n: int) -> list[dict[int, int]]:
        """d_n as sparse columns ``{row: entry}``."""
        if n <= 0 or n > self.top:
            return [{} for _ in self.bases[n]] if 0 <= n <= self.top else []
        m = self.boundary[n]
        return [{i: row[j] for i, row in enumerate(m) if row[j]} for j in range(len(self.bases[n]))]


def _chain_complex(c: SimplicialComplex, drop: frozenset[Simplex] = frozenset()) -> ChainComplex:
    groups = c.by_dim()
    top = max(groups, default=-1)
    bases = tuple(tuple(s for s in groups.get(n, []) if s not in drop) for n in range(top + 1))
    index = [{s: i for i, s in enumerate(b)} for b in bases]
    mats: list[tuple[tuple[int, ...], ...]] = [()]
    for n in range(1, top + 1):
        rows = [[0] * len(bases[n]) for _ in bases[n - 1]]
        for j, s in enumerate(bases[n]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                r = index[n - 1].get(face)
                if r is not None:
                    rows[r][j] = -1 if i % 2 else 1
        mats.append(tuple(tuple(r) for r in rows))
    return ChainComplex(bases, tuple(mats))


def boundary_matrices(c: SimplicialComplex) -> ChainComplex:
    """Boundary operators with sign (-1)^i on the face omitting the i-th vertex."""
    return _chain_complex(c)


def relative_chain_complex(c: SimplicialComplex, rel: SimplicialComplex) -> ChainComplex:
    """Quotient complex C(c)/C(rel): rel's simplices are deleted from every basis."""
    if not rel.is_subcomplex_of(c):
        extra = sorted(rel.simplices - c.simplices) or sorted(rel.vertices - c.vertices)
        raise NotASubcomplex(f"{list(extra[0]) if extra else '?'} is not in the ambient complex")
    return _chain_complex(c, rel.simplices)


def _rank(cc: ChainComplex, n: int) -> int:
    if n <= 0 or n > cc.top:
        return 0
    # columns of d_n are the natural sparse rows of its transpose; same rank
    return sparse_rank(cc.columns(n))


def betti_of_chain_complex(cc: ChainComplex) -> BettiVector:
    ranks = [_rank(cc, n) for n in range(cc.top + 2)]
    return tuple(len(cc.bases[n]) - ranks[n] - ranks[n + 1] for n in range(cc.top + 1))


def betti(c: SimplicialComplex, rel: SimplicialComplex | None = None) -> BettiVector:
    """Rational Betti numbers b_0..b_dim of ``c`` or of the pair ``(c, rel)``."""
    cc = boundary_matrices(c) if rel is None else relative_chain_complex(c, rel)
    return betti_of_chain_complex(cc)


def alternating_sum(b: Iterable[int]) -> int:
    return sum((-1) ** n * x for n, x in enumerate(b))


def euler_homological(c: SimplicialComplex, rel: SimplicialComplex | None = None) -> int:
    return alternating_sum(betti(c, rel))


def euler_relative(m: MarkedComplex, rel: Iterable[str] = ()) -> int:
    """chi(M, union of the named boundary components) via relative homology."""
    names = list(rel)
    sub = m.union_of(names) if names else None
    return euler_homological(m.complex, sub)
