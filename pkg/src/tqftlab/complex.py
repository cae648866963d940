"""Finite abstract simplicial complexes and marked (bounded) complexes."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import InvalidComplex

Simplex = tuple[int, ...]


def _faces(s: Simplex) -> Iterable[Simplex]:
    """All non-empty proper faces of ``s``."""
    for k in range(1, len(s)):
        yield from combinations(s, k)


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: frozenset[int] = frozenset()
    simplices: frozenset[Simplex] = frozenset()

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]], *, closure: bool = False,
                       vertices: Iterable[int] | None = None) -> SimplicialComplex:
        """Build from vertex lists. With ``closure`` the faces are generated,
        otherwise the set is taken as given (and may fail :func:`validate`)."""
        simps = {tuple(sorted(set(s))) for s in simplices}
        simps.discard(())
        if closure:
            for s in list(simps):
                simps.update(_faces(s))
        if vertices is None:
            vs = {v for s in simps for v in s}
        else:
            vs = set(vertices)
        return cls(frozenset(vs), frozenset(simps))

    @classmethod
    def empty(cls) -> SimplicialComplex:
        return cls()

    @property
    def dim(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    def __len__(self) -> int:
        return len(self.simplices)

    def __bool__(self) -> bool:
        return bool(self.simplices) or bool(self.vertices)

    def by_dim(self) -> dict[int, list[Simplex]]:
        """Simplices grouped by dimension, each list sorted lexicographically."""
        out: dict[int, list[Simplex]] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        for lst in out.values():
            lst.sort()
        return dict(sorted(out.items()))

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return counts

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return self.simplices <= other.simplices and self.vertices <= other.vertices

    def union(self, *others: SimplicialComplex) -> SimplicialComplex:
        vs, ss = set(self.vertices), set(self.simplices)
        for o in others:
            vs |= o.vertices
            ss |= o.simplices
        return SimplicialComplex(frozenset(vs), frozenset(ss))

    def relabel(self, mapping: Mapping[int, int]) -> SimplicialComplex:
        """Apply an injective vertex relabelling."""
        return SimplicialComplex(
            frozenset(mapping[v] for v in self.vertices),
            frozenset(tuple(sorted(mapping[v] for v in s)) for s in self.simplices),
        )

    def shift(self, offset: int) -> SimplicialComplex:
        return self.relabel({v: v + offset for v in self.vertices})

    def restrict(self, vertices: Iterable[int]) -> SimplicialComplex:
        """Full subcomplex spanned by ``vertices``."""
        vs = frozenset(vertices) & self.vertices
        return SimplicialComplex(vs, frozenset(s for s in self.simplices if vs.issuperset(s)))


@dataclass(frozen=True)
class Violation:
    """First invariant failure found by :func:`validate`."""

    kind: str
    simplex: Simplex | None
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


def validate(c: SimplicialComplex) -> Violation | None:
    """Return ``None`` if ``c`` is a well-formed complex, else the first problem.

    Simplices are scanned in (dimension, lexicographic) order so the report
    is deterministic.
    """
    for s in sorted(c.simplices, key=lambda s: (len(s), s)):
        if not s or list(s) != sorted(set(s)):
            return Violation("malformed-simplex", s, f"{s} is not a sorted tuple of distinct vertices")
        for v in s:
            if v not in c.vertices:
                return Violation("unknown-vertex", s, f"vertex {v} of {s} is not in the vertex set")
        missing = [f for f in _faces(s) if f not in c.simplices]
        if missing:
            shown = ", ".join(str(list(f)) for f in missing)
            return Violation("missing-face", s, f"faces of {list(s)} missing: {shown}")
    for v in sorted(c.vertices):
        if (v,) not in c.simplices:
            return Violation("missing-vertex-simplex", (v,), f"vertex {v} has no 0-simplex")
    return None


def euler_combinatorial(c: SimplicialComplex) -> int:
    return sum((-1) ** (len(s) - 1) for s in c.simplices)


def connected_components(c: SimplicialComplex) -> list[SimplicialComplex]:
    """Components ordered by smallest vertex id."""
    parent = {v: v for v in c.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s in c.simplices:
        root = find(s[0])
        for v in s[1:]:
            r = find(v)
            if r != root:
                parent[r] = root
    groups: dict[int, set[int]] = {}
    for v in c.vertices:
        groups.setdefault(find(v), set()).add(v)
    comps = [c.restrict(vs) for vs in groups.values()]
    comps.sort(key=lambda k: min(k.vertices))
    return comps


class Label(str, enum.Enum):
    IN = "in"
    OUT = "out"

    def flipped(self) -> Label:
        return Label.OUT if self is Label.IN else Label.IN


@dataclass(frozen=True)
class BoundaryComponent:
    name: str
    label: Label
    subcomplex: SimplicialComplex


@dataclass(frozen=True)
class MarkedComplex:
    """A complex together with named, labelled, vertex-disjoint boundary pieces."""

    complex: SimplicialComplex = field(default_factory=SimplicialComplex)
    boundary: tuple[BoundaryComponent, ...] = ()

    def component(self, name: str) -> BoundaryComponent:
        for b in self.boundary:
            if b.name == name:
                return b
        raise KeyError(name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.boundary)

    def union_of(self, names: Iterable[str]) -> SimplicialComplex:
        return SimplicialComplex().union(*(self.component(n).subcomplex for n in names))

    def labelled(self, label: Label) -> SimplicialComplex:
        return SimplicialComplex().union(*(b.subcomplex for b in self.boundary if b.label is label))

    @property
    def boundary_complex(self) -> SimplicialComplex:
        return SimplicialComplex().union(*(b.subcomplex for b in self.boundary))


def validate_marked(m: MarkedComplex) -> Violation | None:
    bad = validate(m.complex)
    if bad is not None:
        return bad
    seen: dict[int, str] = {}
    names: set[str] = set()
    for b in m.boundary:
        if b.name in names:
            return Violation("duplicate-name", None, f"boundary name {b.name!r} is used twice")
        names.add(b.name)
        bad = validate(b.subcomplex)
        if bad is not None:
            return Violation(bad.kind, bad.simplex, f"in boundary {b.name!r}: {bad.detail}")
        if not b.subcomplex.is_subcomplex_of(m.complex):
            extra = sorted(b.subcomplex.simplices - m.complex.simplices)
            return Violation("not-a-subcomplex", extra[0] if extra else None,
                             f"boundary {b.name!r} is not a subcomplex")
        for v in b.subcomplex.vertices:
            if v in seen:
                return Violation("overlapping-boundary", (v,),
                                 f"boundary {seen[v]!r} and {b.name!r} share vertex {v}")
            seen[v] = b.name
    return None


def marked(c: SimplicialComplex, *components: tuple[str, Label | str, SimplicialComplex]) -> MarkedComplex:
    """Convenience constructor: ``marked(c, ("A", "in", sub), ...)``."""
    return MarkedComplex(c, tuple(BoundaryComponent(n, Label(l), s) for n, l, s in components))


def as_marked(x: MarkedComplex | SimplicialComplex) -> MarkedComplex:
    return x if isinstance(x, MarkedComplex) else MarkedComplex(x)


def _offset_for(a: SimplicialComplex, b: SimplicialComplex) -> int:
    if not a.vertices or not b.vertices:
        return 0
    # b's ids are moved strictly above a's; negative ids in b are lifted too
    return max(a.vertices) + 1 - min(0, min(b.vertices))


def disjoint_union(a: MarkedComplex | SimplicialComplex,
                   b: MarkedComplex | SimplicialComplex) -> MarkedComplex:
    """Monoidal product. ``b`` is shifted past ``a``'s largest vertex id;
    colliding boundary names from ``b`` get primes appended."""
    a, b = as_marked(a), as_marked(b)
    off = _offset_for(a.complex, b.complex)
    taken = set(a.names)
    extra = []
    for comp in b.boundary:
        name = comp.name
        while name in taken:
            name += "'"
        taken.add(name)
        extra.append(BoundaryComponent(name, comp.label, comp.subcomplex.shift(off)))
    return MarkedComplex(a.complex.union(b.complex.shift(off)), a.boundary + tuple(extra))


def flip_labels(m: MarkedComplex) -> MarkedComplex:
    return MarkedComplex(m.complex, tuple(BoundaryComponent(b.name, b.label.flipped(), b.subcomplex)
                                          for b in m.boundary))


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: Mapping[int, int]

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    def image(self, s: Simplex) -> Simplex:
        return tuple(sorted({self.vertex_map[v] for v in s}))

    def image_complex(self, c: SimplicialComplex) -> SimplicialComplex:
        return SimplicialComplex(frozenset(self.vertex_map[v] for v in c.vertices),
                                 frozenset(self.image(s) for s in c.simplices))

    def is_simplicial(self) -> bool:
        if set(self.vertex_map) != set(self.source.vertices):
            return False
        return all(self.image(s) in self.target.simplices for s in self.source.simplices)

    def is_isomorphism(self) -> bool:
        if not self.is_simplicial():
            return False
        values = set(self.vertex_map.values())
        if len(values) != len(self.vertex_map) or values != set(self.target.vertices):
            return False
        return len(self.source.simplices) == len(self.target.simplices)

    def then(self, other: SimplicialMap) -> SimplicialMap:
        """``other`` after ``self``."""
        return SimplicialMap(self.source, other.target,
                             {v: other.vertex_map[w] for v, w in self.vertex_map.items()})

    def inverse(self) -> SimplicialMap:
        return SimplicialMap(self.target, self.source, {w: v for v, w in self.vertex_map.items()})


def identity_map(c: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(c, c, {v: v for v in c.vertices})


def require_valid(c: SimplicialComplex | MarkedComplex) -> None:
    bad = validate_marked(c) if isinstance(c, MarkedComplex) else validate(c)
    if bad is not None:
        raise InvalidComplex(str(bad))
