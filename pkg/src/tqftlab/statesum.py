"""Finite-group state sums on closed triangulated surfaces.

Surfaces are Delta-complex style: an edge is a (tail, head) pair that may be
a loop, and each triangle lists three directed edge references
``(edge, forward)`` whose vertices chain head to tail. A colouring gives
every edge a group element; traversing an edge backwards uses the inverse.
A colouring is admissible when each triangle's ordered product is the
identity, and ``Z = #admissible / |G| ** #vertices``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidSurface, NotAGroup, NotFlippable

EdgeRef = tuple[int, bool]
Triangle = tuple[EdgeRef, EdgeRef, EdgeRef]


@dataclass(frozen=True)
class FiniteGroup:
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    name: str = "G"

    @property
    def order(self) -> int:
        return len(self.mul)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def product(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = self.mul[acc][x]
        return acc

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.order) for b in range(a))


def group_from_table(mul: Sequence[Sequence[int]], name: str = "G") -> FiniteGroup:
    """Validate a Cayley table (closure, associativity, identity, inverses)."""
    n = len(mul)
    if n == 0:
        raise NotAGroup("empty table")
    table = tuple(tuple(int(x) for x in row) for row in mul)
    for a, row in enumerate(table):
        if len(row) != n:
            raise NotAGroup(f"closure: row {a} has {len(row)} entries, expected {n}")
        for b, x in enumerate(row):
            if not 0 <= x < n:
                raise NotAGroup(f"closure: {a}*{b} = {x} is not an element")
    for a in range(n):
        ra = table[a]
        for b in range(n):
            rab = table[ra[b]]
            rb = table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise NotAGroup(f"associativity: ({a}*{b})*{c} = {rab[c]} but {a}*({b}*{c}) = {ra[rb[c]]}")
    ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ids:
        raise NotAGroup("identity: no two-sided identity element")
    e = ids[0]
    inv = []
    for a in range(n):
        cands = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
        if not cands:
            raise NotAGroup(f"inverses: element {a} has no two-sided inverse")
        inv.append(cands[0])
    return FiniteGroup(table, e, tuple(inv), name)


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise NotAGroup(f"cyclic group needs n >= 1, got {n}")
    return group_from_table([[(a + b) % n for b in range(n)] for a in range(n)], f"Z/{n}")


def symmetric_group(k: int) -> FiniteGroup:
    """Permutations of range(k) in lexicographic order; (p*q)(i) = p(q(i))."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    return group_from_table(mul, f"S{k}")


def make_group(kind: str, n: int | None = None, mul: Sequence[Sequence[int]] | None = None) -> FiniteGroup:
    """``make_group("cyclic", 3)``, ``make_group("symmetric", 3)`` or ``make_group("table", mul=...)``."""
    if kind == "cyclic":
        return cyclic_group(int(n))
    if kind == "symmetric":
        return symmetric_group(int(n))
    if kind == "table":
        if mul is None:
            raise NotAGroup("table group needs a multiplication table")
        return group_from_table(mul)
    raise ValueError(f"unknown group kind {kind!r}")


@dataclass(frozen=True)
class Surface2D:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    triangles: tuple[Triangle, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        object.__setattr__(self, "triangles", tuple(
            tuple((int(e), bool(d)) for e, d in t) for t in self.triangles))
        self._validate()

    def _validate(self) -> None:
        if self.vertex_count < 1:
            raise InvalidSurface("a surface needs at least one vertex")
        for i, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise InvalidSurface(f"edge {i} = ({a}, {b}) uses an unknown vertex")
        uses = [0] * len(self.edges)
        for t, tri in enumerate(self.triangles):
            if len(tri) != 3:
                raise InvalidSurface(f"triangle {t} has {len(tri)} sides")
            for e, _ in tri:
                if not 0 <= e < len(self.edges):
                    raise InvalidSurface(f"triangle {t} refers to unknown edge {e}")
                uses[e] += 1
            for k in range(3):
                if self.end(tri[k]) != self.start(tri[(k + 1) % 3]):
                    raise InvalidSurface(f"triangle {t}: side {k} ends at {self.end(tri[k])} "
                                         f"but side {(k + 1) % 3} starts at {self.start(tri[(k + 1) % 3])}")
        for e, u in enumerate(uses):
            if u != 2:
                raise InvalidSurface(f"edge {e} is used by {u} triangle sides, expected 2")
        seen = {v for a, b in self.edges for v in (a, b)}
        if len(seen) != self.vertex_count:
            raise InvalidSurface("some vertex lies on no edge")

    def start(self, ref: EdgeRef) -> int:
        a, b = self.edges[ref[0]]
        return a if ref[1] else b

    def end(self, ref: EdgeRef) -> int:
        a, b = self.edges[ref[0]]
        return b if ref[1] else a

    def corners(self, t: int) -> tuple[int, int, int]:
        return tuple(self.start(r) for r in self.triangles[t])

    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.edges) + len(self.triangles)


def _slot_value(g: FiniteGroup, color: int, forward: bool) -> int:
    return color if forward else g.inverse[color]


def triangle_product(g: FiniteGroup, tri: Triangle, coloring: Sequence[int], start: int = 0) -> int:
    """Ordered product around ``tri`` beginning at slot ``start``."""
    acc = g.identity
    for k in range(3):
        e, d = tri[(start + k) % 3]
        acc = g.mul[acc][_slot_value(g, coloring[e], d)]
    return acc


def is_admissible(s: Surface2D, g: FiniteGroup, coloring: Sequence[int]) -> bool:
    if len(coloring) != len(s.edges):
        raise ValueError(f"colouring has {len(coloring)} entries for {len(s.edges)} edges")
    return all(triangle_product(g, tri, coloring) == g.identity for tri in s.triangles)


# --- backtracking enumeration -------------------------------------------------------

_FORCE, _CHECK = 0, 1


def _edge_order(s: Surface2D) -> list[list[tuple]]:
    """Compile the search into segments ``[branch_edge, op, op, ...]``.

    The next branch edge is the free edge with the most incident triangles
    that already have an assigned side. After each branch every triangle
    with one free side left forces that side, and fully assigned triangles
    become checks.
    """
    n_edges = len(s.edges)
    tri_edges = [[e for e, _ in tri] for tri in s.triangles]
    incident: list[list[int]] = [[] for _ in range(n_edges)]
    for t, es in enumerate(tri_edges):
        for e in set(es):
            incident[e].append(t)
    assigned = [False] * n_edges
    done = [False] * len(s.triangles)
    segments: list[list[tuple]] = []

    def touched(t: int) -> bool:
        return any(assigned[e] for e in tri_edges[t])

    while not all(assigned):
        free = [e for e in range(n_edges) if not assigned[e]]
        branch = max(free, key=lambda e: (sum(touched(t) for t in incident[e]), -e))
        assigned[branch] = True
        seg: list[tuple] = [branch]
        queue = list(incident[branch])
        while queue:
            t = queue.pop(0)
            if done[t]:
                continue
            open_slots = [k for k, e in enumerate(tri_edges[t]) if not assigned[e]]
            if not open_slots:
                done[t] = True
                seg.append((_CHECK, t))
            elif len(open_slots) == 1:
                k = open_slots[0]
                e = tri_edges[t][k]
                assigned[e] = True
                done[t] = True
                seg.append((_FORCE, t, k))
                queue.extend(incident[e])
        segments.append(seg)
    return segments


def count_admissible(s: Surface2D, g: FiniteGroup) -> int:
    """Number of admissible colourings, by backtracking with propagation."""
    segments = _edge_order(s)
    mul, inv, one, order = g.mul, g.inverse, g.identity, g.order
    tris = s.triangles
    # per op: (kind, slots...) pre-resolved to edge indices and directions
    plans = []
    for seg in segments:
        ops = []
        for op in seg[1:]:
            tri = tris[op[1]]
            if op[0] == _CHECK:
                ops.append((_CHECK, tri[0][0], tri[0][1], tri[1][0], tri[1][1], tri[2][0], tri[2][1]))
            else:
                k = op[2]
                a, b = tri[(k + 1) % 3], tri[(k + 2) % 3]
                # g_k = (g_{k+1} g_{k+2})^-1 by cyclic invariance of the identity condition
                ops.append((_FORCE, tri[k][0], tri[k][1], a[0], a[1], b[0], b[1]))
        plans.append((seg[0], tuple(ops)))
    color = [0] * len(s.edges)
    n_seg = len(plans)

    def rec(i: int) -> int:
        if i == n_seg:
            return 1
        edge, ops = plans[i]
        total = 0
        for x in range(order):
            color[edge] = x
            ok = True
            for kind, e0, d0, e1, d1, e2, d2 in ops:
                v1 = color[e1] if d1 else inv[color[e1]]
                v2 = color[e2] if d2 else inv[color[e2]]
                if kind == _FORCE:
                    gk = inv[mul[v1][v2]]
                    color[e0] = gk if d0 else inv[gk]
                else:
                    v0 = color[e0] if d0 else inv[color[e0]]
                    if mul[mul[v0][v1]][v2] != one:
                        ok = False
                        break
            if ok:
                total += rec(i + 1)
        return total

    return rec(0) if s.edges else 1


def partition_function(s: Surface2D, g: FiniteGroup) -> Fraction:
    return Fraction(count_admissible(s, g), g.order ** s.vertex_count)


def count_admissible_naive(s: Surface2D, g: FiniteGroup, chunk: int = 1 << 20) -> int:
    """Full enumeration of all ``|G| ** #edges`` colourings (vectorised)."""
    n_edges, order = len(s.edges), g.order
    total = order ** n_edges
    mul = np.asarray(g.mul, dtype=np.int64)
    inv = np.asarray(g.inverse, dtype=np.int64)
    count = 0
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        cols = np.empty((n_edges, idx.size), dtype=np.int64)
        rest = idx
        for e in range(n_edges):
            cols[e] = rest % order
            rest = rest // order
        ok = np.ones(idx.size, dtype=bool)
        for tri in s.triangles:
            acc = np.full(idx.size, g.identity, dtype=np.int64)
            for e, d in tri:
                acc = mul[acc, cols[e] if d else inv[cols[e]]]
            ok &= acc == g.identity
        count += int(ok.sum())
    return count


def partition_function_naive(s: Surface2D, g: FiniteGroup) -> Fraction:
    return Fraction(count_admissible_naive(s, g), g.order ** s.vertex_count)


# --- Pachner moves ---------------------------------------------------------------------

def pachner_13(s: Surface2D, t: int) -> Surface2D:
    """Replace triangle ``t`` by three triangles around a new vertex.

    The new vertex gets id ``vertex_count``; new edges run from each corner
    to it. The first new triangle keeps index ``t``, the others are appended.
    """
    if not 0 <= t < len(s.triangles):
        raise IndexError(f"no triangle {t}")
    tri = s.triangles[t]
    w = s.vertex_count
    corners = s.corners(t)
    base = len(s.edges)
    edges = s.edges + tuple((corners[k], w) for k in range(3))
    new = [((tri[k][0], tri[k][1]), (base + (k + 1) % 3, True), (base + k, False)) for k in range(3)]
    triangles = list(s.triangles)
    triangles[t] = new[0]
    triangles.extend(new[1:])
    return Surface2D(w + 1, edges, tuple(triangles))


def _reversed(tri: Triangle) -> Triangle:
    return tuple((e, not d) for e, d in reversed(tri))


def _rotate_to(tri: Triangle, e: int) -> Triangle:
    k = next(i for i, (x, _) in enumerate(tri) if x == e)
    return tri[k:] + tri[:k]


def flippable(s: Surface2D, e: int) -> bool:
    try:
        _flip_sides(s, e)
    except NotFlippable:
        return False
    return True


def _flip_sides(s: Surface2D, e: int) -> tuple[int, int, Triangle, Triangle]:
    if not 0 <= e < len(s.edges):
        raise IndexError(f"no edge {e}")
    slots = [t for t, tri in enumerate(s.triangles) for x, _ in tri if x == e]
    t1, t2 = slots
    if t1 == t2:
        raise NotFlippable(f"edge {e} appears twice in triangle {t1}")
    a = _rotate_to(s.triangles[t1], e)
    b = _rotate_to(s.triangles[t2], e)
    if b[0][1] == a[0][1]:
        b = _rotate_to(_reversed(b), e)
    shared = {x for x, _ in a} & {x for x, _ in b}
    if len(shared) > 1:
        raise NotFlippable(f"triangles {t1} and {t2} share edges {sorted(shared)}")
    return t1, t2, a, b


def pachner_22(s: Surface2D, e: int) -> Surface2D:
    """Swap the diagonal ``e`` of the quadrilateral formed by its two triangles.

    With ``a = [e: p->q, x1: q->r, y1: r->p]`` and ``b = [e: q->p, x2: p->s,
    y2: s->q]`` the edge ``e`` is redirected to ``r->s`` and the triangles
    become ``[y1, x2, e^-1]`` and ``[e, y2, x1]``.
    """
    t1, t2, a, b = _flip_sides(s, e)
    _, x1, y1 = a
    _, x2, y2 = b
    edges = list(s.edges)
    edges[e] = (s.end(x1), s.end(x2))
    triangles = list(s.triangles)
    triangles[t1] = (y1, x2, (e, False))
    triangles[t2] = ((e, True), y2, x1)
    return Surface2D(s.vertex_count, tuple(edges), tuple(triangles))


def random_move(s: Surface2D, rng: random.Random, p13: float = 0.5) -> tuple[str, int, Surface2D]:
    """Apply one random valid move; returns (kind, index, new surface)."""
    flips = [e for e in range(len(s.edges)) if flippable(s, e)]
    if flips and rng.random() >= p13:
        e = rng.choice(flips)
        return "2-2", e, pachner_22(s, e)
    t = rng.randrange(len(s.triangles))
    return "1-3", t, pachner_13(s, t)


def surface_union(a: Surface2D, b: Surface2D) -> Surface2D:
    ve, ee = a.vertex_count, len(a.edges)
    return Surface2D(
        a.vertex_count + b.vertex_count,
        a.edges + tuple((x + ve, y + ve) for x, y in b.edges),
        a.triangles + tuple(tuple((e + ee, d) for e, d in tri) for tri in b.triangles),
    )
