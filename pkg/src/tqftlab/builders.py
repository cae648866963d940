"""Standard small triangulations used by the corpus and the tests."""
from __future__ import annotations

import random

from .complex import Label, MarkedComplex, SimplicialComplex, marked
from .statesum import Surface2D


def point(v: int = 0) -> SimplicialComplex:
    return SimplicialComplex.from_simplices([[v]], closure=True)


def path(n: int, start: int = 0) -> SimplicialComplex:
    """Path on vertices start..start+n-1 (n >= 1)."""
    if n == 1:
        return point(start)
    return SimplicialComplex.from_simplices(
        [[start + i, start + i + 1] for i in range(n - 1)], closure=True)


def interval(start: int = 0) -> SimplicialComplex:
    return path(2, start)


def cycle(n: int, start: int = 0) -> SimplicialComplex:
    if n < 3:
        raise ValueError("a simplicial cycle needs at least 3 vertices")
    return SimplicialComplex.from_simplices(
        [[start + i, start + (i + 1) % n] for i in range(n)], closure=True)


def triangle_boundary(start: int = 0) -> SimplicialComplex:
    return cycle(3, start)


def simplex_boundary(k: int, start: int = 0) -> SimplicialComplex:
    """Boundary of the k-simplex on k+1 vertices (a (k-1)-sphere)."""
    vs = list(range(start, start + k + 1))
    return SimplicialComplex.from_simplices([vs[:i] + vs[i + 1:] for i in range(k + 1)], closure=True)


def tetra_boundary(start: int = 0) -> SimplicialComplex:
    return simplex_boundary(3, start)


def cone_disk(n: int, start: int = 0) -> SimplicialComplex:
    """Cone over an n-cycle; the apex is start+n."""
    apex = start + n
    return SimplicialComplex.from_simplices(
        [[start + i, start + (i + 1) % n, apex] for i in range(n)], closure=True)


def annulus(n: int, levels: int, start: int = 0) -> SimplicialComplex:
    """Cycle of length n times a path with ``levels`` vertices.

    Vertex (level l, position i) has id start + l*n + i.
    """
    tris = []
    for l in range(levels - 1):
        for i in range(n):
            a, b = start + l * n + i, start + l * n + (i + 1) % n
            c, d = a + n, b + n
            tris += [[a, b, c], [b, d, c]]
    return SimplicialComplex.from_simplices(tris, closure=True)


def annulus_ring(n: int, level: int, start: int = 0) -> SimplicialComplex:
    return cycle(n, start + level * n)


def marked_annulus(n: int, levels: int, start: int = 0) -> MarkedComplex:
    """Annulus with the bottom ring "in" (named ``bottom``) and the top ring "out" (``top``)."""
    return marked(annulus(n, levels, start),
                  ("bottom", Label.IN, annulus_ring(n, 0, start)),
                  ("top", Label.OUT, annulus_ring(n, levels - 1, start)))


def marked_path(n: int, start: int = 0, left: str = "L", right: str = "R") -> MarkedComplex:
    """Path whose first vertex is an "in" end and last vertex an "out" end."""
    return marked(path(n, start), (left, Label.IN, point(start)),
                  (right, Label.OUT, point(start + n - 1)))


def random_complex(rng: random.Random, max_vertices: int = 12, max_dim: int = 4,
                   max_facets: int = 7) -> SimplicialComplex:
    """Closure of a few random simplices, plus isolated vertices now and then."""
    n = rng.randint(1, max_vertices)
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        k = rng.randint(1, min(n, max_dim + 1))
        facets.append(rng.sample(range(n), k))
    if rng.random() < 0.3:
        facets.append([rng.randrange(n)])
    return SimplicialComplex.from_simplices(facets, closure=True)


# --- surfaces -------------------------------------------------------------------------

def pillowcase() -> Surface2D:
    """Sphere from two triangles glued along all three sides (3 vertices)."""
    return Surface2D(3, [(0, 1), (1, 2), (2, 0)],
                     [((0, True), (1, True), (2, True)), ((2, False), (1, False), (0, False))])


def torus2() -> Surface2D:
    """One-vertex torus: square a b a^-1 b^-1 cut along the diagonal c = ab."""
    return Surface2D(1, [(0, 0)] * 3,
                     [((0, True), (1, True), (2, False)), ((2, True), (0, False), (1, False))])


def tetra_surface() -> Surface2D:
    """Boundary of a tetrahedron, coherently oriented."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    eid = {e: i for i, e in enumerate(edges)}

    def ref(a: int, b: int) -> tuple[int, bool]:
        return (eid[(a, b)], True) if (a, b) in eid else (eid[(b, a)], False)

    faces = [(0, 2, 1), (0, 1, 3), (0, 3, 2), (1, 2, 3)]
    return Surface2D(4, edges, [tuple(ref(f[k], f[(k + 1) % 3]) for k in range(3)) for f in faces])


def polygon_surface(word: list[tuple[str, bool]]) -> Surface2D:
    """Closed surface from a polygon whose sides are glued by ``word``.

    ``word`` lists (label, forward) around the boundary; every label occurs
    twice. All corners must be identified to a single vertex (true for the
    standard words ``a b a^-1 b^-1 ...``). The polygon is fan-triangulated
    from corner 0 with new diagonal edges.
    """
    labels = sorted({l for l, _ in word})
    side = {l: i for i, l in enumerate(labels)}
    edges: list[tuple[int, int]] = [(0, 0)] * len(labels)
    n = len(word)
    diag = {}
    for k in range(2, n - 1):
        diag[k] = len(edges)
        edges.append((0, 0))

    def chord(k: int) -> tuple[int, bool]:
        # directed from corner 0 to corner k
        return (diag[k], True)

    tris = []
    for k in range(1, n - 1):
        first = (side[word[0][0]], word[0][1]) if k == 1 else chord(k)
        mid = (side[word[k][0]], word[k][1])
        last = (side[word[n - 1][0]], word[n - 1][1]) if k == n - 2 else (diag[k + 1], False)
        tris.append((first, mid, last))
    return Surface2D(1, edges, tris)


def genus2() -> Surface2D:
    """One-vertex genus-two surface from the octagon a b a^-1 b^-1 c d c^-1 d^-1."""
    w = [("a", True), ("b", True), ("a", False), ("b", False),
         ("c", True), ("d", True), ("c", False), ("d", False)]
    return polygon_surface(w)
