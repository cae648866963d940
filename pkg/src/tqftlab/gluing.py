"""Gluing morphisms between marked complexes.

A gluing identifies boundary pieces ``sigma1`` with ``sigma2`` through a
vertex isomorphism ``phi`` and maps the marked complex onto its
identification space. Marked isomorphisms are the other morphism kind;
:func:`compose` closes both kinds under composition.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .complex import (
    BoundaryComponent,
    MarkedComplex,
    Simplex,
    SimplicialComplex,
    SimplicialMap,
    identity_map,
    validate,
)
from .errors import GluingError


@dataclass(frozen=True)
class GluingSpec:
    source: MarkedComplex
    sigma1: tuple[str, ...]
    sigma2: tuple[str, ...]
    phi: Mapping[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma1", tuple(self.sigma1))
        object.__setattr__(self, "sigma2", tuple(self.sigma2))
        object.__setattr__(self, "phi", dict(self.phi))

    @property
    def glued_in(self) -> SimplicialComplex:
        return self.source.union_of(self.sigma1)

    @property
    def glued_onto(self) -> SimplicialComplex:
        return self.source.union_of(self.sigma2)

    @property
    def remaining(self) -> tuple[BoundaryComponent, ...]:
        used = set(self.sigma1) | set(self.sigma2)
        return tuple(b for b in self.source.boundary if b.name not in used)


@dataclass(frozen=True)
class GluingMorphism:
    spec: GluingSpec
    target: MarkedComplex
    f: SimplicialMap

    @property
    def source(self) -> MarkedComplex:
        return self.spec.source

    def check(self) -> ConditionFailure | None:
        return check_conditions(self.f, self.spec, self.target)


@dataclass(frozen=True)
class MarkedIsomorphism:
    """Simplicial isomorphism carrying each boundary piece onto a target
    piece with the same label."""

    source: MarkedComplex
    target: MarkedComplex
    f: SimplicialMap

    def __post_init__(self) -> None:
        if not self.f.is_isomorphism():
            raise GluingError("vertex map is not a simplicial isomorphism", code="not-isomorphism")
        if component_correspondence(self.f, self.source, self.target) is None:
            raise GluingError("boundary pieces are not carried onto equally labelled pieces",
                              code="not-isomorphism")


Morphism = Union[GluingMorphism, MarkedIsomorphism]


def identity(m: MarkedComplex) -> MarkedIsomorphism:
    return MarkedIsomorphism(m, m, identity_map(m.complex))


def component_correspondence(f: SimplicialMap, source: MarkedComplex,
                             target: MarkedComplex,
                             names: Iterable[str] | None = None) -> dict[str, str] | None:
    """Name map sending each listed source piece to the target piece that is
    its exact isomorphic image with the same label, or None."""
    out: dict[str, str] = {}
    images = {b.subcomplex: b for b in target.boundary}
    wanted = source.names if names is None else tuple(names)
    for name in wanted:
        comp = source.component(name)
        img = f.image_complex(comp.subcomplex)
        hit = images.get(img)
        if hit is None or hit.label is not comp.label:
            return None
        if len(img.simplices) != len(comp.subcomplex.simplices) or len(img.vertices) != len(comp.subcomplex.vertices):
            return None
        out[name] = hit.name
    if names is None and sorted(out.values()) != sorted(target.names):
        return None
    return out


def _check_spec(spec: GluingSpec) -> tuple[SimplicialComplex, SimplicialComplex]:
    src = spec.source
    for name in spec.sigma1 + spec.sigma2:
        if name not in src.names:
            raise GluingError(f"no boundary component named {name!r}", code="unknown-component")
    if not spec.sigma1 or not spec.sigma2:
        raise GluingError("both glued pieces must be non-empty", code="unknown-component")
    shared = set(spec.sigma1) & set(spec.sigma2)
    if shared:
        raise GluingError(f"component(s) {sorted(shared)} on both sides", code="not-disjoint")
    s1, s2 = spec.glued_in, spec.glued_onto
    common = s1.vertices & s2.vertices
    if common:
        raise GluingError(f"glued pieces share vertices {sorted(common)}", code="not-disjoint")
    if not s1.simplices or not s2.simplices:
        raise GluingError("both glued pieces must be non-empty", code="unknown-component")

    phi = spec.phi
    if set(phi) != set(s1.vertices):
        missing = sorted(set(s1.vertices) - set(phi))
        extra = sorted(set(phi) - set(s1.vertices))
        raise GluingError(f"phi domain mismatch: missing {missing}, extra {extra}", code="not-isomorphism")
    psi = SimplicialMap(s1, s2, phi)
    if not psi.is_isomorphism():
        raise GluingError("phi is not a simplicial isomorphism onto the second piece",
                          code="not-isomorphism")
    # phi must land in the label-flipped second piece
    label1 = {v: b.label for b in src.boundary if b.name in spec.sigma1 for v in b.subcomplex.vertices}
    label2 = {v: b.label for b in src.boundary if b.name in spec.sigma2 for v in b.subcomplex.vertices}
    for x in sorted(phi):
        if label1[x] is label2[phi[x]]:
            raise GluingError(f"phi sends vertex {x} ({label1[x].value}) to vertex {phi[x]} "
                              f"with the same label", code="not-isomorphism")
    return s1, s2


def glue(spec: GluingSpec) -> GluingMorphism:
    """Identify ``x`` with ``phi(x)`` for every vertex of ``sigma1``.

    Each identified pair is named by the smaller of its two ids. Raises
    :class:`GluingError` if the quotient would not be a simplicial complex.
    """
    s1, _ = _check_spec(spec)
    phi = spec.phi
    m = spec.source.complex

    vmap = {v: v for v in m.vertices}
    for x, y in phi.items():
        vmap[x] = vmap[y] = min(x, y)
    f = SimplicialMap(m, SimplicialComplex(), vmap)

    partner: dict[Simplex, Simplex] = {}
    for s in s1.simplices:
        t = tuple(sorted(phi[v] for v in s))
        partner[s], partner[t] = t, s

    fibres: dict[Simplex, list[Simplex]] = {}
    for s in sorted(m.simplices, key=lambda s: (len(s), s)):
        img = f.image(s)
        if len(img) != len(s):
            raise GluingError(f"simplex {list(s)} collapses to {list(img)}; subdivide first",
                              code="non-simplicial-quotient")
        fibres.setdefault(img, []).append(s)
    for img, pre in sorted(fibres.items(), key=lambda kv: (len(kv[0]), kv[0])):
        if len(pre) == 1:
            continue
        if len(pre) == 2 and partner.get(pre[0]) == pre[1]:
            continue
        shown = ", ".join(str(list(p)) for p in pre)
        raise GluingError(f"simplices {shown} would all become {list(img)}; subdivide first",
                          code="non-simplicial-quotient")

    quotient = SimplicialComplex(frozenset(vmap.values()), frozenset(fibres))
    f = SimplicialMap(m, quotient, vmap)
    target = MarkedComplex(quotient, tuple(
        BoundaryComponent(b.name, b.label, f.image_complex(b.subcomplex)) for b in spec.remaining))
    return GluingMorphism(spec, target, f)


@dataclass(frozen=True)
class ConditionFailure:
    condition: int
    detail: str

    def __str__(self) -> str:
        return f"condition {self.condition} fails: {self.detail}"


def check_conditions(f: SimplicialMap, spec: GluingSpec, target: MarkedComplex) -> ConditionFailure | None:
    """Evaluate the five gluing-morphism conditions on vertex and simplex sets.

    Points of a complex are modelled by its open simplices, so "f(x)" for a
    point in an open simplex ``s`` is the open simplex ``f(s)``; a simplex
    whose image has fewer vertices counts as non-injective.
    Returns the first failing condition, or None.
    """
    m = spec.source.complex
    if f.source != m or f.target != target.complex:
        return ConditionFailure(0, "map does not go from the source complex to the target complex")
    s1, s2 = spec.glued_in, spec.glued_onto
    glued = s1.simplices | s2.simplices
    phi = spec.phi

    # 1) surjective
    images = {f.image(s) for s in m.simplices}
    lost = sorted(target.complex.simplices - images, key=lambda s: (len(s), s))
    if lost or set(f.vertex_map.values()) != set(target.complex.vertices):
        return ConditionFailure(1, f"not surjective; {list(lost[0]) if lost else 'a vertex'} is missed")

    # 2) injective away from the glued pieces
    interior = sorted(m.simplices - glued, key=lambda s: (len(s), s))
    seen: dict[Simplex, Simplex] = {}
    for s in interior:
        img = f.image(s)
        if len(img) != len(s):
            return ConditionFailure(2, f"{list(s)} collapses to {list(img)}")
        if img in seen:
            return ConditionFailure(2, f"{list(seen[img])} and {list(s)} both map to {list(img)}")
        seen[img] = s

    # 3) the unglued boundary goes isomorphically onto the target boundary
    rest = [b.name for b in spec.remaining]
    corr = component_correspondence(f, spec.source, target, rest)
    if corr is None or sorted(corr.values()) != sorted(target.names):
        return ConditionFailure(3, "remaining boundary is not carried isomorphically onto the target boundary")
    rest_complex = spec.source.union_of(rest)
    if not SimplicialMap(rest_complex, target.boundary_complex,
                         {v: f(v) for v in rest_complex.vertices}).is_isomorphism():
        return ConditionFailure(3, "remaining boundary is not carried isomorphically onto the target boundary")

    # 4) over each image point of sigma1 lies exactly one pair (x, phi(x))
    fibre: dict[Simplex, list[Simplex]] = {}
    for s in glued:
        fibre.setdefault(f.image(s), []).append(s)
    for s in sorted(s1.simplices, key=lambda s: (len(s), s)):
        t = tuple(sorted(phi[v] for v in s))
        img = f.image(s)
        if f.image(t) != img or len(img) != len(s):
            return ConditionFailure(4, f"{list(s)} and its partner {list(t)} are not identified")
        if sorted(fibre[img]) != sorted([s, t]):
            return ConditionFailure(4, f"more than one pair lies over {list(img)}")
    if any(f.image(s) not in {f.image(x) for x in s1.simplices} for s in s2.simplices):
        return ConditionFailure(4, "part of the second glued piece is not identified with the first")

    # 5) the glued image avoids the image of the interior
    clash = sorted({f.image(s) for s in s1.simplices} & set(seen), key=lambda s: (len(s), s))
    if clash:
        return ConditionFailure(5, f"{list(clash[0])} is hit by both the glued piece and the interior")
    return None


def _preimage_names(f: SimplicialMap, source: MarkedComplex, target: MarkedComplex,
                    names: Iterable[str], candidates: Iterable[str]) -> tuple[str, ...]:
    corr = component_correspondence(f, source, target, list(candidates))
    if corr is None:
        raise GluingError("boundary of the intermediate object does not match", code="not-composable")
    back = {v: k for k, v in corr.items()}
    try:
        return tuple(back[n] for n in names)
    except KeyError as exc:
        raise GluingError(f"component {exc.args[0]!r} has no preimage", code="not-composable") from None


def compose(first: Morphism, second: Morphism) -> Morphism:
    """``second`` after ``first``. Gluing parts combine as
    ``theta = phi + f^-1 . psi . f`` on the pulled-back second gluing."""
    if first.target != second.source:
        raise GluingError("target of the first morphism is not the source of the second",
                          code="not-composable")
    f = first.f
    fg = f.then(second.f)
    if isinstance(first, MarkedIsomorphism) and isinstance(second, MarkedIsomorphism):
        return MarkedIsomorphism(first.source, second.target, fg)
    if isinstance(second, MarkedIsomorphism):
        return GluingMorphism(first.spec, second.target, fg)

    # second is a gluing on first.target: pull it back along f
    if isinstance(first, MarkedIsomorphism):
        candidates = first.source.names
        base_s1: tuple[str, ...] = ()
        base_s2: tuple[str, ...] = ()
        theta: dict[int, int] = {}
        src = first.source
    else:
        candidates = tuple(b.name for b in first.spec.remaining)
        base_s1, base_s2 = first.spec.sigma1, first.spec.sigma2
        theta = dict(first.spec.phi)
        src = first.spec.source
    sp = second.spec
    s3 = _preimage_names(f, src, first.target, sp.sigma1, candidates)
    s4 = _preimage_names(f, src, first.target, sp.sigma2, candidates)
    s4_vertices = src.union_of(s4).vertices
    f_inv = {f(v): v for v in s4_vertices}
    for x in src.union_of(s3).vertices:
        theta[x] = f_inv[sp.phi[f(x)]]
    spec = GluingSpec(src, base_s1 + s3, base_s2 + s4, theta)
    return GluingMorphism(spec, second.target, fg)


def quotient_is_valid(g: GluingMorphism) -> bool:
    return validate(g.target.complex) is None
