"""JSON codecs for complexes, gluings, surfaces and groups.

Serialisation is canonical: sorted keys, simplices sorted by (dimension,
vertices), compact separators, trailing newline. ``dumps(loads(text)) ==
text`` for every canonical file.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .complex import BoundaryComponent, Label, MarkedComplex, SimplicialComplex, require_valid
from .gluing import GluingSpec
from .statesum import FiniteGroup, Surface2D, make_group


class FormatError(ValueError):
    """Input that is not valid JSON or does not follow the expected schema."""


def canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def parse_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def read_json(path: str | Path) -> Any:
    p = Path(path)
    return parse_json(p.read_text(encoding="utf-8"), str(p))


def _simplices(data: Any, where: str) -> list[list[int]]:
    if not isinstance(data, list) or not all(isinstance(s, list) and all(isinstance(v, int) for v in s)
                                             for s in data):
        raise FormatError(f"{where}: expected a list of integer lists")
    return data


def _sorted_simplices(c: SimplicialComplex) -> list[list[int]]:
    return [list(s) for s in sorted(c.simplices, key=lambda s: (len(s), s))]


# --- complexes -----------------------------------------------------------------------

def complex_from_dict(d: dict[str, Any]) -> MarkedComplex:
    if not isinstance(d, dict):
        raise FormatError("complex: expected a JSON object")
    closure = bool(d.get("closure", False))
    simps = _simplices(d.get("simplices", []), "simplices")
    verts = d.get("vertices")
    if verts is not None and not (isinstance(verts, list) and all(isinstance(v, int) for v in verts)):
        raise FormatError("vertices: expected a list of integers")
    c = SimplicialComplex.from_simplices(simps, closure=closure, vertices=verts if not closure else None)
    if closure and verts is not None:
        c = SimplicialComplex(c.vertices | frozenset(verts),
                              c.simplices | frozenset((v,) for v in verts))
    comps = []
    for i, b in enumerate(d.get("boundary", [])):
        where = f"boundary[{i}]"
        if not isinstance(b, dict) or "name" not in b or "label" not in b:
            raise FormatError(f"{where}: needs 'name' and 'label'")
        try:
            label = Label(str(b["label"]).lower())
        except ValueError:
            raise FormatError(f"{where}: label must be 'in' or 'out', got {b['label']!r}") from None
        sub = SimplicialComplex.from_simplices(_simplices(b.get("simplices", []), where), closure=closure)
        comps.append(BoundaryComponent(str(b["name"]), label, sub))
    return MarkedComplex(c, tuple(comps))


def complex_to_dict(m: MarkedComplex | SimplicialComplex) -> dict[str, Any]:
    if isinstance(m, SimplicialComplex):
        m = MarkedComplex(m)
    out: dict[str, Any] = {
        "vertices": sorted(m.complex.vertices),
        "simplices": _sorted_simplices(m.complex),
    }
    if m.boundary:
        out["boundary"] = [{"name": b.name, "label": b.label.value, "simplices": _sorted_simplices(b.subcomplex)}
                           for b in m.boundary]
    return out


def load_complex(path: str | Path, *, check: bool = True) -> MarkedComplex:
    m = complex_from_dict(read_json(path))
    if check:
        require_valid(m)
    return m


def dumps_complex(m: MarkedComplex | SimplicialComplex) -> str:
    return canonical(complex_to_dict(m))


# --- gluings -------------------------------------------------------------------------

def _stage_from_dict(d: dict[str, Any], source: MarkedComplex, where: str) -> GluingSpec:
    for key in ("sigma1", "sigma2", "phi"):
        if key not in d:
            raise FormatError(f"{where}: missing {key!r}")
    if not isinstance(d["phi"], dict):
        raise FormatError(f"{where}: phi must be an object mapping vertex ids")
    try:
        phi = {int(k): int(v) for k, v in d["phi"].items()}
    except (TypeError, ValueError):
        raise FormatError(f"{where}: phi keys and values must be integers") from None
    return GluingSpec(source, tuple(map(str, d["sigma1"])), tuple(map(str, d["sigma2"])), phi)


def _stage_to_dict(spec: GluingSpec) -> dict[str, Any]:
    return {"sigma1": list(spec.sigma1), "sigma2": list(spec.sigma2),
            "phi": {str(k): str(v) for k, v in sorted(spec.phi.items())}}


def gluing_from_dict(d: dict[str, Any]) -> GluingSpec:
    return _stage_from_dict(d, complex_from_dict(d), "gluing")


def gluing_to_dict(spec: GluingSpec) -> dict[str, Any]:
    return complex_to_dict(spec.source) | _stage_to_dict(spec)


def load_gluing(path: str | Path) -> GluingSpec:
    spec = gluing_from_dict(read_json(path))
    require_valid(spec.source)
    return spec


def staged_from_dict(d: dict[str, Any]) -> tuple[MarkedComplex, list[dict[str, Any]]]:
    """A complex with ``stages``: each stage is a gluing of the previous result."""
    stages = d.get("stages")
    if not isinstance(stages, list) or not stages:
        raise FormatError("staged gluing: 'stages' must be a non-empty list")
    return complex_from_dict(d), stages


def stage_spec(stage: dict[str, Any], source: MarkedComplex, index: int) -> GluingSpec:
    return _stage_from_dict(stage, source, f"stages[{index}]")


def staged_to_dict(source: MarkedComplex, specs: list[GluingSpec]) -> dict[str, Any]:
    return complex_to_dict(source) | {"stages": [_stage_to_dict(s) for s in specs]}


# --- surfaces and groups -------------------------------------------------------------

def surface_from_dict(d: dict[str, Any]) -> Surface2D:
    try:
        return Surface2D(int(d["vertex_count"]), [tuple(e) for e in d["edges"]],
                         [tuple((int(r[0]), bool(r[1])) for r in t) for t in d["triangles"]])
    except (KeyError, TypeError, IndexError) as exc:
        raise FormatError(f"surface: malformed ({exc!r})") from None


def surface_to_dict(s: Surface2D) -> dict[str, Any]:
    return {"vertex_count": s.vertex_count, "edges": [list(e) for e in s.edges],
            "triangles": [[[e, d] for e, d in t] for t in s.triangles]}


def load_surface(path: str | Path) -> Surface2D:
    return surface_from_dict(read_json(path))


def group_from_dict(d: dict[str, Any]) -> FiniteGroup:
    kind = d.get("kind") if isinstance(d, dict) else None
    if kind in ("cyclic", "symmetric"):
        return make_group(kind, int(d["n"]))
    if kind == "table":
        return make_group("table", mul=d["mul"])
    raise FormatError(f"group: unknown kind {kind!r}")


def parse_group(text: str) -> FiniteGroup:
    """``cyclic:N``, ``symmetric:N``, an inline JSON object, or a path to one."""
    if ":" in text and not text.lstrip().startswith("{"):
        kind, _, n = text.partition(":")
        if kind in ("cyclic", "symmetric") and n.isdigit():
            return make_group(kind, int(n))
    if text.lstrip().startswith("{"):
        return group_from_dict(parse_json(text, "--group"))
    p = Path(text)
    if p.exists():
        return group_from_dict(read_json(p))
    raise FormatError(f"cannot interpret group {text!r}; use cyclic:N, symmetric:N or a JSON file")
