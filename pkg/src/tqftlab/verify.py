"""End-to-end property checks over the bundled corpus.

Each check returns a :class:`CheckResult`; ``run_all`` runs them in a fixed
order, which is also the order of the report. Criterion labels ("1", "4a",
...) tie each check to an acceptance criterion.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterator

from . import builders, corpus, io
from .complex import SimplicialComplex, connected_components, disjoint_union, euler_combinatorial
from .gluing import GluingError, GluingMorphism, check_conditions, compose, glue, identity
from .homology import betti, euler_homological
from .quinn import PRESETS, random_params, verify_functoriality, z_value
from .statesum import (
    Surface2D, count_admissible, count_admissible_naive, partition_function,
    random_move, surface_union,
)
from .vect import LinearMap, circle_invariant, snake, trace_closure

NAIVE_LIMIT = 10 ** 7


@dataclass
class CheckResult:
    name: str
    criterion: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} [{self.criterion}] {self.name} ({self.seconds:.3f}s): {self.detail}"

    def as_dict(self) -> dict[str, object]:
        return {"name": self.name, "criterion": self.criterion, "passed": self.passed,
                "detail": self.detail, "seconds": f"{self.seconds:.6f}"}


Outcome = tuple[bool, str]


class Verifier:
    def __init__(self, seed: int = 0, root: Path = corpus.CORPUS_DIR) -> None:
        self.seed = seed
        self.root = root
        self.manifest = corpus.load_manifest(root)

    # -- helpers -------------------------------------------------------------------

    def _entries(self, kind: str) -> Iterator[tuple[dict, object]]:
        for e in self.manifest:
            if e["kind"] == kind:
                yield e, corpus.load_entry(e, self.root)

    def accepted_gluings(self) -> list[GluingMorphism]:
        return corpus.gluings(self.root)

    def _glued(self) -> list[tuple[str, GluingMorphism]]:
        out = []
        for e, spec in self._entries("gluing"):
            try:
                out.append((e["name"], glue(spec)))
            except GluingError:
                pass
        for e, stages in self._entries("staged"):
            out += [(f"{e['name']}[{i}]", g) for i, g in enumerate(stages)]
        return out

    # -- criterion 1 and 2 ---------------------------------------------------------

    def circle(self) -> Outcome:
        bad = [n for n in range(1, 9) if circle_invariant(n) != n]
        return not bad and circle_invariant(2) == 2, f"Z_S1(n) = n for n=1..8{'; fails at ' + str(bad) if bad else ''}"

    def snake_and_trace(self) -> Outcome:
        bad = [n for n in range(1, 9) if not snake(n).is_identity()]
        bad_tr = [d for d in range(1, 65) if trace_closure(LinearMap.identity(d)) != d]
        ok = not bad and not bad_tr
        return ok, "snake = id for n<=8, tr(id_d) = d for d<=64" if ok else f"snake fails {bad}, trace fails {bad_tr}"

    # -- criterion 3 ---------------------------------------------------------------

    def euler_poincare(self) -> Outcome:
        rng = random.Random(self.seed)
        cs: list[SimplicialComplex] = [m.complex for m in corpus.all_complexes(self.root)]
        cs += [builders.random_complex(rng) for _ in range(200)]
        for c in cs:
            if euler_combinatorial(c) != euler_homological(c):
                return False, f"mismatch on {sorted(c.simplices)}"
        return True, f"{len(cs)} complexes"

    # -- criterion 4 ---------------------------------------------------------------

    def gluing_chi(self) -> Outcome:
        gs = self._glued()
        for name, g in gs:
            lhs = euler_homological(g.target.complex)
            rhs = euler_homological(g.source.complex) - euler_homological(g.spec.glued_onto)
            if lhs != rhs:
                return False, f"{name}: chi(M_phi) = {lhs}, chi(M) - chi(S2) = {rhs}"
        return True, f"{len(gs)} gluings"

    def gluing_chi_two_piece(self) -> Outcome:
        n = 0
        for name, g in self._glued():
            pieces = _two_pieces(g)
            if pieces is None:
                continue
            m1, m2 = pieces
            lhs = euler_homological(g.target.complex)
            rhs = euler_homological(m1) + euler_homological(m2) - euler_homological(g.spec.glued_onto)
            if lhs != rhs:
                return False, f"{name}: {lhs} != {rhs}"
            n += 1
        return n > 0, f"{n} two-piece gluings"

    def betti_identity(self) -> Outcome:
        bad = []
        gs = self._glued()
        for name, g in gs:
            top = max(g.source.complex.dim, 0) + 1
            bm, bs, bt = (_pad(betti(x), top) for x in (g.source.complex, g.spec.glued_onto, g.target.complex))
            want = [a - b for a, b in zip(bm, bs)]
            if bt != want:
                bad.append(f"{name}: b(M_phi)={bt} vs b(M)-b(S2)={want}")
        return not bad, f"{len(gs) - len(bad)}/{len(gs)} hold" + ("; " + "; ".join(bad) if bad else "")

    def excision(self) -> Outcome:
        gs = self._glued()
        for name, g in gs:
            s = g.spec
            both = s.glued_in.union(s.glued_onto)
            image = g.f.image_complex(s.glued_in)
            top = max(g.source.complex.dim, 0) + 1
            lhs = _pad(betti(s.source.complex, both), top)
            rhs = _pad(betti(g.target.complex, image), top)
            if lhs != rhs:
                return False, f"{name}: H(M, S1+S2) = {lhs}, H(M_phi, nu(S1)) = {rhs}"
        return True, f"{len(gs)} gluings"

    # -- criterion 5 ---------------------------------------------------------------

    def gluing_conditions(self) -> Outcome:
        gs = self.accepted_gluings()
        for i, g in enumerate(gs):
            fail = check_conditions(g.f, g.spec, g.target)
            if fail is not None:
                return False, f"gluing #{i}: {fail}"
        return True, f"{len(gs)} gluings and composites"

    def composition(self) -> Outcome:
        n = 0
        for e, stages in self._entries("staged"):
            comp = stages[0]
            for g in stages[1:]:
                comp = compose(comp, g)
            fail = check_conditions(comp.f, comp.spec, comp.target)
            if fail is not None:
                return False, f"{e['name']}: composite fails {fail}"
            shot = e["expect"]["one_shot"]["value"]
            one = glue(io.stage_spec(shot, stages[0].source, 0))
            if (one.target, one.f.vertex_map) != (comp.target, comp.f.vertex_map):
                return False, f"{e['name']}: composite differs from one-shot gluing"
            if (set(one.spec.sigma1), set(one.spec.sigma2), one.spec.phi) != \
                    (set(comp.spec.sigma1), set(comp.spec.sigma2), comp.spec.phi):
                return False, f"{e['name']}: composite gluing data differs from one-shot"
            if len(stages) == 3:
                a, b, c = stages
                if compose(compose(a, b), c).target != compose(a, compose(b, c)).target:
                    return False, f"{e['name']}: composition is not associative"
            for g in stages:
                for h in (compose(identity(g.source), g), compose(g, identity(g.target))):
                    if (h.target, h.f.vertex_map) != (g.target, g.f.vertex_map):
                        return False, f"{e['name']}: identity is not neutral"
            n += 1
        return n > 0, f"{n} staged chains match their one-shot gluing"

    # -- criterion 6 ---------------------------------------------------------------

    def quinn(self) -> Outcome:
        gs = self.accepted_gluings()
        for name, p in PRESETS.items():
            cx = verify_functoriality(gs, p)
            if cx is not None:
                return False, f"preset {name}: {cx}"
        rng = random.Random(self.seed)
        for k in range(100):
            p = random_params(rng, satisfying=True)
            cx = verify_functoriality(gs, p)
            if cx is not None:
                return False, f"satisfying params {p}: {cx}"
        if not any(euler_combinatorial(g.spec.glued_onto) for g in gs):
            return False, "no corpus gluing with chi(S2) != 0"
        for k in range(100):
            p = random_params(rng, satisfying=False)
            if verify_functoriality(gs, p) is None:
                return False, f"violating params {p} produced no counterexample"
        return True, "3 presets, 100 satisfying pass, 100 violating refuted"

    # -- criterion 7 and 8 ---------------------------------------------------------

    def state_sums(self) -> Outcome:
        n = 0
        for e, s in self._entries("surface"):
            for spec, want in e["expect"]["Z"]["value"].items():
                got = partition_function(s, io.parse_group(spec))
                if got != Fraction(want):
                    return False, f"{e['name']} with {spec}: Z = {got}, expected {want}"
                n += 1
        return True, f"{n} (surface, group) values"

    def pachner(self, moves: int = 20) -> Outcome:
        naive = 0
        surfaces = corpus.surfaces(self.root)
        for sname in ("pillowcase", "torus_sub"):
            for gname in ("cyclic:2", "cyclic:3"):
                g = io.parse_group(gname)
                ok, msg, k = pachner_walk(surfaces[sname], g, moves, random.Random(self.seed), naive=True)
                naive += k
                if not ok:
                    return False, f"{sname}/{gname}: {msg}"
        return True, f"{moves} moves x 4 runs, Z constant; {naive} naive cross-checks"

    # -- criterion 9 ---------------------------------------------------------------

    def multiplicativity(self) -> Outcome:
        surfaces = list(corpus.surfaces(self.root).items())
        for gname in ("cyclic:2", "cyclic:3"):
            g = io.parse_group(gname)
            z = {n: partition_function(s, g) for n, s in surfaces}
            for i, (n1, s1) in enumerate(surfaces):
                for n2, s2 in surfaces[i:]:
                    if partition_function(surface_union(s1, s2), g) != z[n1] * z[n2]:
                        return False, f"Z({n1} + {n2}) != Z({n1}) Z({n2}) for {gname}"
        ms = list(corpus.complexes(self.root).values())
        rng = random.Random(self.seed)
        params = list(PRESETS.values()) + [random_params(rng, satisfying=bool(k % 2)) for k in range(6)]
        for p in params:
            for a in ms:
                for b in ms:
                    if z_value(disjoint_union(a, b), p) != z_value(a, p) * z_value(b, p):
                        return False, f"z_value not multiplicative for {p}"
        return True, f"{len(surfaces)} surfaces, {len(ms)} complexes"

    # -- corpus hygiene ------------------------------------------------------------

    def round_trip(self) -> Outcome:
        for e in corpus.definitions():
            text = (self.root / e.file).read_text(encoding="utf-8")
            if e.to_json() != text:
                return False, f"{e.file} differs from its generator"
            data = io.parse_json(text, e.file)
            if io.canonical(data) != text:
                return False, f"{e.file} is not canonical"
        return True, "every corpus file is canonical and regenerates bit-exactly"

    def expectations(self) -> Outcome:
        n = 0
        for e, obj in ((e, corpus.load_entry(e, self.root)) for e in self.manifest):
            ex = {k: v["value"] for k, v in e["expect"].items()}
            for key, val in _observe(e["kind"], obj, ex).items():
                if val != ex[key]:
                    return False, f"{e['name']}.{key}: got {val}, expected {ex[key]}"
                n += 1
        return True, f"{n} frozen values"

    # -- driver --------------------------------------------------------------------

    CHECKS: tuple[tuple[str, str, str], ...] = (
        ("corpus-round-trip", "corpus", "round_trip"),
        ("corpus-expectations", "corpus", "expectations"),
        ("circle-invariant", "1", "circle"),
        ("snake-and-trace", "2", "snake_and_trace"),
        ("euler-poincare", "3", "euler_poincare"),
        ("gluing-euler", "4a", "gluing_chi"),
        ("gluing-euler-two-piece", "4b", "gluing_chi_two_piece"),
        ("gluing-betti-identity", "4c", "betti_identity"),
        ("gluing-excision", "4d", "excision"),
        ("gluing-conditions", "5a", "gluing_conditions"),
        ("gluing-composition", "5b", "composition"),
        ("quinn-functoriality", "6", "quinn"),
        ("state-sum-values", "7", "state_sums"),
        ("pachner-invariance", "8", "pachner"),
        ("multiplicativity", "9", "multiplicativity"),
    )

    def run(self, method: str) -> CheckResult:
        name, crit = next((n, c) for n, c, m in self.CHECKS if m == method)
        t0 = time.perf_counter()
        try:
            ok, detail = getattr(self, method)()
        except Exception as exc:  # a crash is a failed check, reported with its cause
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        return CheckResult(name, crit, ok, detail, time.perf_counter() - t0)

    def run_all(self, select: Callable[[str], bool] = lambda c: True) -> list[CheckResult]:
        return [self.run(m) for _, c, m in self.CHECKS if select(c)]


def pachner_walk(s: Surface2D, g, moves: int, rng: random.Random, *, naive: bool = False) -> tuple[bool, str, int]:
    """Apply ``moves`` random Pachner moves; Z must never change. Returns
    (ok, message, number of naive cross-checks)."""
    z0 = partition_function(s, g)
    checks = 0
    for i in range(moves):
        kind, idx, s = random_move(s, rng)
        count = count_admissible(s, g)
        if naive and g.order ** len(s.edges) <= NAIVE_LIMIT:
            if count_admissible_naive(s, g) != count:
                return False, f"move {i + 1}: backtracking and naive counts differ", checks
            checks += 1
        z = Fraction(count, g.order ** s.vertex_count)
        if z != z0:
            return False, f"move {i + 1} ({kind} at {idx}): Z = {z}, was {z0}", checks
    return True, f"Z = {z0} after {moves} moves", checks


def _pad(b: tuple[int, ...], n: int) -> list[int]:
    return list(b) + [0] * (n - len(b))


def _two_pieces(g: GluingMorphism) -> tuple[SimplicialComplex, SimplicialComplex] | None:
    """Split the source into the part holding Sigma_1 and the part holding
    Sigma_2 when those lie in different connected components."""
    comps = connected_components(g.source.complex)
    s1, s2 = g.spec.glued_in.vertices, g.spec.glued_onto.vertices
    side1 = [c for c in comps if c.vertices & s1]
    side2 = [c for c in comps if c.vertices & s2]
    if any(c in side2 for c in side1) or len(side1) + len(side2) != len(comps):
        return None
    return SimplicialComplex().union(*side1), SimplicialComplex().union(*side2)


def _observe(kind: str, obj, ex: dict) -> dict[str, object]:
    out: dict[str, object] = {}
    if kind == "complex":
        c = obj.complex
        out["chi"] = euler_homological(c)
        out["betti"] = list(betti(c))
        if "relative_betti" in ex:
            rel = ex["relative_betti"]["rel"]
            out["relative_betti"] = {"rel": rel, "value": list(betti(c, obj.union_of(rel)))}
        if "quinn_exponent" in ex:
            out["quinn_exponent"] = {k: str(z_value(obj, p).exponent) for k, p in PRESETS.items()}
    elif kind == "gluing":
        try:
            g = glue(obj)
        except GluingError as exc:
            return {"error": exc.code}
        out.update(chi_source=euler_homological(obj.source.complex), chi_target=euler_homological(g.target.complex),
                   chi_glued=euler_homological(obj.glued_onto), betti_target=list(betti(g.target.complex)))
    elif kind == "staged":
        out["chi_stages"] = [euler_homological(obj[0].source.complex)] + [euler_homological(g.target.complex) for g in obj]
    else:
        out["Z"] = {k: str(partition_function(obj, io.parse_group(k))) for k in ex["Z"]}
    return {k: v for k, v in out.items() if k in ex}

