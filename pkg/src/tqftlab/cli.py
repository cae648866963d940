"""Command-line front end: ``tqftlab <subcommand> ...``.

Exit status is 0 on success, 1 when a checked property fails and 2 for bad
input. File arguments that do not exist are looked up by basename in the
bundled corpus, so ``tqftlab euler examples/s2_tetra.json`` works anywhere.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import corpus, io
from .complex import validate_marked
from .errors import TqftError
from .gluing import check_conditions, glue
from .homology import betti, euler_homological
from .quinn import PRESETS, EulerTheoryParams, parse_rational, verify_functoriality, z_value
from .statesum import partition_function
from .verify import Verifier, pachner_walk
from .vect import LinearMap, circle_invariant, snake

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    for sub in ("", "complexes", "gluings", "staged", "surfaces"):
        q = corpus.CORPUS_DIR / sub / p.name
        if q.is_file():
            return q
    raise InputError(f"{path}: no such file")


def _complex(path: str):
    m = io.load_complex(resolve(path), check=False)
    bad = validate_marked(m)
    if bad is not None:
        raise InputError(f"{path}: {bad}")
    return m


# --- subcommands ---------------------------------------------------------------------

def cmd_euler(a: argparse.Namespace, out: Callable[[str], None]) -> int:
    m = _complex(a.file)
    out(f"chi = {euler_homological(m.complex)}")
    return OK


def cmd_homology(a: argparse.Namespace, out: Callable[[str], None]) -> int:
    m = _complex(a.file)
    rel = m.union_of(a.rel) if a.rel else None
    b = betti(m.complex, rel)
    for n, x in enumerate(b):
        out(f"b{n} = {x}")
    out(f"chi = {euler_homological(m.complex, rel)}")
    return OK


def cmd_glue(a: argparse.Namespace, out: Callable[[str], None]) -> int:
    spec = io.load_gluing(resolve(a.file))
    g = glue(spec)
    fail = check_conditions(g.f, g.spec, g.target)
    if a.output:
        Path(a.output).write_text(io.dumps_complex(g.target), encoding="utf-8")
    else:
        out(io.dumps_complex(g.target).rstrip("\n"))
    chi_m, chi_t = euler_homological(spec.source.complex), euler_homological(g.target.complex)
    chi_s = euler_homological(spec.glued_onto)
    out(f"chi(M) = {chi_m}, chi(Sigma2) = {chi_s}, chi(M_phi) = {chi_t}")
    if fail is not None:
        out(f"violation: {fail}")
        return VIOLATION
    if chi_t != chi_m - chi_s:
        out("violation: chi(M_phi) != chi(M) - chi(Sigma2)")
        return VIOLATION
    return OK


def _params(a: argparse.Namespace) -> EulerTheoryParams:
    cs = [a.c1, a.c2, a.c3, a.c4]
    if a.preset and any(c is not None for c in cs):
        raise InputError("give either --preset or --c1..--c4, not both")
    if a.preset:
        return PRESETS[a.preset]
    if any(c is None for c in cs):
        raise InputError("need --preset or all of --c1 --c2 --c3 --c4")
    try:
        return EulerTheoryParams(*(parse_rational(c) for c in cs))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None


def cmd_quinn(a: argparse.Namespace, out: Callable[[str], None]) -> int:
    p = _params(a)
    if a.action == "eval":
        out(str(z_value(_complex(a.path), p)))
        return OK
    root = Path(a.path) if a.path else corpus.CORPUS_DIR
    if not (root / "manifest.json").is_file():
        raise InputError(f"{root}: not a corpus directory (no manifest.json)")
    gs = corpus.gluings(root)
    cx = verify_functoriality(gs, p)
    out(f"params {p}: c1+c2+c3+c4 = {sum(p.as_tuple())}")
    if cx is None:
        out(f"functorial on {len(gs)} gluings")
        return OK
    out(f"counterexample: {cx}")
    return VIOLATION


def cmd_statesum(a: argparse.Namespace, out: Callable[[str], None]) -> int:
    s = io.load_surface(resolve(a.surface))
    g = io.parse_group(a.group)
    if a.action == "z":
        out(f"Z = {partition_function(s, g)}")
        return OK
    ok, msg, _ = pachner_walk(s, g, a.moves, random.Random(a.seed), naive=a.naive)
    out(("ok: " if ok else "violation: ") + msg)
    return OK if ok else VIOLATION


def cmd_vect(a: argparse.Namespace, out: Callable[[str], None]) -> int:
    if a.dim < 1:
        raise InputError("--dim must be at least 1")
    if a.action == "circle":
        out(f"Z_S1 = {circle_invariant(a.dim)}")
        return OK
    z = snake(a.dim)
    if z.is_identity():
        out(f"pass: snake is the identity on Q^{a.dim}")
        return OK
    out(f"fail: snake on Q^{a.dim} is\n{z}\nexpected\n{LinearMap.identity(a.dim)}")
    return VIOLATION


def cmd_verify(a: argparse.Namespace, out: Callable[[str], None]) -> int:
    root = Path(a.corpus) if a.corpus else corpus.CORPUS_DIR
    results = Verifier(seed=a.seed, root=root).run_all()
    if a.json:
        out(json.dumps({"seed": a.seed, "checks": [r.as_dict() for r in results],
                        "passed": all(r.passed for r in results)}, indent=2, sort_keys=True))
    else:
        for r in results:
            out(r.line())
        out(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return OK if all(r.passed for r in results) else VIOLATION


# --- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tqftlab", description="Exact checks for small TQFT constructions.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("euler", help="Euler characteristic of a complex")
    p.add_argument("file")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("homology", help="rational Betti numbers")
    p.add_argument("file")
    p.add_argument("--rel", nargs="+", metavar="NAME", help="boundary components to take homology relative to")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("glue", help="glue a complex and check the result")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write the glued complex here instead of stdout")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("quinn", help="Quinn's Euler-characteristic theories")
    for c in ("c1", "c2", "c3", "c4"):
        p.add_argument(f"--{c}", metavar="P/Q")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("action", choices=("eval", "check-functor"))
    p.add_argument("path", nargs="?", help="complex file for eval, corpus directory for check-functor")
    p.set_defaults(func=cmd_quinn)

    p = sub.add_parser("statesum", help="finite-group state sums on closed surfaces")
    p.add_argument("action", choices=("z", "pachner-check"))
    p.add_argument("surface")
    p.add_argument("--group", required=True, help="cyclic:N, symmetric:N, or a JSON group")
    p.add_argument("--moves", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--naive", action="store_true", help="cross-check counts against brute force")
    p.set_defaults(func=cmd_statesum)

    p = sub.add_parser("vect", help="the 0+1 dimensional vector-space theory")
    p.add_argument("action", choices=("circle", "snake"))
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_vect)

    p = sub.add_parser("corpus-verify", help="run every property check over the corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--corpus", help="corpus directory (defaults to the bundled one)")
    p.set_defaults(func=cmd_verify)
    return ap


def _join_rationals(argv: Sequence[str]) -> list[str]:
    """Turn ``--c2 -1/2`` into ``--c2=-1/2`` so argparse accepts negative fractions."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--c1", "--c2", "--c3", "--c4"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str] | None = None, out: Callable[[str], None] = print,
        err: Callable[[str], None] = lambda s: print(s, file=sys.stderr)) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_rationals(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return OK if exc.code == 0 else INPUT_ERROR
    if args.command == "quinn" and args.action == "eval" and not args.path:
        err("error: quinn eval needs a complex file")
        return INPUT_ERROR
    try:
        return args.func(args, out)
    except (InputError, io.FormatError, OSError) as exc:
        err(f"error: {exc}")
        return INPUT_ERROR
    except TqftError as exc:
        err(f"error: {exc}")
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
