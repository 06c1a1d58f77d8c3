"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (reported as
``{"error": {"code", "message"}}`` on stdout in JSON mode), 2 on usage errors.
JSON arguments may be inline text or file paths.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import io
from .dt import (
    FaceCoord,
    GlobalCoord,
    build_datum,
    datum_from_json,
    datum_to_json,
    decompose_face_coord,
    global_violation,
    lambda_violation,
    normalize_matched,
    split_coordinates,
)
from .errors import MalformedData, SkeinError
from .pants import trace_component, trace_multicurve
from .presented import (
    SIGMA03_CONVENTION,
    monogon_filtration_rank,
    sigma02_mul,
    sigma03_convention_holds,
)
from .surface import dual_graph_form, global_form, gk_dimension, phi, phi_lead_check
from .torus import reflection, symplectic_double, weyl_normalize
from .triangulation import (
    cut_edge,
    doubled_matrix,
    face_matrix,
    lambda_delta_rank,
    lambda_delta_violation,
)
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise MalformedData(f"expected comma-separated integers, got {text!r}") from None


def _word(text: str) -> list[tuple[str, int]]:
    out = []
    for part in text.split(","):
        name, _, power = part.strip().partition(":")
        out.append((name, int(power) if power else 1))
    return out


def _datum(args: argparse.Namespace):
    if getattr(args, "datum", None):
        return datum_from_json(io.load_json_arg(args.datum))
    if getattr(args, "builtin", None):
        g, m = _ints(args.builtin)
        return build_datum(g, m)
    raise UsageError("give --datum FILE or --builtin g,m")


def _family(D, text: str):
    obj = io.load_json_arg(text)
    if not isinstance(obj, list):
        raise MalformedData("a family is a JSON list of face diagrams")
    return tuple(io.diagram_from_json(d) for d in obj)


# -- handlers ------------------------------------------------------------------------

def cmd_torus(args: argparse.Namespace) -> tuple[Any, Any]:
    form = io.form_from_json(io.load_json_arg(args.form))
    if args.op == "double":
        f = symplectic_double(form)
        return io.form_to_json(f), None
    if args.op == "weyl":
        if not args.word:
            raise UsageError("weyl needs --word g:p,g:p,...")
        e = weyl_normalize(form, _word(args.word))
        return io.element_to_json(e), e
    if not args.a:
        raise UsageError(f"{args.op} needs --a")
    a = io.element_from_json(io.load_json_arg(args.a), form)
    if args.op == "reflect":
        e = reflection(a)
        return io.element_to_json(e), e
    if not args.b:
        raise UsageError("mul needs --b")
    b = io.element_from_json(io.load_json_arg(args.b), form)
    e = a * b
    return io.element_to_json(e), e


def cmd_presented(args: argparse.Namespace) -> tuple[Any, Any]:
    if args.op == "monogon-rank":
        if args.k is None:
            raise UsageError("monogon-rank needs --k")
        return {"k": args.k, "rank": monogon_filtration_rank(args.k)}, None
    if args.op == "sigma03-check":
        out = {c: sigma03_convention_holds(c) for c in ("i+1", "i+2")}
        return {"conventions": out, "adopted": SIGMA03_CONVENTION}, None
    if not (args.a and args.b):
        raise UsageError(f"{args.op} needs --a and --b")
    if args.op == "monogon-mul":
        x = io.monogon_from_json(io.load_json_arg(args.a)) * io.monogon_from_json(io.load_json_arg(args.b))
        return io.monogon_to_json(x), x
    x = sigma02_mul(io.sigma02_from_json(io.load_json_arg(args.a)),
                    io.sigma02_from_json(io.load_json_arg(args.b)))
    return io.sigma02_to_json(x), x


def cmd_tri(args: argparse.Namespace) -> tuple[Any, Any]:
    T = io.triangulation_from_json(io.load_json_arg(args.tri))
    if args.op == "matrix":
        f = doubled_matrix(T) if args.doubled else face_matrix(T)
        return io.form_to_json(f), None
    if args.op == "rank":
        return {"rank": lambda_delta_rank(T), "coordinates": list(T.tilde)}, None
    if args.op == "member":
        if not args.n:
            raise UsageError("member needs --n")
        n = io.load_json_arg(args.n) if args.n.strip()[:1] in "{[" else _ints(args.n)
        why = lambda_delta_violation(T, n)
        return {"member": why is None, "reason": why}, None
    if not args.edge:
        raise UsageError("cut needs --edge")
    cut = cut_edge(T, args.edge)
    return {"triangulation": io.triangulation_to_json(cut.triangulation),
            "H": [list(r) for r in cut.H], "new_edges": [cut.first, cut.second]}, None


def cmd_coords(args: argparse.Namespace) -> tuple[Any, Any]:
    if args.op == "normalize":
        D = _datum(args)
        if not args.family:
            raise UsageError("normalize needs --family")
        fam = normalize_matched(D, _family(D, args.family))
        return [io.diagram_to_json(d) for d in fam], None
    if args.n is None or args.t is None:
        raise UsageError(f"{args.op} needs --n and --t")
    n, t = _ints(args.n), _ints(args.t)
    if args.op == "split":
        pieces = split_coordinates(_datum(args), GlobalCoord(n, t))
        return [io.face_coord_to_json(p) for p in pieces], None
    if args.op == "member" and (args.datum or args.builtin):
        why = global_violation(_datum(args), GlobalCoord(n, t))
        return {"member": why is None, "reason": why}, None
    if args.type is None:
        raise UsageError(f"{args.op} needs --type")
    c = FaceCoord(args.type, n, t)
    if args.op == "member":
        why = lambda_violation(args.type, c)
        return {"member": why is None, "reason": why}, None
    return io.diagram_to_json(decompose_face_coord(args.type, c)), None


def cmd_trace(args: argparse.Namespace) -> tuple[Any, Any]:
    if args.op == "pants":
        if args.type is None or not args.component:
            raise UsageError("pants needs --type and --component")
        parts = _ints(args.twist)
        if not parts:
            raise MalformedData("--twist needs an integer")
        twist: int | tuple[int, ...] = parts if "," in args.twist else parts[0]
        e = trace_component(args.type, args.component, twist)
        return io.element_to_json(e), e
    if not args.diagram:
        raise UsageError("multicurve needs --diagram")
    d = io.diagram_from_json(io.load_json_arg(args.diagram))
    e = trace_multicurve(d.face_type, d)
    return io.element_to_json(e), e


def cmd_surface(args: argparse.Namespace) -> tuple[Any, Any]:
    D = _datum(args)
    if args.op == "qmatrix":
        return {"dual": io.form_to_json(dual_graph_form(D)),
                "doubled": io.form_to_json(global_form(D)),
                "datum": datum_to_json(D)}, None
    if args.op == "gkdim":
        return {"g": D.g, "m": D.m, "gkdim": gk_dimension(D)}, None
    if not args.family:
        raise UsageError(f"{args.op} needs --family")
    fam = _family(D, args.family)
    if args.op == "lead-check":
        return {"lead_check": phi_lead_check(D, fam)}, None
    e = phi(D, fam)
    return io.element_to_json(e), e


def cmd_verify(args: argparse.Namespace) -> tuple[Any, Any]:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)} or all")
    results = [run_suite(n, args.seed) for n in names]
    out = {"seed": args.seed,
           "suites": [{"name": r.name, "ok": r.ok, "passed": r.passed, "total": r.total,
                       "notes": r.notes} for r in results]}
    return out, "\n".join(r.line() for r in results)


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "latex"), default="json")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized suites (falls back to SKEIN_TORUS_SEED, then 0)")

    p = _Parser(prog="skein-torus", description="Quantum tori, pants traces and skein coordinates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("torus", parents=[common], help="quantum torus arithmetic")
    t.add_argument("op", choices=("mul", "weyl", "reflect", "double"))
    t.add_argument("--form", required=True)
    t.add_argument("--a")
    t.add_argument("--b")
    t.add_argument("--word", help="g:p,g:p,... for weyl")
    t.set_defaults(handler=cmd_torus)

    pr = sub.add_parser("presented", parents=[common], help="monogon and small sphere algebras")
    pr.add_argument("op", choices=("monogon-mul", "monogon-rank", "sigma02-mul", "sigma03-check"))
    pr.add_argument("--a")
    pr.add_argument("--b")
    pr.add_argument("--k", type=int)
    pr.set_defaults(handler=cmd_presented)

    tr = sub.add_parser("tri", parents=[common], help="triangulations")
    tr.add_argument("op", choices=("matrix", "member", "rank", "cut"))
    tr.add_argument("--tri", required=True)
    tr.add_argument("--doubled", action="store_true")
    tr.add_argument("--n")
    tr.add_argument("--edge")
    tr.set_defaults(handler=cmd_tri)

    co = sub.add_parser("coords", parents=[common], help="Dehn-Thurston coordinates")
    co.add_argument("op", choices=("member", "decompose", "split", "normalize"))
    co.add_argument("--type", type=int, choices=(1, 2, 3))
    co.add_argument("--n")
    co.add_argument("--t")
    co.add_argument("--datum")
    co.add_argument("--builtin", help="g,m for the standard datum")
    co.add_argument("--family")
    co.set_defaults(handler=cmd_coords)

    tc = sub.add_parser("trace", parents=[common], help="pants traces")
    tc.add_argument("op", choices=("pants", "multicurve"))
    tc.add_argument("--type", type=int, choices=(1, 2, 3))
    tc.add_argument("--component")
    tc.add_argument("--twist", default="0", help="integer or comma-separated per-side powers")
    tc.add_argument("--diagram")
    tc.set_defaults(handler=cmd_trace)

    su = sub.add_parser("surface", parents=[common], help="global torus and phi")
    su.add_argument("op", choices=("qmatrix", "phi", "gkdim", "lead-check"))
    su.add_argument("--datum")
    su.add_argument("--builtin", help="g,m for the standard datum")
    su.add_argument("--family")
    su.set_defaults(handler=cmd_surface)

    ve = sub.add_parser("verify", parents=[common], help="run named property suites")
    ve.add_argument("--suite", required=True, help=f"one of {', '.join(sorted(SUITES))}, or all")
    ve.set_defaults(handler=cmd_verify)
    return p


def _resolve_seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("SKEIN_TORUS_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"SKEIN_TORUS_SEED must be an integer, got {env!r}") from None
    return 0


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args: argparse.Namespace | None = None
    try:
        args = parser.parse_args(argv)
        args.seed = _resolve_seed(args.seed)
        payload, rich = args.handler(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except SkeinError as exc:
        if args is None or args.format == "json":
            _emit(io.dumps({"error": {"code": exc.code, "message": str(exc)}}),
                  args.out if args else None)
        else:
            sys.stderr.write(f"error [{exc.code}]: {exc}\n")
        return 1
    if args.format == "latex":
        if isinstance(rich, str):
            text = rich
        elif rich is None:
            sys.stderr.write("usage error: this command has no LaTeX rendering; use --format json\n")
            return 2
        else:
            text = io.emit_latex(rich)
    else:
        text = io.dumps(payload)
    _emit(text, args.out)
    if args.command == "verify" and not all(r["ok"] for r in payload["suites"]):
        return 1
    return 0


def main() -> None:
    sys.exit(run())
