"""Command-line interface.  Exit codes: 0 success, 1 mathematical failure, 2 usage or validation error."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructions import (
    choose_bound_vertex,
    fig4_witness,
    fig7_witness,
    psr_gap_construction,
    psr_wheel_construction,
    wheel_coloring_bound,
)
from .drawing import decode_drawing, encode_drawing, export_dot, validate_drawing
from .errors import PlaneSatError
from .graph import decode_graph, double_wheel, encode_graph, random_triangulation
from .harness import CASES, run_case
from .saturation import is_labeled_saturated, is_unlabeled_saturated
from .search import min_labeled_saturated, min_unlabeled_saturated


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _sidecar(out, tag):
    p = Path(out)
    return p.with_name(f"{p.stem}.{tag}.json")


def _write(path, data):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_bytes(data if isinstance(data, bytes) else data.encode())


def _dump(obj):
    return json.dumps(obj, indent=1) + "\n"


def _read_graph(path):
    return decode_graph(Path(path).read_bytes())


def _read_drawing(path):
    d = decode_drawing(Path(path).read_bytes())
    problems = validate_drawing(d)
    if problems:
        raise UsageError(f"{path}: {problems[0]}")
    return d


def _emit(args, obj, default=None):
    text = _dump(obj)
    if getattr(args, "out", None) or default:
        _write(args.out or default, text)
    sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------

def cmd_gen(args):
    kind = args.kind
    if kind in ("double-wheel", "triangulation"):
        if kind == "double-wheel":
            g, d = double_wheel(args.n)
        else:
            g, d = random_triangulation(args.n, seed=args.seed, flips=args.flips)
        out = args.out or f"{kind}-{args.n}.json"
        _write(out, encode_graph(g))
        _write(_sidecar(out, "drawing"), encode_drawing(d))
        print(f"{out}: n={g.n} edges={len(g.edges)}")
        return 0
    h = fig7_witness(args.n) if kind == "fig7" else fig4_witness(args.n)
    g, _ = double_wheel(args.n)
    out = args.out or f"{kind}-{args.n}.json"
    _write(out, encode_drawing(h))
    _write(_sidecar(out, "host"), encode_graph(g))
    print(f"{out}: n={h.n} edges={len(h.edges)}")
    return 0


def cmd_check(args):
    g = _read_graph(args.host)
    h = _read_drawing(args.drawing)
    check = is_labeled_saturated if args.rule == "labeled" else is_unlabeled_saturated
    rep = check(h, g)
    _emit(args, rep.to_json())
    return 0


def cmd_minimize(args):
    g = _read_graph(args.host)
    run = min_labeled_saturated if args.rule == "labeled" else min_unlabeled_saturated
    res = run(g, budget=args.budget, jobs=args.jobs)
    obj = res.to_json(len(g.edges))
    obj["rule"] = args.rule
    _emit(args, obj)
    return 0


def cmd_bound(args):
    g = _read_graph(args.host)
    d = _read_drawing(args.embedding)
    if d.edges != g.edges:
        raise UsageError("the embedding does not draw the host graph")
    if args.kind == "wheel-coloring":
        v = choose_bound_vertex(g) if args.vertex is None else args.vertex
        if not 0 <= v < g.n:
            raise UsageError(f"vertex {v} outside [0, {g.n})")
        h, rep = wheel_coloring_bound(g, d, v)
    elif args.kind == "psr-wheel":
        h, rep = psr_wheel_construction(g, d)
    else:
        h, rep = psr_gap_construction(g, d, args.c1, step_budget=args.step_budget)
    out = args.out or f"{args.kind}.json"
    _write(out, encode_drawing(h))
    _write(_sidecar(out, "report"), _dump(rep.to_json()))
    sys.stdout.write(_dump(rep.to_json()))
    return 0 if rep.bound_satisfied else 1


def cmd_export(args):
    h = _read_drawing(args.drawing)
    text = export_dot(h)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args):
    ids = list(CASES) if args.case == "all" else [args.case]
    if args.case != "all" and args.case not in CASES:
        raise UsageError(f"unknown case {args.case!r}; choose from: all, {', '.join(CASES)}")
    outdir = args.out or "verify-evidence"
    status = 0
    summary = []
    for cid in ids:
        case = run_case(cid, outdir=outdir, scale=args.scale)
        print(f"{cid}: {case.verdict} ({case.seconds:.1f}s)")
        for c in case.checks:
            if not c["ok"]:
                print(f"  failed: {c['check']}")
        if case.error:
            print(f"  error: {case.error.splitlines()[0]}")
        if case.verdict != "pass":
            status = 1
        summary.append({"id": cid, "verdict": case.verdict})
    _write(Path(outdir) / "summary.json", _dump(summary))
    return status


def build_parser():
    p = _Parser(prog="planesat", description="Plane-saturated subgraphs of maximal planar graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate hosts and witness drawings")
    gen.add_argument("kind", choices=["double-wheel", "triangulation", "fig7", "fig4"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--flips", type=int, default=None)
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    chk = sub.add_parser("check", help="saturation check of a drawing against a host")
    chk.add_argument("rule", choices=["labeled", "unlabeled"])
    chk.add_argument("--host", required=True)
    chk.add_argument("--drawing", required=True)
    chk.add_argument("--out")
    chk.set_defaults(func=cmd_check)

    mn = sub.add_parser("minimize", help="exhaustive minimum saturated drawing")
    mn.add_argument("rule", choices=["labeled", "unlabeled"])
    mn.add_argument("--host", required=True)
    mn.add_argument("--budget", type=int, default=None)
    mn.add_argument("--jobs", type=int, default=1)
    mn.add_argument("--out")
    mn.set_defaults(func=cmd_minimize)

    bd = sub.add_parser("bound", help="run an upper-bound construction")
    bd.add_argument("kind", choices=["wheel-coloring", "psr-wheel", "psr-gap"])
    bd.add_argument("--host", required=True)
    bd.add_argument("--embedding", required=True)
    bd.add_argument("--vertex", type=int, default=None)
    bd.add_argument("--c1", type=float, default=None)
    bd.add_argument("--step-budget", type=int, default=None)
    bd.add_argument("--out")
    bd.set_defaults(func=cmd_bound)

    ex = sub.add_parser("export", help="export a drawing")
    ex.add_argument("format", choices=["dot"])
    ex.add_argument("--drawing", required=True)
    ex.add_argument("--out")
    ex.set_defaults(func=cmd_export)

    vf = sub.add_parser("verify", help="run verification cases")
    vf.add_argument("case")
    vf.add_argument("--scale", choices=["desk"], default="desk")
    vf.add_argument("--out", help="evidence directory (default verify-evidence)")
    vf.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "kind", None) == "psr-gap" and args.c1 is None:
            raise UsageError("bound psr-gap requires --c1")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except (UsageError, PlaneSatError, OSError) as exc:
        msg = " ".join(str(exc).split())
        print(f"planesat: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
