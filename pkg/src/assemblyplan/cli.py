"""Command-line front end.

Exit codes: 0 success, 1 domain diagnostic, 2 parse/IO/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import dot
from .decomposition import max_pfd, project_along
from .hierarchy import StuckComponent, h_max_pfd
from .instructions import emit_plan, plan_to_dict, render_plan
from .model import ModelError, ModelGraph
from .modelfile import ParseError, load_model
from .oracle import MAX_BLOCKS, InstanceTooLarge, check_model

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


class _Usage(Exception):
    pass


def _fmt(comp: Sequence[int]) -> str:
    return "[" + ",".join(map(str, comp)) + "]"


def cmd_validate(args: argparse.Namespace) -> int:
    g = load_model(args.path)
    print(f"OK: {g.n} blocks, {g.m} connections, {g.p} directions")
    return EXIT_OK


def _decompose_one(g: ModelGraph, d: int) -> tuple[str, dict]:
    res = max_pfd(g, d)
    comps = [g.source_ids(c) for c in res.components]
    removed = sorted(g.source_pair(e) for e in res.removed)
    if res.k == 1:
        text = "1 component (no PFD along this direction)"
    else:
        text = (
            f"{res.k} components: "
            + " | ".join(_fmt(c) for c in comps)
            + "; removed: "
            + ", ".join(f"{u}->{v}" for u, v in removed)
        )
    data = {
        "direction": d,
        "vector": list(g.directions[d].vector),
        "components": comps,
        "removed": [list(p) for p in removed],
    }
    return text, data


def cmd_decompose(args: argparse.Namespace) -> int:
    g = load_model(args.path)
    if args.all_dirs:
        dirs = list(range(g.p))
    else:
        if not 0 <= args.dir < g.p:
            raise _Usage(f"--dir {args.dir} out of range (model has {g.p} directions)")
        dirs = [args.dir]
    results = [_decompose_one(g, d) for d in dirs]
    if args.format == "structured":
        print(json.dumps([data for _, data in results], indent=2))
    elif args.all_dirs:
        for d, (text, _) in zip(dirs, results):
            print(f"direction {d} {g.directions[d]}: {text}")
    else:
        print(results[0][0])
    return EXIT_OK


def cmd_instructions(args: argparse.Namespace) -> int:
    g = load_model(args.path)
    try:
        tree = h_max_pfd(g, strict=True)
    except StuckComponent as exc:
        blocks = "; ".join(_fmt(g.source_ids(c)) for c in exc.components)
        print(f"StuckComponent: no direction splits {blocks}", file=sys.stderr)
        return EXIT_DOMAIN
    plan = emit_plan(tree)
    if args.format == "structured":
        print(json.dumps(plan_to_dict(plan, g), indent=2))
    else:
        sys.stdout.write(render_plan(plan, g))
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = load_model(args.path)
    what, _, arg = args.what.partition(":")
    if what in ("projection", "ccg"):
        try:
            d = int(arg)
        except ValueError:
            raise _Usage(f"UnknownTarget: {args.what}") from None
        if not 0 <= d < g.p:
            raise _Usage(f"UnknownTarget: {args.what} (model has {g.p} directions)")
    if what == "model" and not arg:
        out = dot.model_dot(g)
    elif what == "projection":
        out = dot.digraph_dot(g, project_along(g, d), f"projection_d{d}")
    elif what == "ccg":
        out = dot.ccg_dot(g, max_pfd(g, d).ccg)
    elif what == "tree" and not arg:
        out = dot.tree_dot(g, h_max_pfd(g))
    else:
        raise _Usage(f"UnknownTarget: {args.what}")
    sys.stdout.write(out)
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    g = load_model(args.path)
    reports = check_model(g, args.max_blocks)
    ok = True
    for r in reports:
        status = "ok" if r.ok else "MISMATCH"
        print(
            f"direction {r.dir}: {r.candidates} candidates, "
            f"{len(r.disagreements)} disagreements, maximal partition {'matches' if r.maximal_ok else 'differs'} [{status}]"
        )
        ok &= r.ok
    print("all candidates agree" if ok else "oracle disagreement found")
    return EXIT_OK if ok else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assemblyplan",
        description="Physically feasible decomposition and assembly instructions for block models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a model file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("decompose", help="maximal PFD along one or all directions")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dir", type=int)
    group.add_argument("--all-dirs", action="store_true")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("instructions", help="step-by-step assembly plan")
    p.add_argument("path")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=cmd_instructions)

    p = sub.add_parser("export-dot", help="Graphviz description of a model view")
    p.add_argument("path")
    p.add_argument("--what", default="model", help="model | projection:<i> | ccg:<i> | tree")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("oracle-check", help="cross-check decompositions by brute force")
    p.add_argument("path")
    p.add_argument("--max-blocks", type=int, default=MAX_BLOCKS)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _Usage as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except ModelError as exc:
        for diag in exc.diagnostics:
            print(diag, file=sys.stderr)
        return EXIT_DOMAIN
    except InstanceTooLarge as exc:
        print(f"InstanceTooLarge: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
