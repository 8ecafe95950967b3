"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import identities, tables
from .bijections import nu_forward, nu_inverse, omega_forward, omega_inverse, render_trace_table
from .enumeration import FAMILIES, cells
from .ferrers import OddFerrersGraph
from .partitions import DomainError, format_partition, parse_partition
from .sweep import MAX_N, sweep

OK, FAILED, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _emit(data, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE


def cmd_verify(args) -> int:
    if args.order < 0:
        return _fail("--order must be nonnegative")
    if args.name == "all":
        names = [e.name for e in identities.registry()]
    elif identities.lookup(args.name) is None:
        return _fail(f"unknown identity {args.name!r}; run 'mocktheta list' for the registry")
    else:
        names = [args.name]
    reports = identities.verify_many(names, args.order, jobs=args.jobs)
    ok = all(r.passed for r in reports)
    summary = f"{sum(r.passed for r in reports)}/{len(reports)} identities pass at order {args.order}"
    _emit({"reports": [r.to_json() for r in reports], "pass": ok}, args.format,
          "\n".join(str(r) for r in reports) + "\n" + summary)
    return OK if ok else FAILED


def cmd_list(args) -> int:
    entries = identities.registry()
    _emit([{"name": e.name, "anchor": e.anchor, "variables": e.variables} for e in entries], args.format,
          "\n".join(f"{e.name:<32} {e.anchor}" for e in entries))
    return OK


def cmd_table(args) -> int:
    data = tables.regenerate(args.which)
    problems = tables.check_table(args.which) if args.check else []
    if args.check:
        data["check"] = {"pass": not problems, "problems": problems}
    text = tables.render_table(args.which)
    if args.check:
        text += "\n" + ("\n".join(problems) if problems else "check: matches the embedded data")
    _emit(data, args.format, text)
    return FAILED if problems else OK


def cmd_figure(args) -> int:
    problems = tables.check_figure(args.which)
    spec = tables.expected()[f"figure{args.which}"]
    text = tables.render_figure(args.which)
    if problems:
        text += "\n" + "\n".join(problems)
    _emit({"family": spec["family"], "start": spec["start"], "image": spec["image"],
           "pass": not problems}, args.format, text)
    return FAILED if problems else OK


_MAPS = {
    ("forward", "omega"): omega_forward,
    ("inverse", "omega"): omega_inverse,
    ("forward", "nu"): nu_forward,
    ("inverse", "nu"): nu_inverse,
}


def cmd_map(args) -> int:
    try:
        obj = parse_partition(args.object)
        if args.direction == "inverse":
            obj = OddFerrersGraph(obj)
        image, trace = _MAPS[args.direction, args.family](obj)
    except (DomainError, ValueError) as exc:
        return _fail(str(exc))
    shown = str(image) if isinstance(image, OddFerrersGraph) else format_partition(image)
    if args.direction == "forward":
        symbol = "psi^-" if args.family == "omega" else "rho^-"
        body = render_trace_table(trace, symbol)
        body += f"\ndifferences: {trace.diffs.values}\n{image.render()}"
    else:
        body = "\n".join(f"{g}  h={h}" for g, h in trace.steps)
        body += f"\ndifferences: {trace.diffs.values}\nbuild: " + " -> ".join(format_partition(p) for p in trace.build)
    _emit({"image": list(image.shape if isinstance(image, OddFerrersGraph) else image),
           "trace": trace.to_json()}, args.format, f"{shown}\n{body}")
    return OK


def cmd_fuzz(args) -> int:
    if not 0 <= args.max_n <= MAX_N:
        return _fail(f"--max-n must lie in [0, {MAX_N}]")
    result = sweep(args.family, args.max_n, seed=args.seed, samples=args.samples)
    lines = [f"{args.family}: m={m} n={n} count={c}"
             for (m, n), c in sorted(result.counts.items(), key=lambda kv: (kv[0][1], kv[0][0]))]
    lines.append(f"{sum(result.counts.values())} partitions, {result.graphs_checked} graphs, "
                 f"{result.sampled} samples, {len(result.violations)} violations")
    lines += result.violations[:20]
    _emit(result.to_json(), args.format, "\n".join(lines))
    return OK if result.ok else FAILED


def cmd_enumerate(args) -> int:
    if args.family not in FAMILIES:
        return _fail(f"unknown family {args.family!r}; choose from {', '.join(sorted(FAMILIES))}")
    if not 0 <= args.max_n <= MAX_N:
        return _fail(f"--max-n must lie in [0, {MAX_N}]")
    found = cells(args.family, args.max_n)
    rows = []
    for (m, n), objs in found.items():
        if (args.m is not None and m != args.m) or (args.n is not None and n != args.n):
            continue
        rows.append({"m": m, "n": n, "members": [list(getattr(x, "shape", x)) for x in objs]})
    text = "\n".join(f"m={r['m']} n={r['n']} ({len(r['members'])}): "
                     + " ".join(format_partition(p) for p in r["members"]) for r in rows)
    _emit({"family": args.family, "cells": rows}, args.format, text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mocktheta", description="Mock theta identities and odd Ferrers graph bijections.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("verify", cmd_verify, "verify registered identities coefficient by coefficient")
    p.add_argument("name", help="identity name or 'all'")
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)

    add("list", cmd_list, "list registered identities")

    p = add("table", cmd_table, "regenerate a worked table")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--check", action="store_true", help="compare against the embedded data")

    p = add("figure", cmd_figure, "show the graph construction steps as text grids")
    p.add_argument("which", type=int, choices=(3, 4))

    p = add("map", cmd_map, "apply a bijection or its inverse")
    p.add_argument("direction", choices=("forward", "inverse"))
    p.add_argument("family", choices=("omega", "nu"))
    p.add_argument("object", help='partition or graph shape, "(a,b,c)" or "a,b,c"')

    p = add("fuzz", cmd_fuzz, "exhaustive round-trip and claim sweep")
    p.add_argument("family", choices=("omega", "nu"))
    p.add_argument("--max-n", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=0, help="extra random partitions above max-n")

    p = add("enumerate", cmd_enumerate, "list family members per (m, n) cell")
    p.add_argument("family")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
