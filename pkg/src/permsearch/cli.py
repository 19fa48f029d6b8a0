"""Command-line front end: solve, bsgs, and bench subcommands.

Problem files are JSON: {"degree": n, "constraints": [...]} with points
1-based; see constraint_from_json for the accepted constraint objects.

Bench suites come either from generator flags (--family and friends) or
from a suite JSON file given with --suite.  A suite file is one of:

* {"problems": [...], "modes": [...]} with fully spelled-out problem
  records as produced by ProblemSpec.to_json, or
* {"family": "grid" | "subdirect" | "wreath", ...} with the same
  parameters the generator flags take (tasks/sizes/factors/count/modes).

Exit codes: 0 success (solve found an element, or enumeration/bsgs
completed), 1 solve found the instance empty, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench
from .perms import perm_to_images_1based
from .refiners import constraint_from_json
from .search import MODES, SearchConfig, search_all, search_bsgs, search_single

DEFAULT_MODES = "leon,orbital,strong"


def _load_problem(path: str):
    with open(path) as fh:
        obj = json.load(fh)
    degree = obj["degree"]
    constraints = [constraint_from_json(c, degree) for c in obj["constraints"]]
    return degree, constraints


def _emit(payload: dict, out_path):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_solve(args) -> int:
    degree, constraints = _load_problem(args.infile)
    config = SearchConfig.from_mode(args.mode, node_limit=args.node_limit)
    if args.all:
        out = search_all(constraints, config)
    else:
        out = search_single(constraints, config)
    elements = [perm_to_images_1based(g) for g in out.elements]
    _emit(
        {
            "degree": degree,
            "elements": elements,
            "found": bool(elements),
            "nodes": out.stats.nodes,
        },
        args.out,
    )
    return 0 if elements else 1


def _cmd_bsgs(args) -> int:
    degree, constraints = _load_problem(args.infile)
    config = SearchConfig.from_mode(args.mode, node_limit=args.node_limit)
    out = search_bsgs(constraints, config)
    _emit(
        {
            "degree": degree,
            "base": [b + 1 for b in out.base_points],
            "gens": [perm_to_images_1based(g) for g in out.strong_gens],
            "order": str(out.order),
            "nodes": out.stats.nodes,
        },
        args.out,
    )
    return 0


def _parse_ints(text) -> list:
    if isinstance(text, list):
        return [int(x) for x in text]
    return [int(x) for x in str(text).split(",") if x]


def _family_specs(family, tasks, sizes, factors, count, seed) -> list:
    if family == "grid":
        task_list = tasks if isinstance(tasks, list) else [t for t in tasks.split(",") if t]
        return bench.grid_suite(task_list, _parse_ints(sizes), count, seed)
    if family == "subdirect":
        return bench.subdirect_suite(_parse_ints(factors), _parse_ints(sizes), count, seed)
    if family == "wreath":
        return bench.wreath_suite(_parse_ints(sizes), _parse_ints(factors), count, seed)
    raise ValueError("unknown bench family %r" % family)


def _suite_from_file(path: str, seed: int):
    with open(path) as fh:
        obj = json.load(fh)
    modes = obj.get("modes")
    if "problems" in obj:
        specs = [bench.ProblemSpec.from_json(p) for p in obj["problems"]]
        return specs, modes
    specs = _family_specs(
        obj["family"],
        obj.get("tasks", "grid_setstab,grid_rowstab,grid_halves"),
        obj.get("sizes", "3,4"),
        obj.get("factors", "2"),
        obj.get("count", 10),
        obj.get("seed", seed),
    )
    return specs, modes


def _cmd_bench(args) -> int:
    if args.suite:
        specs, suite_modes = _suite_from_file(args.suite, args.seed)
    else:
        specs = _family_specs(
            args.family, args.tasks, args.sizes, args.factors, args.count, args.seed
        )
        suite_modes = None
    mode_text = args.modes or ",".join(suite_modes or []) or DEFAULT_MODES
    modes = [m for m in mode_text.split(",") if m]
    for m in modes:
        if m not in MODES:
            raise ValueError("unknown mode %r (choose from %s)" % (m, sorted(MODES)))
    rows = bench.run_suite(specs, modes, jobs=args.jobs)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(bench.rows_to_csv(rows))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(bench.report_json(rows))
    for line in bench.summarize(rows):
        sys.stdout.write(
            "%-28s %-8s n=%-4d mean=%-10.3f median=%-8.1f zero%%=%.1f\n"
            % (
                line["label"],
                line["mode"],
                line["instances"],
                line["mean_nodes"],
                line["median_nodes"],
                line["zero_pct"],
            )
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permsearch")
    sub = p.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="find one (or all) permutations meeting every constraint")
    solve.add_argument("--in", dest="infile", required=True, help="path to a problem JSON file")
    solve.add_argument("--mode", default="strong", choices=sorted(MODES))
    solve.add_argument("--all", action="store_true", help="enumerate every solution")
    solve.add_argument("--node-limit", type=int, default=None)
    solve.add_argument("--out", default=None, help="write the result JSON here")
    solve.set_defaults(func=_cmd_solve)

    bsgs = sub.add_parser("bsgs", help="compute base and strong generators for a group-type problem")
    bsgs.add_argument("--in", dest="infile", required=True)
    bsgs.add_argument("--mode", default="strong", choices=sorted(MODES))
    bsgs.add_argument("--node-limit", type=int, default=None)
    bsgs.add_argument("--out", default=None)
    bsgs.set_defaults(func=_cmd_bsgs)

    bn = sub.add_parser("bench", help="run a benchmark suite and summarize node counts")
    bn.add_argument("--suite", default=None, help="suite JSON file; overrides family flags")
    bn.add_argument("--family", choices=["grid", "subdirect", "wreath"], default="grid")
    bn.add_argument("--tasks", default="grid_setstab,grid_rowstab,grid_halves")
    bn.add_argument("--sizes", default="3,4", help="comma-separated n (grid/subdirect) or m (wreath)")
    bn.add_argument("--factors", default="2", help="comma-separated k (subdirect) or d (wreath)")
    bn.add_argument("--count", type=int, default=10, help="instances per cell")
    bn.add_argument("--modes", default=None, help="default %s" % DEFAULT_MODES)
    bn.add_argument("--seed", type=int, default=0)
    bn.add_argument("--jobs", type=int, default=1)
    bn.add_argument("--out", default=None, help="write per-instance rows as CSV here")
    bn.add_argument("--json", default=None, help="write rows plus summary as JSON here")
    bn.set_defaults(func=_cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
