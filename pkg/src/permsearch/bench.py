"""Benchmark problem generators, runners, and report writers.

Three problem families at desk scale:

* grid: stabiliser problems over the row-and-column group of an n-by-n
  grid (order (n!)^2): ``grid_setstab`` stabilises a random cell subset
  of size n^2//2, ``grid_rowstab`` stabilises a random subset with
  n//2 cells in each grid row, and ``grid_halves`` (even n) computes
  the stabiliser of a random split of the cells into two equal halves,
  posed with both the partition-membership refiner and the group
  refiner for the half-swapping wreath-type stabiliser.

* subdirect: emptiness of the intersection of right cosets of two
  proper subdirect products of k transitive groups of degree n, acting
  on k*n points.  Coset representatives are random elements of the
  ambient direct product, so they preserve the n-point blocks.

* wreath: the intersection of two randomly conjugated copies of the
  imprimitive wreath group on d blocks of m points.

Every instance is derived from (task, parameters, index, base seed) via
a hash, so suites regenerate identically run to run; reports carry no
timing and rerun byte-identical.

Instances at degree 7 or below are verified against the brute-force
oracle as they run; a mismatch is a hard error.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from statistics import mean, median

from .chain import StabChain
from .groups import grid_gens, partition_wreath_gens, transitive_catalog, wreath_gens
from .oracle import brute_solve
from .perms import Perm, perm_to_images_1based
from .prng import SplitMix64
from .refiners import (
    GroupByGens,
    RightCoset,
    SetOfSetsStab,
    SetStab,
    constraint_from_json,
)
from .search import SearchConfig, SearchLimitExceeded, search_bsgs, search_single

SUBDIRECT_RETRY_CAP = 50


class RetryExhausted(Exception):
    pass


@dataclass
class ProblemSpec:
    task: str
    label: str
    degree: int
    index: int
    goal: str  # "single" or "bsgs"
    constraints: list

    def to_json(self) -> dict:
        return {
            "task": self.task,
            "label": self.label,
            "degree": self.degree,
            "index": self.index,
            "goal": self.goal,
            "constraints": [c.to_json() for c in self.constraints],
        }

    @staticmethod
    def from_json(obj) -> "ProblemSpec":
        degree = obj["degree"]
        return ProblemSpec(
            task=obj["task"],
            label=obj["label"],
            degree=degree,
            index=obj["index"],
            goal=obj["goal"],
            constraints=[constraint_from_json(c, degree) for c in obj["constraints"]],
        )


def _instance_seed(task: str, params: str, index: int, base_seed: int) -> int:
    text = "%s|%s|%d|%d" % (task, params, index, base_seed)
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


def grid_problem(task: str, n: int, index: int, base_seed: int = 0) -> ProblemSpec:
    rng = SplitMix64(_instance_seed(task, "n=%d" % n, index, base_seed))
    degree = n * n
    group = GroupByGens(degree, grid_gens(n))
    label = "%s n=%d" % (task, n)
    if task == "grid_setstab":
        cells = frozenset(rng.sample(range(degree), degree // 2))
        return ProblemSpec(task, label, degree, index, "bsgs", [group, SetStab(degree, cells)])
    if task == "grid_rowstab":
        # n//2 cells in each grid row
        cells = []
        for row in range(n):
            cells.extend(row * n + c for c in rng.sample(range(n), n // 2))
        return ProblemSpec(
            task, label, degree, index, "bsgs", [group, SetStab(degree, frozenset(cells))]
        )
    if task == "grid_halves":
        if n % 2:
            raise ValueError("grid_halves needs even n")
        half = frozenset(rng.sample(range(degree), degree // 2))
        rest = frozenset(range(degree)) - half
        # unordered-partition stabiliser: the membership refiner plus the
        # group refiner for the two-cell wreath-type stabiliser itself
        cells = [half, rest]
        stab = GroupByGens(degree, partition_wreath_gens(cells, degree))
        return ProblemSpec(
            task, label, degree, index, "bsgs",
            [group, SetOfSetsStab(degree, cells), stab],
        )
    raise ValueError("unknown grid task %r" % task)


def _block_perm(parts, n: int) -> Perm:
    images = []
    for i, p in enumerate(parts):
        images.extend(i * n + p(x) for x in range(n))
    return Perm(tuple(images))


def _random_subdirect_gens(rng: SplitMix64, k: int, n: int, max_samples: int = 8):
    """Generators of a proper subdirect product of k transitive groups.

    Picks k transitive groups of degree n (each conjugated by a random
    permutation), then accumulates random elements of their direct
    product until the generated subgroup projects onto every factor.
    Draws where that subgroup is the whole direct product are abandoned
    and restarted with fresh factors, up to SUBDIRECT_RETRY_CAP tries.
    Returns the generators together with the factor chains.
    """
    if k < 2:
        raise ValueError("subdirect product needs k >= 2 factors")
    catalog = transitive_catalog(n)
    for _ in range(SUBDIRECT_RETRY_CAP):
        chains = []
        for _ in range(k):
            _, gens = catalog[rng.randbelow(len(catalog))]
            t = Perm(rng.perm_images(n))
            chains.append(StabChain.build([g.conj(t) for g in gens], n))
        full_order = 1
        for c in chains:
            full_order *= c.order()
        gens = []
        parts_so_far = [[] for _ in range(k)]
        for _ in range(max_samples):
            parts = [c.random_element(rng.randbelow) for c in chains]
            gens.append(_block_perm(parts, n))
            for i in range(k):
                parts_so_far[i].append(parts[i])
            surjective = all(
                StabChain.build(parts_so_far[i], n).order() == chains[i].order()
                for i in range(k)
            )
            if not surjective:
                continue
            if StabChain.build(gens, k * n).order() < full_order:
                return gens, chains
            break  # whole direct product: abandon, redraw factors
    raise RetryExhausted(
        "no proper subdirect product in %d tries for k=%d n=%d"
        % (SUBDIRECT_RETRY_CAP, k, n)
    )


def _ambient_rep(rng: SplitMix64, chains, n: int) -> Perm:
    """A random element of the ambient direct product; block-preserving."""
    parts = [c.random_element(rng.randbelow) for c in chains]
    return _block_perm(parts, n)


def subdirect_problem(k: int, n: int, index: int, base_seed: int = 0) -> ProblemSpec:
    task = "subdirect_cosets"
    rng = SplitMix64(_instance_seed(task, "k=%d,n=%d" % (k, n), index, base_seed))
    degree = k * n
    gens1, chains1 = _random_subdirect_gens(rng, k, n)
    gens2, chains2 = _random_subdirect_gens(rng, k, n)
    rep1 = _ambient_rep(rng, chains1, n)
    rep2 = _ambient_rep(rng, chains2, n)
    label = "%s k=%d n=%d" % (task, k, n)
    return ProblemSpec(
        task, label, degree, index, "single",
        [RightCoset(degree, gens1, rep1), RightCoset(degree, gens2, rep2)],
    )


def wreath_problem(m: int, d: int, index: int, base_seed: int = 0) -> ProblemSpec:
    """Intersection of two randomly conjugated copies of the block wreath group."""
    task = "wreath_intersect"
    rng = SplitMix64(_instance_seed(task, "m=%d,d=%d" % (m, d), index, base_seed))
    degree = m * d
    gens = wreath_gens(m, d)
    t1 = Perm(rng.perm_images(degree))
    t2 = Perm(rng.perm_images(degree))
    label = "%s m=%d d=%d" % (task, m, d)
    return ProblemSpec(
        task, label, degree, index, "bsgs",
        [
            GroupByGens(degree, [g.conj(t1) for g in gens]),
            GroupByGens(degree, [g.conj(t2) for g in gens]),
        ],
    )


def run_problem(spec: ProblemSpec, mode: str, node_limit: int = None) -> dict:
    config = SearchConfig.from_mode(mode, node_limit=node_limit)
    row = {
        "task": spec.task,
        "label": spec.label,
        "degree": spec.degree,
        "index": spec.index,
        "mode": mode,
    }
    try:
        if spec.goal == "bsgs":
            out = search_bsgs(spec.constraints, config)
            row["nodes"] = out.stats.nodes
            row["result"] = str(out.order)
        else:
            out = search_single(spec.constraints, config)
            row["nodes"] = out.stats.nodes
            g = out.first
            row["result"] = (
                ""
                if g is None
                else json.dumps(perm_to_images_1based(g), separators=(",", ":"))
            )
    except SearchLimitExceeded as exc:
        row["nodes"] = exc.stats.nodes
        row["result"] = "abort"
        return row
    if spec.degree <= 7:
        _verify_row(spec, out)
    return row


def _verify_row(spec: ProblemSpec, out) -> None:
    # at oracle-sized degrees every instance is cross-checked as it runs
    expected = brute_solve(spec.constraints, spec.degree)
    if spec.goal == "bsgs":
        ok = out.order == len(expected) and all(out.chain.contains(g) for g in expected)
    else:
        g = out.first
        ok = (g in expected) if expected else (g is None)
    if not ok:
        raise RuntimeError(
            "oracle mismatch on %s #%d (%s)" % (spec.label, spec.index, spec.goal)
        )


def _run_json(args) -> dict:
    spec_obj, mode = args
    return run_problem(ProblemSpec.from_json(spec_obj), mode)


def run_suite(specs, modes, jobs: int = 1) -> list:
    """Run every spec under every mode; rows come back in a fixed order."""
    work = [(spec.to_json(), mode) for spec in specs for mode in modes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_json, work, chunksize=1))
    else:
        rows = [_run_json(w) for w in work]
    rows.sort(key=lambda r: (r["task"], r["label"], r["degree"], r["index"], r["mode"]))
    return rows


def summarize(rows) -> list:
    """Per (label, mode) node-count statistics."""
    groups: dict = {}
    for r in rows:
        groups.setdefault((r["label"], r["mode"]), []).append(r["nodes"])
    out = []
    for (label, mode), nodes in sorted(groups.items()):
        out.append(
            {
                "label": label,
                "mode": mode,
                "instances": len(nodes),
                "mean_nodes": round(mean(nodes), 3),
                "median_nodes": median(nodes),
                "total_nodes": sum(nodes),
                "zero_pct": round(100.0 * sum(1 for x in nodes if x == 0) / len(nodes), 1),
            }
        )
    return out


_CSV_FIELDS = ["task", "label", "degree", "index", "mode", "nodes", "result"]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def report_json(rows) -> str:
    doc = {"rows": rows, "summary": summarize(rows)}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def grid_suite(tasks, sizes, count: int, base_seed: int = 0) -> list:
    specs = []
    for task in tasks:
        for n in sizes:
            if task == "grid_halves" and n % 2:
                continue
            specs.extend(grid_problem(task, n, i, base_seed) for i in range(count))
    return specs


def subdirect_suite(ks, sizes, count: int, base_seed: int = 0) -> list:
    return [
        subdirect_problem(k, n, i, base_seed)
        for k in ks
        for n in sizes
        for i in range(count)
    ]


def wreath_suite(sizes, factors, count: int, base_seed: int = 0) -> list:
    return [
        wreath_problem(m, d, i, base_seed)
        for m in sizes
        for d in factors
        for i in range(count)
    ]
