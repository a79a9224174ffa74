"""Command-line front end: construct graphs, verify the construction suites,
measure statistics, sweep parameter grids, and convert graph files.

Output conventions: human summaries and JSON-lines records go to stdout;
tables go to CSV files.  CSV output is byte-identical across reruns of the
same invocation (timings are kept out of it).  Exit code 0 iff every check
in the invocation passed.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from . import __version__, analysis, colouring, constructions, randgraphs
from .dimacs import read_col, write_col
from .graphs import Graph, GraphError

CACHE_ENV = "DCL_CACHE_DIR"

STATISTICS = ("girth", "odd-girth", "cycle", "bunched", "density", "pathpairs", "colour")
VERIFY_SUITES = ("P4", "P5", "P6", "P7", "P9", "P10", "L8", "EQ1", "T1V", "T1E")


@dataclass
class ExperimentSpec:
    """Echoable description of one unit of work."""

    command: str
    construction: str | None = None
    params: dict = field(default_factory=dict)
    statistic: str | None = None
    options: dict = field(default_factory=dict)
    seed: int | None = None

    def to_json(self) -> dict:
        out = {"command": self.command}
        if self.construction:
            out["construction"] = self.construction
            out["params"] = self.params
        if self.statistic:
            out["statistic"] = self.statistic
        if self.options:
            out["options"] = self.options
        if self.seed is not None:
            out["seed"] = self.seed
        return out


@dataclass
class ResultRecord:
    """One measurement or check outcome, carrying enough to reproduce it."""

    spec: ExperimentSpec
    graph_summary: dict | None
    statistic: str | None
    values: dict
    bound: float | None = None
    passed: bool | None = None
    error: str | None = None
    duration_s: float = 0.0

    def to_json(self) -> dict:
        out = {
            "spec": self.spec.to_json(),
            "graph": self.graph_summary,
            "statistic": self.statistic,
            "values": self.values,
            "bound": self.bound,
            "passed": self.passed,
            "error": self.error,
            "seed": self.spec.seed,
            "version": __version__,
            "durationS": round(self.duration_s, 6),
        }
        return out

    def csv_row(self) -> dict:
        # flat, timing-free view for deterministic tables
        row: dict[str, Any] = {
            "command": self.spec.command,
            "construction": self.spec.construction or "",
            "params": _fmt_params(self.spec.params),
            "statistic": self.statistic or "",
            "seed": "" if self.spec.seed is None else self.spec.seed,
            "version": __version__,
        }
        summary = self.graph_summary or {}
        for key in ("n", "m", "maxDegree", "girth"):
            row[key] = _fmt_value(summary.get(key, ""))
        row["values"] = json.dumps(self.values, sort_keys=True)
        row["bound"] = _fmt_value(self.bound if self.bound is not None else "")
        row["passed"] = "" if self.passed is None else str(self.passed).lower()
        row["error"] = self.error or ""
        return row


CSV_FIELDS = [
    "command", "construction", "params", "statistic", "seed", "version",
    "n", "m", "maxDegree", "girth", "values", "bound", "passed", "error",
]


def _fmt_params(params: dict) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def _fmt_value(v: Any) -> str:
    if isinstance(v, float):
        if math.isinf(v):
            return "inf"
        return repr(v)
    return str(v)


def _graph_summary(g: Graph, with_girth: bool = True) -> dict:
    summary = {"n": g.n, "m": g.m, "maxDegree": g.max_degree}
    reg = g.regular_degree()
    summary["regular"] = reg if reg is not None else ""
    summary["bipartite"] = g.is_bipartite()
    if with_girth and g.n <= 5000:
        gg = analysis.girth(g)
        summary["girth"] = "inf" if math.isinf(gg) else gg
    else:
        summary["girth"] = ""
    return summary


# ---------------------------------------------------------------------------
# constructions registry

CONSTRUCTION_PARAMS = {
    "cycle-product": ("d", "t"),
    "cycle-3t": ("d", "t"),
    "pg": ("q",),
    "complete-bipartite": ("n", "m"),
    "iterated": ("d", "t"),
    "even-edge": ("d", "t"),
}


def build_construction(name: str, params: dict, caps: constructions.SizeCaps,
                       allow_t4: bool = False):
    """Returns (graph, label_json | None, extras dict)."""
    if name == "cycle-product":
        g, labels = constructions.cycle_product(params["d"], params["t"], caps=caps)
        return g, labels.to_label_json(), {}
    if name == "cycle-3t":
        g, labels = constructions.cycle_3t_product(params["d"], params["t"], caps=caps)
        return g, labels.to_label_json(), {}
    if name == "pg":
        ordering = constructions.projective_plane_incidence(params["q"])
        return ordering.graph, ordering.to_label_json(), {}
    if name == "complete-bipartite":
        g = constructions.complete_bipartite(params["n"], params["m"])
        return g, None, {}
    if name == "iterated":
        ordering = constructions.iterated_product(params["d"], params["t"], caps=caps)
        return ordering.graph, ordering.to_label_json(), {}
    if name == "even-edge":
        built = constructions.even_edge_construction(
            params["d"], params["t"], caps=caps, allow_t4=allow_t4
        )
        labels = built.ordering.to_label_json()
        labels["x"] = list(built.x_vertices)
        labels["y"] = list(built.y_vertices)
        return built.graph, labels, {"construction": built}
    raise constructions.ConstructionError(f"unknown construction {name!r}")


def materialize(name: str, params: dict, caps: constructions.SizeCaps) -> Graph:
    """Build a construction, consulting the DCL_CACHE_DIR graph cache."""
    cache_dir = os.environ.get(CACHE_ENV)
    if cache_dir:
        key = name + "-" + "-".join(f"{k}{params[k]}" for k in sorted(params))
        path = os.path.join(cache_dir, key + ".col")
        if os.path.exists(path):
            return read_col(path)
        g, _, _ = build_construction(name, params, caps)
        os.makedirs(cache_dir, exist_ok=True)
        write_col(g, path)
        return g
    g, _, _ = build_construction(name, params, caps)
    return g


# ---------------------------------------------------------------------------
# construct

def cmd_construct(args: argparse.Namespace) -> int:
    caps = constructions.SizeCaps(args.max_vertices, args.max_edges)
    params = _collect_params(args.name, args)
    g, labels, _ = build_construction(args.name, params, caps, allow_t4=args.allow_t4)

    out = args.out or (args.name + "-" + "-".join(f"{k}{v}" for k, v in sorted(params.items())) + ".col")
    write_col(g, out)
    if labels is not None:
        label_path = args.labels or (os.path.splitext(out)[0] + ".labels.json")
        constructions.write_label_sidecar(labels, label_path)

    summary = _graph_summary(g)
    bip = "yes" if summary["bipartite"] else "no"
    reg = summary["regular"] if summary["regular"] != "" else "-"
    print(f"wrote {out}: n={g.n} m={g.m} regular={reg} bipartite={bip}")
    return 0


def _collect_params(name: str, args: argparse.Namespace) -> dict:
    if name not in CONSTRUCTION_PARAMS:
        raise constructions.ConstructionError(f"unknown construction {name!r}")
    params = {}
    for key in CONSTRUCTION_PARAMS[name]:
        value = getattr(args, key, None)
        if value is None:
            raise constructions.ConstructionError(f"construction {name} requires --{key}")
        params[key] = value
    return params


# ---------------------------------------------------------------------------
# verify suites

def _parse_int_list(text: str | None, default: Sequence[int]) -> list[int]:
    if not text:
        return list(default)
    return [int(x) for x in text.split(",") if x]


def _check(rows: list[dict], params: dict, check: str, value, bound, ok: bool) -> bool:
    rows.append(
        {
            "params": _fmt_params(params),
            "check": check,
            "value": _fmt_value(value),
            "bound": _fmt_value(bound if bound is not None else ""),
            "passed": str(bool(ok)).lower(),
        }
    )
    return bool(ok)


def verify_p4(args) -> list[dict]:
    rows: list[dict] = []
    for d in _parse_int_list(args.d, [4, 6]):
        for t in _parse_int_list(args.t, [3, 4]):
            params = {"d": d, "t": t}
            g, labels = constructions.cycle_product(d, t)
            expect_n = t * (d // 2) ** t
            _check(rows, params, "vertices", g.n, expect_n, g.n == expect_n)
            _check(rows, params, "regular", g.regular_degree(), d, g.regular_degree() == d)
            ok, _ = colouring.verify_power_clique(g, t, "vertex", labels.block(0))
            _check(rows, params, "block0-power-clique", ok, True, ok)
            bip = g.is_bipartite()
            _check(rows, params, "bipartite-iff-even-t", bip, t % 2 == 0, bip == (t % 2 == 0))
            if t % 2:
                og = analysis.odd_girth(g)
                _check(rows, params, "odd-girth", og, t, og == t)
    return rows


def verify_p5(args) -> list[dict]:
    rows: list[dict] = []
    for q in _parse_int_list(args.q, [2, 3]):
        params = {"q": q}
        ordering = constructions.projective_plane_incidence(q)
        g = ordering.graph
        d = q + 1
        count = q * q + q + 1
        _check(rows, params, "part-size", len(ordering.part_a), count, len(ordering.part_a) == count)
        _check(rows, params, "regular", g.regular_degree(), d, g.regular_degree() == d)
        _check(rows, params, "edges", g.m, count * d, g.m == count * d)
        gg = analysis.girth(g)
        _check(rows, params, "girth", gg, 6, gg == 6)
        # every two points lie on exactly one common line
        common_ok = all(
            sum(1 for l in ordering.part_b if g.adjacent(p1, l) and g.adjacent(p2, l)) == 1
            for i, p1 in enumerate(ordering.part_a)
            for p2 in ordering.part_a[i + 1 :]
        )
        _check(rows, params, "two-points-one-line", common_ok, True, common_ok)

        chi2_expected = d * d - d + 1
        if 2 * count <= args.exact_cap:
            chi2, _ = colouring.distance_chromatic(g, 2, "vertex", "exact", limit=args.exact_cap)
            _check(rows, params, "chi2", chi2, chi2_expected, chi2 == chi2_expected)
        chi3_expected = d * (d * d - d + 1)
        if g.m <= args.exact_cap:
            chi3, _ = colouring.distance_chromatic(g, 3, "edge", "exact", limit=args.exact_cap)
            _check(rows, params, "chi3-index", chi3, chi3_expected, chi3 == chi3_expected)
        else:
            ok, _ = colouring.verify_power_clique(g, 3, "edge", list(g.edges))
            _check(rows, params, "chi3-index-clique", ok, True, ok)
    return rows


def _sample_factor(kind: str, rng) -> tuple[constructions.BipartiteOrdering, int]:
    n = rng.randint(2, 6)
    if kind == "comatching":
        d = rng.randint(1, n - 1)  # must not be complete
    else:
        d = rng.randint(1, n)
    g, part_a, part_b = randgraphs.random_regular_bipartite(n, d, rng)
    if kind == "matching":
        return constructions.matching_ordering(g, part_a, part_b), d
    return constructions.comatching_ordering(g, part_a, part_b), d


def verify_p6(args) -> list[dict]:
    import random

    rows: list[dict] = []
    trials = args.trials
    for kind1, kind2 in (("matching", "matching"), ("matching", "comatching"),
                         ("comatching", "matching"), ("comatching", "comatching")):
        failures = 0
        for trial in range(trials):
            rng = random.Random((args.seed, kind1, kind2, trial).__str__())
            h1, d1 = _sample_factor(kind1, rng)
            h2, d2 = _sample_factor(kind2, rng)
            prod = constructions.bbp_product(h1, h2)
            expected = d1 + d2 - 1 if (kind1, kind2) == ("matching", "matching") else d1 + d2
            if prod.graph.regular_degree() != expected:
                failures += 1
        params = {"kinds": f"{kind1}+{kind2}", "trials": trials, "seed": args.seed}
        _check(rows, params, "degree-law-failures", failures, 0, failures == 0)
    return rows


def _two_path_pairs(ordering: constructions.BipartiteOrdering) -> list[tuple[int, int]]:
    """A-part position pairs with a common neighbour (a 2-path witness)."""
    g = ordering.graph
    out = []
    for i, a in enumerate(ordering.part_a):
        for j in range(i + 1, len(ordering.part_a)):
            b = ordering.part_a[j]
            if set(g.adj[a]) & set(g.adj[b]):
                out.append((i, j))
    return out


def verify_p7(args) -> list[dict]:
    import random

    from .graphs import bfs_distances

    rows: list[dict] = []
    checked_even = failures_even = 0
    checked_odd = failures_odd = 0
    for trial in range(args.trials):
        rng = random.Random(f"p7-{args.seed}-{trial}")
        h1, d1 = _sample_factor("matching" if trial % 2 else "comatching", rng)
        h2, d2 = _sample_factor("matching", rng)
        prod = constructions.bbp_product(h1, h2)
        n2 = h2.size
        pairs1 = _two_path_pairs(h1)
        pairs2 = _two_path_pairs(h2)

        def a_id(i: int, j: int) -> int:
            return i * n2 + j

        def b_id(i: int, j: int) -> int:
            return h1.size * n2 + i * n2 + j

        # even+even: witnessed 2-paths in both factors give 4-paths in the product
        for i1, i2 in pairs1[:2]:
            for j1, j2 in pairs2[:2]:
                checked_even += 1
                dist = bfs_distances(prod.graph, [a_id(i1, j1)], max_depth=4)
                if dist[a_id(i2, j2)] < 0:
                    failures_even += 1
        # even+odd: a 2-path in factor 1 plus an edge of factor 2 gives 3-paths
        # between X x X2 and the aligned Y x Y2
        e2 = h2.graph.edges[0] if h2.graph.m else None
        if e2 is not None:
            a2 = e2[0] if e2[0] in h2.part_a else e2[1]
            b2 = e2[1] if e2[0] in h2.part_a else e2[0]
            j_a = h2.part_a.index(a2)
            j_b = h2.part_b.index(b2)
            for i1, i2 in pairs1[:2]:
                checked_odd += 2
                for src, dst in ((a_id(i1, j_a), b_id(i2, j_b)), (a_id(i2, j_a), b_id(i1, j_b))):
                    dist = bfs_distances(prod.graph, [src], max_depth=3)
                    if dist[dst] < 0:
                        failures_odd += 1
    params = {"trials": args.trials, "seed": args.seed}
    _check(rows, dict(params, law="even+even", checked=checked_even),
           "path-law-failures", failures_even, 0, failures_even == 0)
    _check(rows, dict(params, law="even+odd", checked=checked_odd),
           "path-law-failures", failures_odd, 0, failures_odd == 0)
    return rows


def verify_p9(args) -> list[dict]:
    rows: list[dict] = []
    d = args.d9 if args.d9 is not None else 8
    t = args.t9 if args.t9 is not None else 6
    params = {"d": d, "t": t}
    built = constructions.even_edge_construction(d, t)
    g = built.graph
    _check(rows, params, "regular", g.regular_degree(), d, g.regular_degree() == d)
    _check(rows, params, "bipartite", g.is_bipartite(), True, g.is_bipartite())
    xy = built.xy_edges()
    t1 = t - 2
    d1 = (t1 - 1) * d // t1
    d2 = d // t1
    expected = (d1 // 2) ** t1 * d2 * (d1 // 2 + d2)
    _check(rows, params, "xy-edges", len(xy), expected, len(xy) >= expected)
    ok, _ = colouring.verify_power_clique(g, t, "edge", list(xy))
    _check(rows, params, "xy-clique-in-line-power", ok, True, ok)
    lower = d**t / (math.e * t * 2 ** (t - 1))
    _check(rows, params, "clique-beats-bound", len(xy), lower, len(xy) > lower)
    return rows


def verify_p10(args) -> list[dict]:
    rows: list[dict] = []
    for d in _parse_int_list(args.d, [3, 5]):
        for t in _parse_int_list(args.t, [2, 3]):
            params = {"d": d, "t": t}
            if (d - 1) % (t - 1):
                continue
            ordering = constructions.iterated_product(d, t)
            g = ordering.graph
            dp = (d - 1) // (t - 1) + 1
            expect_m = d * dp ** (t - 1)
            if expect_m > 2000:
                continue
            _check(rows, params, "regular", g.regular_degree(), d, g.regular_degree() == d)
            _check(rows, params, "edges", g.m, expect_m, g.m == expect_m)
            ok, _ = colouring.verify_power_clique(g, t, "edge", list(g.edges))
            _check(rows, params, "line-power-complete", ok, True, ok)
            if g.m <= args.exact_cap:
                chi, _ = colouring.distance_chromatic(g, t, "edge", "exact", limit=args.exact_cap)
                _check(rows, params, "chi-index-equals-edges", chi, g.m, chi == g.m)
    return rows


def verify_l8(args) -> list[dict]:
    rows: list[dict] = []
    for k in _parse_int_list(args.k, [2, 3]):
        failures = 0
        for trial in range(args.trials):
            seed = f"l8-{args.seed}-{k}-{trial}"
            g, part_a, part_b = randgraphs.random_bipartite(
                3 + trial % 8, 3 + (trial * 7) % 8, 6 + trial % 18, seed
            )
            g = randgraphs.thin_to_cycle_free(g, 2 * k)
            if not analysis.bunched_edge_bound_holds(g, part_a, part_b, k):
                failures += 1
        params = {"k": k, "trials": args.trials, "seed": args.seed}
        _check(rows, params, "bunched-bound-failures", failures, 0, failures == 0)
    return rows


def verify_eq1(args) -> list[dict]:
    rows: list[dict] = []
    for k in _parse_int_list(args.k, [2, 3]):
        failures = 0
        for trial in range(args.trials):
            seed = f"eq1-{args.seed}-{k}-{trial}"
            g = randgraphs.random_graph(5 + trial % 12, 8 + (trial * 3) % 20, seed)
            g = randgraphs.thin_to_cycle_free(g, 2 * k)
            if not analysis.even_cycle_edge_bound_check(g, k):
                failures += 1
        params = {"k": k, "trials": args.trials, "seed": args.seed}
        _check(rows, params, "edge-bound-failures", failures, 0, failures == 0)
    return rows


def _bounded_degree_cycle_free(seed: str, ell: int) -> Graph:
    """Max-degree-4 graph, thinned until C_ell-free, max degree >= 2."""
    for attempt in range(50):
        g = randgraphs.random_max_degree_graph(16, 22, 4, f"{seed}-{attempt}")
        g = randgraphs.thin_to_cycle_free(g, ell)
        if g.max_degree >= 2:
            return g
    raise RuntimeError("could not generate a usable bounded-degree instance")


def verify_t1v(args) -> list[dict]:
    rows: list[dict] = []
    failures = 0
    for trial in range(args.trials):
        g = _bounded_degree_cycle_free(f"t1v-{args.seed}-{trial}", 6)
        report = analysis.path_count_bound_check(g, 2, 6, "vertex")
        if not report.ok:
            failures += 1
    params = {"t": 2, "l": 6, "trials": args.trials, "seed": args.seed}
    _check(rows, params, "vertex-path-bound-failures", failures, 0, failures == 0)
    return rows


def verify_t1e(args) -> list[dict]:
    rows: list[dict] = []
    failures = 0
    for trial in range(args.trials):
        g = _bounded_degree_cycle_free(f"t1e-{args.seed}-{trial}", 6)
        report = analysis.path_count_bound_check(g, 3, 6, "edge")
        if not report.ok:
            failures += 1
    params = {"t": 3, "l": 6, "trials": args.trials, "seed": args.seed}
    _check(rows, params, "edge-path-bound-failures", failures, 0, failures == 0)
    return rows


VERIFIERS: dict[str, Callable] = {
    "P4": verify_p4,
    "P5": verify_p5,
    "P6": verify_p6,
    "P7": verify_p7,
    "P9": verify_p9,
    "P10": verify_p10,
    "L8": verify_l8,
    "EQ1": verify_eq1,
    "T1V": verify_t1v,
    "T1E": verify_t1e,
}

RANDOMIZED = {"P6", "P7", "L8", "EQ1", "T1V", "T1E"}


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite not in VERIFIERS:
        print(f"unknown suite id {args.suite!r}", file=sys.stderr)
        return 2
    if args.suite in RANDOMIZED and args.seed is None:
        print("randomized suites require --seed (no ambient entropy)", file=sys.stderr)
        return 2
    rows = VERIFIERS[args.suite](args)
    widths = {"check": max((len(r["check"]) for r in rows), default=5)}
    all_ok = True
    for row in rows:
        ok = row["passed"] == "true"
        all_ok &= ok
        status = "pass" if ok else "FAIL"
        print(f"[{status}] {row['check']:<{widths['check']}} {row['params']} "
              f"value={row['value']} bound={row['bound']}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(
                fh, fieldnames=["params", "check", "value", "bound", "passed"],
                lineterminator="\n",
            )
            writer.writeheader()
            writer.writerows(rows)
    print(f"{args.suite}: {'all checks passed' if all_ok else 'CHECKS FAILED'}")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# measure

def _load_measure_graph(args) -> tuple[Graph, ExperimentSpec]:
    caps = constructions.SizeCaps(args.max_vertices, args.max_edges)
    if args.graph:
        g = read_col(args.graph)
        spec = ExperimentSpec("measure", options={"graph": args.graph}, seed=args.seed)
    elif args.construct:
        params = _collect_params(args.construct, args)
        g = materialize(args.construct, params, caps)
        spec = ExperimentSpec("measure", construction=args.construct, params=params, seed=args.seed)
    else:
        raise GraphError("measure needs --graph or --construct")
    return g, spec


def _parse_root(text: str | None) -> int | tuple[int, int] | None:
    if text is None:
        return None
    if "," in text:
        u, v = text.split(",")
        return (int(u), int(v))
    return int(text)


def measure_records(g: Graph, spec: ExperimentSpec, args) -> list[ResultRecord]:
    stat = args.stat
    spec.statistic = stat
    records: list[ResultRecord] = []
    start = time.perf_counter()
    summary = _graph_summary(g)

    def finish(values: dict, bound=None, passed=None, error=None):
        records.append(
            ResultRecord(
                spec=spec,
                graph_summary=summary,
                statistic=stat,
                values=values,
                bound=bound,
                passed=passed,
                error=error,
                duration_s=time.perf_counter() - start,
            )
        )

    try:
        if stat == "girth":
            value = analysis.girth(g)
            finish({"girth": "inf" if math.isinf(value) else value})
        elif stat == "odd-girth":
            value = analysis.odd_girth(g)
            finish({"oddGirth": "inf" if math.isinf(value) else value})
        elif stat == "cycle":
            if args.l is None:
                raise GraphError("--l is required for --stat cycle")
            found, witness = analysis.contains_cycle(g, args.l, cap=args.max_cycle_len)
            finish({"length": args.l, "found": found,
                    "witness": list(witness) if witness else None})
        elif stat == "bunched":
            if args.delta is None:
                raise GraphError("--delta is required for --stat bunched")
            parts = g.bipartition()
            if parts is None:
                raise GraphError("bunched statistic needs a bipartite graph")
            count, _ = analysis.bunched_edge_count(g, parts[0], parts[1], args.delta)
            finish({"delta": args.delta, "bunched": count})
        elif stat == "density":
            report = analysis.density_profile(g, args.t, args.mode)
            finish(report.to_json())
        elif stat == "pathpairs":
            if args.root == "all":
                # one record per vertex root
                for root in range(g.n):
                    report = analysis.path_pair_statistic(g, root, args.t, args.variant)
                    finish(report.to_json())
            else:
                root = _parse_root(args.root)
                if root is None:
                    raise GraphError("--root is required for --stat pathpairs")
                if isinstance(root, tuple):
                    report = analysis.edge_path_pair_statistic(g, root, args.t)
                else:
                    report = analysis.path_pair_statistic(g, root, args.t, args.variant)
                finish(report.to_json())
        elif stat == "colour":
            count, col = colouring.distance_chromatic(
                g, args.t, args.mode, args.method, limit=args.exact_cap
            )
            finish({"numColours": count, "method": args.method,
                    "colouring": col.to_json()})
        else:
            raise GraphError(f"unknown statistic {stat!r}")
    except (colouring.TooLarge, analysis.NotCycleFree) as exc:
        finish({}, error=f"{type(exc).__name__}: {exc}")
    return records


def cmd_measure(args: argparse.Namespace) -> int:
    g, spec = _load_measure_graph(args)
    records = measure_records(g, spec, args)
    for record in records:
        print(json.dumps(record.to_json(), sort_keys=True))
    if args.csv:
        _write_records_csv(records, args.csv)
    if any(r.error for r in records) or any(r.passed is False for r in records):
        return 1
    return 0


def _write_records_csv(records: Iterable[ResultRecord], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow(record.csv_row())


# ---------------------------------------------------------------------------
# sweep

def _known_lower_bound(construct: str, stat: str, mode: str, params: dict) -> float | None:
    if stat != "colour":
        return None
    if construct == "cycle-product" and mode == "vertex":
        return float((params["d"] // 2) ** params["t"])
    if construct == "pg" and mode == "vertex" and params.get("t") == 2:
        d = params["q"] + 1
        return float(d * d - d + 1)
    return None


def _sweep_jobs(spec: dict) -> list[dict]:
    params = spec.get("params", {})
    keys = sorted(params)
    jobs: list[dict] = []

    def expand(i: int, acc: dict):
        if i == len(keys):
            jobs.append(dict(acc))
            return
        key = keys[i]
        values = params[key]
        if not isinstance(values, list):
            values = [values]
        for v in values:
            acc[key] = v
            expand(i + 1, acc)
            del acc[key]

    expand(0, {})
    jobs.sort(key=lambda job: tuple(job[k] for k in keys))
    return jobs


def _run_sweep_job(spec: dict, job: dict, caps: constructions.SizeCaps) -> dict:
    construct = spec["construct"]
    stat = spec["stat"]
    options = spec.get("options", {})
    g = materialize(construct, job, caps)
    row = {"construction": construct}
    row.update({k: job[k] for k in sorted(job)})
    row["stat"] = stat
    row["n"] = g.n
    row["m"] = g.m
    mode = options.get("mode", "vertex")
    if stat == "colour":
        count, _ = colouring.distance_chromatic(
            g, options.get("t", 2), mode, options.get("method", "greedy"),
            limit=options.get("exactCap", 64),
        )
        row["value"] = count
    elif stat == "girth":
        value = analysis.girth(g)
        row["value"] = "inf" if math.isinf(value) else value
    elif stat == "odd-girth":
        value = analysis.odd_girth(g)
        row["value"] = "inf" if math.isinf(value) else value
    elif stat == "density":
        report = analysis.density_profile(g, options.get("t", 2), mode)
        row["value"] = _fmt_value(float(report.implied_f) if report.max_span_edges else math.inf)
    else:
        raise GraphError(f"sweep does not support statistic {stat!r}")
    bound = _known_lower_bound(construct, stat, mode, dict(job, **options))
    row["bound"] = _fmt_value(bound) if bound is not None else ""
    if bound and stat == "colour":
        row["ratio"] = _fmt_value(row["value"] / bound)
    else:
        row["ratio"] = ""
    return row


def cmd_sweep(args: argparse.Namespace) -> int:
    with open(args.spec) as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            print(f"malformed sweep spec: {exc}", file=sys.stderr)
            return 2
    for key in ("construct", "stat"):
        if key not in spec:
            print(f"sweep spec is missing {key!r}", file=sys.stderr)
            return 2
    if spec["construct"] not in CONSTRUCTION_PARAMS:
        print(f"unknown construction {spec['construct']!r}", file=sys.stderr)
        return 2
    caps = constructions.SizeCaps(args.max_vertices, args.max_edges)
    jobs = _sweep_jobs(spec)

    if args.jobs > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_worker, [(spec, job, caps) for job in jobs]))
    else:
        rows = [_run_sweep_job(spec, job, caps) for job in jobs]

    fieldnames = ["construction"]
    fieldnames += sorted(spec.get("params", {}).keys())
    fieldnames += ["stat", "n", "m", "value", "bound", "ratio"]
    with open(args.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {args.out}: {len(rows)} rows")
    return 0


def _sweep_worker(packed):
    spec, job, caps = packed
    return _run_sweep_job(spec, job, caps)


# ---------------------------------------------------------------------------
# convert

def cmd_convert(args: argparse.Namespace) -> int:
    g = read_col(args.infile)
    if args.format == "col":
        write_col(g, args.out)
    elif args.format == "json":
        with open(args.out, "w") as fh:
            json.dump({"n": g.n, "edges": [list(e) for e in g.edges]}, fh)
            fh.write("\n")
    else:
        print(f"unknown format {args.format!r}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-vertices", type=int, default=constructions.DEFAULT_CAPS.max_vertices)
    p.add_argument("--max-edges", type=int, default=constructions.DEFAULT_CAPS.max_edges)


def _add_construction_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distcol",
        description="Construct, verify, and measure distance colourings of "
                    "cycle-constrained graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a graph file plus label sidecar")
    p.add_argument("name", choices=sorted(CONSTRUCTION_PARAMS))
    _add_construction_params(p)
    p.add_argument("--out")
    p.add_argument("--labels")
    p.add_argument("--allow-t4", action="store_true",
                   help="permit the merged two-block even-edge variant at t=4")
    _add_caps(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a construction verification suite")
    p.add_argument("suite", choices=VERIFY_SUITES)
    p.add_argument("--d", help="comma-separated d values")
    p.add_argument("--t", help="comma-separated t values")
    p.add_argument("--q", help="comma-separated q values")
    p.add_argument("--k", help="comma-separated k values")
    p.add_argument("--d9", type=int, help="d for the even-edge suite")
    p.add_argument("--t9", type=int, help="t for the even-edge suite")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int)
    p.add_argument("--csv")
    p.add_argument("--exact-cap", type=int, default=64)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("measure", help="measure one statistic, streaming JSON lines")
    p.add_argument("--graph", help="input .col file")
    p.add_argument("--construct", choices=sorted(CONSTRUCTION_PARAMS))
    _add_construction_params(p)
    p.add_argument("--stat", required=True, choices=STATISTICS)
    p.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    p.add_argument("--method", choices=("exact", "greedy"), default="greedy")
    p.add_argument("--variant", choices=("plain", "peripheral"), default="plain")
    p.add_argument("--l", type=int)
    p.add_argument("--delta", type=float)
    p.add_argument("--root", help="vertex id or 'u,v' edge")
    p.add_argument("--seed", type=int)
    p.add_argument("--csv")
    p.add_argument("--exact-cap", type=int, default=64)
    p.add_argument("--max-cycle-len", type=int, default=analysis.DEFAULT_CYCLE_CAP)
    _add_caps(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("sweep", help="run a JSON sweep spec into a CSV table")
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    _add_caps(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("convert", help="normalize or convert a graph file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("col", "json"), default="col")
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (constructions.ConstructionError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
