"""Command-line front end.

Exit codes: 0 success, 1 a check or route comparison failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import charlier as ch
from . import genfun as gf
from . import similarity as sim
from .partition_core import (PartitionParseError, enumerate_partitions, enumerate_partitions_k,
                             parse_partition, stats, to_canonical)
from .partition_tree import stat_distribution
from .verify import SUITES, class_table, KNOWN_CR_ANOMALIES


class UsageError(Exception):
    pass


def _partition(text: str):
    try:
        return parse_partition(text)
    except PartitionParseError as e:
        raise UsageError(f"bad partition {text!r}: {e}") from None


def _emit(fmt: str, rows: list[list], header: list[str], out) -> None:
    if fmt == "json":
        out.write(json.dumps([dict(zip(header, r)) for r in rows]) + "\n")
    else:
        for r in rows:
            out.write("\t".join(str(x) for x in r) + "\n")


def cmd_enumerate(args, out) -> int:
    if args.k is None:
        parts = enumerate_partitions(args.n)
    else:
        parts = enumerate_partitions_k(args.n, args.k)
    if args.format == "json":
        out.write(json.dumps([{"n": p.n, "blocks": [list(b) for b in p.blocks]} for p in parts]) + "\n")
    else:
        for p in parts:
            out.write(to_canonical(p) + "\n")
    return 0


def cmd_stats(args, out) -> int:
    p = _partition(args.pi)
    c, n_, a = stats(p)
    rows = [["n", p.n], ["k", p.k], ["cr", c], ["ne", n_], ["al", a]]
    if p.k:
        d = ch.phi_r_inv(p)
        rows += [
            ["crseq", ",".join(map(str, sim.crseq(p)))],
            ["neseq", ",".join(map(str, sim.neseq(p)))],
            ["path", str(d.path)],
            ["xi_r", ",".join(map(str, d.xi))],
            ["xi_l", ",".join(map(str, ch.phi_l_inv(p).xi))],
        ]
    if args.format == "json":
        out.write(json.dumps({k: v for k, v in rows}) + "\n")
    else:
        _emit("tsv", rows, [], out)
    return 0


def cmd_tree_dist(args, out) -> int:
    root = _partition(args.root)
    if args.level < 0:
        raise UsageError("--level must be nonnegative")
    dist = stat_distribution(root, args.level, args.blocks)
    rows = [[c, n_, m] for (c, n_), m in sorted(dist.items())]
    _emit(args.format, rows, ["cr", "ne", "multiplicity"], out)
    return 0


def cmd_classes(args, out) -> int:
    if not 1 <= args.k <= args.n:
        raise UsageError("need 1 <= k <= n")
    values = {}
    if args.method in ("brute", "both"):
        values["brute"] = sim.count_classes_brute(args.n, args.k, args.stat)
    if args.method in ("formula", "both"):
        values["formula"] = (sim.count_cr_formula(args.n, args.k) if args.stat == "cr"
                             else sim.count_ne_recurrence(args.n, args.k))
    rows = [[args.n, args.k, args.stat, m, v] for m, v in values.items()]
    _emit(args.format, rows, ["n", "k", "stat", "method", "value"], out)
    return 0 if len(set(values.values())) == 1 else 1


def _series_rows(series: gf.ZSeries) -> list[list[int]]:
    return [[l, a, b, c] for l, coeff in enumerate(series.coeffs) for (a, b), c in coeff.items()]


def cmd_gf(args, out) -> int:
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    header = ["l", "deg_q", "deg_p", "coeff"]
    if args.all:
        series = (gf.fraction_allpartitions_v1(args.order) if args.fraction == "v1"
                  else gf.fraction_allpartitions_v2(args.order))
        _emit(args.format, _series_rows(series), header, out)
        return 0
    if args.pi is None:
        raise UsageError("gf needs --pi or --all")
    pi = _partition(args.pi)
    if pi.k < 1:
        raise UsageError("--pi must be nonempty")
    routes = {}
    if args.route in ("theorem", "both"):
        routes["theorem"] = gf.s_pi_theorem(pi, args.order)
    if args.route in ("brute", "both"):
        routes["brute"] = gf.s_pi_brute(pi, args.order)
    series = next(iter(routes.values()))
    _emit(args.format, _series_rows(series), header, out)
    if len(routes) == 2 and routes["theorem"] != routes["brute"]:
        sys.stderr.write("theorem and brute routes disagree\n")
        return 1
    return 0


def cmd_verify(args, out) -> int:
    name = args.suite or args.suite_pos
    if name is None:
        raise UsageError(f"choose a suite: {', '.join(SUITES)} or all")
    names = list(SUITES) if name == "all" else [name]
    for nm in names:
        if nm not in SUITES:
            raise UsageError(f"unknown suite {nm!r}; choose from {', '.join(SUITES)} or all")
    failed = 0
    records = []
    for nm in names:
        for check in SUITES[nm]():
            failed += not check.passed
            records.append([nm, "PASS" if check.passed else "FAIL", check.name, check.detail])
    _emit(args.format, records, ["suite", "status", "check", "detail"], out)
    return 1 if failed else 0


def cmd_tables(args, out) -> int:
    status = 0
    records = []
    for which in ("cr", "ne"):
        for row in class_table(which):
            known = which == "cr" and (row.n, row.k) in KNOWN_CR_ANOMALIES
            if row.anomaly and not known:
                status = 1
            note = "known-discrepancy" if known and row.anomaly else ("ok" if not row.anomaly else "MISMATCH")
            records.append([which, row.n, row.k, row.printed, row.computed, note])
    if args.format == "json":
        _emit("json", records, ["stat", "n", "k", "printed", "computed", "note"], out)
        return status
    for which, title in (("cr", "crossing-similarity classes"), ("ne", "nesting-similarity classes")):
        out.write(f"# {title} (rows n, columns k)\n")
        for n in range(1, 7):
            cells = [r for r in records if r[0] == which and r[1] == n]
            out.write(f"{n}\t" + "\t".join(str(r[4]) for r in cells) + "\n")
        for r in records:
            if r[0] == which and r[5] != "ok":
                out.write(f"# n={r[1]} k={r[2]}: printed {r[3]}, computed {r[4]} ({r[5]})\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossnest",
                                     description="Crossings and nestings of set partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=["tsv", "json"], default="tsv")
        p.set_defaults(func=fn)
        return p

    p = add("enumerate", cmd_enumerate, "list partitions of [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)

    p = add("stats", cmd_stats, "statistics of one partition")
    p.add_argument("--pi", required=True)

    p = add("tree-dist", cmd_tree_dist, "(cr, ne) distribution on a level of the subtree")
    p.add_argument("--root", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--blocks", type=int)

    p = add("classes", cmd_classes, "count similarity classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--stat", choices=["cr", "ne"], required=True)
    p.add_argument("--method", choices=["brute", "formula", "both"], default="both")

    p = add("gf", cmd_gf, "generating-function coefficients")
    p.add_argument("--pi")
    p.add_argument("--all", action="store_true")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--route", choices=["theorem", "brute", "both"], default="both")
    p.add_argument("--fraction", choices=["v1", "v2"], default="v2")

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite_pos", nargs="?", metavar="SUITE")
    p.add_argument("--suite")

    add("tables", cmd_tables, "recompute the class-count tables")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as e:
        parser.error(str(e))  # exits with status 2


if __name__ == "__main__":
    sys.exit(main())
