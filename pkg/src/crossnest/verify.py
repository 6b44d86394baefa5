"""Named verification suites driven by the ``verify`` and ``tables`` commands.

Each suite yields ``Check`` records; a suite passes when all its checks do.
Bounds are the desk-scale defaults and can be lowered for quick runs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import chain
from typing import Callable, Iterator

from . import charlier as ch
from . import genfun as gf
from . import group_seq as gs
from . import similarity as sim
from .partition_core import (enumerate_partitions, enumerate_partitions_k,
                             parse_partition, stats, to_canonical)
from .partition_tree import level_distributions, stat_distribution


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


# golden values for the two printed tables of class counts, rows n = 1..6
CR_TABLE = [
    [1],
    [1, 1],
    [1, 2, 1],
    [1, 3, 3, 1],
    [1, 4, 7, 4, 1],
    [1, 5, 11, 4, 5, 1],
]
NE_TABLE = [
    [1],
    [1, 1],
    [1, 2, 1],
    [1, 4, 3, 1],
    [1, 7, 9, 4, 1],
    [1, 11, 22, 16, 5, 1],
]
# reference crossing entry that disagrees with both the closed sum and brute force
KNOWN_CR_ANOMALIES = {(6, 4)}

EX_34 = ("1,2,5/3,4", "1,2,4/3,5")
EX_35 = ("1,7/2,6/3,4/5,8", "1,8/2,4/3,6/5,7")
EX_42_R = "1,7,10/2,4,6,8/3/5,9/11,12"
EX_42_L = "1,4,6,7,9/2,10/3/5,8/11,12"


def _swap(c: Counter) -> Counter:
    return Counter({(b, a): m for (a, b), m in c.items()})


def _first_failure(pairs) -> str:
    for label, ok in pairs:
        if not ok:
            return label
    return ""


def suite_thm11(max_level: int = 5, smoke_n: int = 6, smoke_level: int = 4) -> Iterator[Check]:
    lam, pi = map(parse_partition, EX_34)
    got = stat_distribution(lam, 1)
    want = Counter({(0, 1): 2, (1, 2): 1})
    yield Check("swapped-example level-1 multiset", got == want, f"{dict(got)}")
    bad = [(l, m) for l in range(max_level + 1)
           for m, d in level_distributions(lam, l).items()
           if d != _swap(level_distributions(pi, l).get(m, Counter()))]
    yield Check(f"swapped pair agrees for l<={max_level}, all m", not bad, f"first mismatch {bad[:1]}")

    lam, pi = map(parse_partition, EX_35)
    got = stat_distribution(lam, 1)
    want = Counter({(2, 3): 2, (3, 3): 1, (4, 3): 1, (4, 4): 1})
    yield Check("direct-example level-1 multiset", got == want, f"{dict(got)}")
    bad = [l for l in range(max_level + 1)
           if level_distributions(lam, l) != level_distributions(pi, l)]
    yield Check(f"direct pair agrees for l<={max_level}, all m", not bad, f"first mismatch l={bad[:1]}")

    # group all small partitions by their first two levels, then compare deeper
    groups: dict = {}
    for n in range(1, smoke_n + 1):
        for p in enumerate_partitions(n):
            key = tuple(tuple(sorted(d.items())) for l in (0, 1)
                        for d in level_distributions(p, l).values())
            groups.setdefault(key, []).append(p)
    failures = []
    for members in groups.values():
        if len(members) < 2:
            continue
        ref = [level_distributions(members[0], l) for l in range(smoke_level + 1)]
        for other in members[1:]:
            for l in range(2, smoke_level + 1):
                if level_distributions(other, l) != ref[l]:
                    failures.append((to_canonical(members[0]), to_canonical(other), l))
    yield Check(f"equal first two levels imply equal levels <= {smoke_level} (n <= {smoke_n})",
                not failures, f"{failures[:1]}")


def suite_cor31(max_n: int = 9) -> Iterator[Check]:
    for n in range(max_n + 1):
        trip = Counter()
        ident = True
        for p in enumerate_partitions(n):
            c, ne_, al_ = stats(p)
            trip[(c, ne_, al_)] += 1
            ident &= c + ne_ + al_ == (p.n - p.k) * (p.n - p.k - 1) // 2
        swapped = Counter({(b, a, t): m for (a, b, t), m in trip.items()})
        yield Check(f"n={n}: (cr,ne,al) symmetric under cr<->ne", trip == swapped)
        yield Check(f"n={n}: cr+ne+al = C(n-k,2)", ident)


def suite_lem44(max_n: int = 8) -> Iterator[Check]:
    lam_r = parse_partition(EX_42_R)
    d = ch.phi_r_inv(lam_r)
    yield Check("figure diagram reproduces the right-ranked partition", ch.phi_r(d) == lam_r, d.to_json())
    got = ch.phi_l(d)
    yield Check("same diagram reproduces the left-ranked partition",
                got == parse_partition(EX_42_L), to_canonical(got))
    for n in range(1, max_n + 1):
        seen_r, seen_l = set(), set()
        for diag in ch.enumerate_diagrams(n):
            seen_r.add(ch.phi_r(diag))
            seen_l.add(ch.phi_l(diag))
        total = sum(1 for _ in enumerate_partitions(n))
        yield Check(f"n={n}: both maps bijective onto {total} partitions",
                    len(seen_r) == len(seen_l) == total)
        fails = []
        for p in enumerate_partitions(n):
            dr, dl = ch.phi_r_inv(p), ch.phi_l_inv(p)
            c, ne_, _ = stats(p)
            prof = ch.profile(dr.path)
            zeros = [i + 1 for i, e in enumerate(ch.semi_type(dr.path)) if e == 0]
            v = sim.neseq(p)
            conds = [
                ("round trip", ch.phi_r(dr) == p and ch.phi_l(dl) == p and dr.path == dl.path),
                ("block count", sum(prof) == p.k),
                ("cr from xi", sum(x - 1 for x in dr.xi) == c),
                ("ne from xi", sum(x - 1 for x in dl.xi) == ne_),
                ("profile = crset", prof == sim.crset(p)),
                ("semi-type zeros", zeros == [vi + i for i, vi in enumerate(v, 1)]),
            ]
            what = _first_failure(conds)
            if what:
                fails.append(f"{to_canonical(p)}: {what}")
        yield Check(f"n={n}: diagram properties hold for every partition", not fails, f"{fails[:1]}")


def suite_thm45(max_n: int = 9) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            brute = sim.count_classes_brute(n, k, "cr")
            formula = sim.count_cr_formula(n, k)
            yield Check(f"cr classes n={n} k={k}", brute == formula, f"brute={brute} formula={formula}")
            if n >= 2 * k - 1:
                closed = sim.count_cr_closed(n, k)
                yield Check(f"closed form n={n} k={k}", closed == formula, f"closed={closed}")
    yield from _table_checks("cr")


def suite_thm46(max_n: int = 9) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            brute = sim.count_classes_brute(n, k, "ne")
            rec = sim.count_ne_recurrence(n, k)
            yield Check(f"ne classes n={n} k={k}", brute == rec, f"brute={brute} recurrence={rec}")
            g, gstar = sim.g_brute(n, k), sim.g_star_brute(n, k)
            ok_f = rec == g - (n - k - 1) * sim.binom(n - 1, k - 1)
            ok_g2 = gstar == sum(sim.g_brute(r, k) for r in range(k, n + 1))
            ok_rec = g == sim.g_rec(n, k)
            ok_g1 = True
            if k >= 2:
                ok_g1 = g == (sim.g_brute(n - 1, k - 1) + sim.g_star_brute(n - 2, k - 1)
                              + (n - k) * sim.binom(n - 2, k - 1))
            yield Check(f"height-sum bookkeeping n={n} k={k}", ok_f and ok_g1 and ok_g2 and ok_rec,
                        f"g={g} g*={gstar}")
    yield from _table_checks("ne")


def suite_cor47(max_n: int = 12, brute_n: int = 9) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        closed = sim.count_ne_total(n)
        rec = sum(sim.count_ne_recurrence(n, k) for k in range(1, n + 1))
        semi = sum(sim.count_ne_semitype(n, k) for k in range(1, n + 1))
        detail = f"closed={closed} recurrence={rec} semitype={semi}"
        ok = closed == rec == semi
        if n <= brute_n:
            brute = sum(sim.count_classes_brute(n, k, "ne") for k in range(1, n + 1))
            detail += f" brute={brute}"
            ok &= brute == closed
        yield Check(f"F_{n}", ok, detail)


def suite_lem43(max_n: int = 7) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        fails = []
        for p in enumerate_partitions(n):
            prof = sim.crset(p)
            l = len(prof) - 1
            if not (all(prof) and l <= n - p.k and 0 <= stats(p)[0] <= sim.cr_upper_bound(n, p.k, l)):
                fails.append(to_canonical(p))
        yield Check(f"n={n}: bounds hold", not fails, f"{fails[:1]}")
        bad = []
        for k in range(1, n + 1):
            keys = {sim.cr_key(p) for p in enumerate_partitions_k(n, k)}
            for comp in _compositions(k):
                l = len(comp) - 1
                if l > n - k:
                    continue
                for c in range(sim.cr_upper_bound(n, k, l) + 1):
                    w = sim.witness_cr(n, k, comp, c)
                    if not (w.n == n and w.k == k and sim.crset(w) == comp and stats(w)[0] == c
                            and (comp, c) in keys):
                        bad.append((n, k, comp, c))
        yield Check(f"n={n}: every feasible witness built", not bad, f"{bad[:1]}")


def _compositions(k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        for rest in _compositions(k - first):
            yield (first,) + rest


def suite_noncompat() -> Iterator[Check]:
    pi = parse_partition("1,3/2,4/5,6")
    lam = parse_partition("1,3,6/2,4/5")
    yield Check("pi ~ne lam", sim.ne_key(pi) == sim.ne_key(lam))
    yield Check("pi !~cr lam with cr 1 vs 2",
                sim.cr_key(pi) != sim.cr_key(lam) and stats(pi)[0] == 1 and stats(lam)[0] == 2)


def suite_prop51(max_level: int = 5) -> Iterator[Check]:
    roots = [parse_partition(t) for t in ("1",) + EX_34 + EX_35[:1]]
    for pi in roots:
        table = gf.blr_table(pi, max_level)
        ok = True
        for l in range(max_level + 1):
            seqs = Counter()
            for m in range(pi.k, pi.k + l + 1):
                seqs.update(gs.level_seq_recurrence(pi, l, m))
            for r in range(pi.k + l):
                im = gs.f_gamma_r_multi(seqs, gs.ZERO, r)
                ok &= table[l][r] == gf.BivarPoly(dict(im))
        yield Check(f"b-table equals f_0^r of level sequences for {to_canonical(pi)}", ok)
        ct = gf.c_path_table(max_level)
        ok = all(table[l][0] == sum((ct[l][s] * table[0][s] for s in range(min(l, pi.k - 1) + 1)),
                                    gf.ZERO)
                 for l in range(max_level + 1))
        yield Check(f"b_l0 = sum_s c_ls b_0s for {to_canonical(pi)}", ok)
    ok = all(gf.k_s_series(s, max_level).coeffs[l] == gf.c_path_weight(l, s)
             for s in range(4) for l in range(max_level + 1))
    yield Check("path weights match continued-fraction products K_s", ok)


def suite_thm52(max_n: int = 5, order: int = 4, example_order: int = 6) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        bad = [to_canonical(p) for p in enumerate_partitions(n)
               if gf.s_pi_theorem(p, order) != gf.s_pi_brute(p, order)]
        yield Check(f"n={n}: theorem route = brute route at order {order}", not bad, f"{bad[:1]}")
    for t in chain(EX_34, EX_35):
        p = parse_partition(t)
        yield Check(f"{t}: routes agree at order {example_order}",
                    gf.s_pi_theorem(p, example_order) == gf.s_pi_brute(p, example_order))


def suite_fractions(order: int = 8, contraction_order: int = 6) -> Iterator[Check]:
    v1 = gf.fraction_allpartitions_v1(order)
    v2 = gf.fraction_allpartitions_v2(order)
    one = parse_partition("1")
    tree = gf.ZSeries.const(1, order) + gf.ZSeries(gf.s_pi_brute(one, order - 1).coeffs, order).shift(1)
    yield Check(f"both fractions agree to order {order}", v1 == v2)
    yield Check("fractions equal 1 + z S_{1} from the tree", v1 == tree)
    yield Check("fractions equal the enumerated series", v1 == gf.allpartitions_brute(order))
    yield Check("q=p=1 gives Bell numbers", v1.evaluate(1, 1) == _bell_list(order), f"{v1.evaluate(1, 1)}")
    yield Check("symmetric under q<->p", v2.map(gf.BivarPoly.swap) == v2)
    lhs, rhs = gf.cf_contract([1] * (contraction_order + 3), contraction_order)
    yield Check("contraction identity with unit weights", lhs == rhs)
    w = gf.partition_sfraction_weights
    lhs, rhs = gf.cf_contract(w, contraction_order)
    yield Check("contraction identity with partition weights", lhs == rhs)
    yield Check("contracted side is the tree-derived fraction",
                rhs == gf.fraction_allpartitions_v2(contraction_order))
    yield Check("even contraction is the other fraction",
                gf.even_contracted_fraction(w, contraction_order)
                == gf.fraction_allpartitions_v1(contraction_order) == lhs)


def _bell_list(n: int) -> list[int]:
    from math import comb
    b = [1]
    for m in range(n):
        b.append(sum(comb(m, i) * b[i] for i in range(m + 1)))
    return b


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "thm1.1": suite_thm11,
    "cor3.1": suite_cor31,
    "lem4.4": suite_lem44,
    "lem4.3": suite_lem43,
    "thm4.5": suite_thm45,
    "thm4.6": suite_thm46,
    "cor4.7": suite_cor47,
    "noncompat": suite_noncompat,
    "prop5.1": suite_prop51,
    "thm5.2": suite_thm52,
    "fractions": suite_fractions,
}


@dataclass
class TableRow:
    n: int
    k: int
    printed: int
    computed: int

    @property
    def anomaly(self) -> bool:
        return self.printed != self.computed


def class_table(which: str, max_n: int = 6) -> list[TableRow]:
    golden = CR_TABLE if which == "cr" else NE_TABLE
    rows = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            rows.append(TableRow(n, k, golden[n - 1][k - 1], sim.count_classes_brute(n, k, which)))
    return rows


def _table_checks(which: str) -> Iterator[Check]:
    for row in class_table(which):
        if (row.n, row.k) in KNOWN_CR_ANOMALIES and which == "cr":
            yield Check(f"printed {which} table n={row.n} k={row.k} (known discrepancy, reported)", True,
                        f"printed={row.printed} computed={row.computed}")
        else:
            yield Check(f"printed {which} table n={row.n} k={row.k}", not row.anomaly,
                        f"printed={row.printed} computed={row.computed}")
