"""Acceptance criteria, each run under its wall-clock limit.

Every test appends one PASS/FAIL line to the terminal summary.
"""
import time
from collections import Counter
from contextlib import contextmanager
from itertools import combinations

from conftest import ACCEPTANCE_LINES
from crossnest import charlier as ch
from crossnest import genfun as gf
from crossnest import similarity as sim
from crossnest.group_seq import ALPHA, BETA, op_M, op_R, seq_stat
from crossnest.partition_core import enumerate_partitions, parse_partition, stats
from crossnest.partition_tree import children, level_distributions, stat_distribution
from crossnest.verify import KNOWN_CR_ANOMALIES, class_table

EX34 = parse_partition("1,2,5/3,4"), parse_partition("1,2,4/3,5")
EX35 = parse_partition("1,7/2,6/3,4/5,8"), parse_partition("1,8/2,4/3,6/5,7")


@contextmanager
def criterion(num, title, limit):
    notes = []
    start = time.perf_counter()
    ok = False
    try:
        yield notes
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        extra = "; ".join(notes)
        line = f"{status} criterion {num}: {title} ({elapsed:.2f}s / limit {limit}s)"
        if extra:
            line += f" [{extra}]"
        if ok and not within:
            line += " [time limit exceeded]"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert within, f"criterion {num} took {elapsed:.2f}s, limit {limit}s"


def test_criterion_01_bell_numbers():
    with criterion(1, "set partition counts are Bell numbers for n = 0..8", 5):
        got = [sum(1 for _ in enumerate_partitions(n)) for n in range(9)]
        assert got == [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_criterion_02_symmetry():
    with criterion(2, "(cr, ne, al) multiset is symmetric in cr and ne for n <= 9", 60):
        for n in range(10):
            c = Counter(stats(p) for p in enumerate_partitions(n))
            assert c == Counter({(b, a, t): m for (a, b, t), m in c.items()})


def test_criterion_03_example_distributions():
    def swapped(d):
        return Counter({(b, a): m for (a, b), m in d.items()})

    with criterion(3, "example level-1 multisets and equidistribution for l <= 5", 60):
        assert stat_distribution(EX34[0], 1) == Counter({(0, 1): 2, (1, 2): 1})
        want = Counter({(2, 3): 2, (3, 3): 1, (4, 3): 1, (4, 4): 1})
        assert stat_distribution(EX35[0], 1) == want == stat_distribution(EX35[1], 1)
        for l in range(6):
            a, b = level_distributions(EX34[0], l), level_distributions(EX34[1], l)
            assert a.keys() == b.keys()
            assert all(a[m] == swapped(b[m]) for m in a)
            assert level_distributions(EX35[0], l) == level_distributions(EX35[1], l)


def test_criterion_04_sequence_operators():
    with criterion(4, "child sequences obey the M and R operators for n <= 7", 30):
        for n in range(1, 8):
            for lam in enumerate_partitions(n):
                s = seq_stat(lam)
                kids = children(lam)
                assert seq_stat(kids[0]) == op_M(s)
                for i in range(1, lam.k + 1):
                    assert seq_stat(kids[i]) == op_R(s, ALPHA, BETA, i)


def test_criterion_05_charlier():
    with criterion(5, "diagram bijections and their statistics for n <= 8", 120):
        for n in range(1, 9):
            seen_r, seen_l = set(), set()
            for d in ch.enumerate_diagrams(n):
                pr, pl = ch.phi_r(d), ch.phi_l(d)
                seen_r.add(pr)
                seen_l.add(pl)
                assert ch.phi_r_inv(pr) == d and ch.phi_l_inv(pl) == d
            parts = set(enumerate_partitions(n))
            assert seen_r == parts == seen_l
            for lam in parts:
                dr, dl = ch.phi_r_inv(lam), ch.phi_l_inv(lam)
                c, ne, _ = stats(lam)
                assert sum(ch.profile(dr.path)) == lam.k
                assert sum(x - 1 for x in dr.xi) == c
                assert sum(x - 1 for x in dl.xi) == ne
                assert ch.profile(dr.path) == sim.crset(lam)
                zeros = [i for i, e in enumerate(ch.semi_type(dr.path), 1) if e == 0]
                assert zeros == [v + i for i, v in enumerate(sim.neseq(lam), 1)]
        shared = ch.phi_r_inv(parse_partition("1,7,10/2,4,6,8/3/5,9/11,12"))
        assert ch.phi_l(shared) == parse_partition("1,4,6,7,9/2,10/3/5,8/11,12")


def test_criterion_06_crossing_classes():
    with criterion(6, "crossing-class counts by formula and brute force for n <= 9", 120) as notes:
        for n in range(1, 10):
            for k in range(1, n + 1):
                f = sim.count_cr_formula(n, k)
                assert f == sim.count_classes_brute(n, k, "cr")
                if n >= 2 * k - 1:
                    assert sim.count_cr_closed(n, k) == f
        for row in class_table("cr"):
            if (row.n, row.k) in KNOWN_CR_ANOMALIES:
                assert row.anomaly
                notes.append(f"printed table n={row.n} k={row.k}: printed {row.printed}, "
                             f"computed {row.computed}, both reported")
            else:
                assert not row.anomaly, row


def test_criterion_07_nesting_classes():
    with criterion(7, "nesting-class recurrence, height sums and totals", 120):
        for n in range(1, 10):
            for k in range(1, n + 1):
                assert sim.count_ne_recurrence(n, k) == sim.count_classes_brute(n, k, "ne")
                g = sim.g_brute(n, k)
                assert g == sim.g_rec(n, k)
                assert sim.g_star_brute(n, k) == sum(sim.g_brute(r, k) for r in range(k, n + 1))
                if k >= 2 and n >= 2:
                    tail = (n - k) * sim.binom(n - 2, k - 1)
                    assert g == sim.g_brute(n - 1, k - 1) + sim.g_star_brute(n - 2, k - 1) + tail
                    assert g == sum(sim.g_brute(r, k - 1) for r in range(k - 1, n)) + tail
        for n in range(1, 13):
            total = sum(sim.count_ne_recurrence(n, k) for k in range(1, n + 1))
            assert sim.count_ne_total(n) == total
        assert all(not row.anomaly for row in class_table("ne"))
        assert [sim.count_ne_recurrence(6, k) for k in range(1, 7)] == [1, 11, 22, 16, 5, 1]


def compositions(k):
    for cuts in range(k):
        for pos in combinations(range(1, k), cuts):
            edges = (0,) + pos + (k,)
            yield tuple(b - a for a, b in zip(edges, edges[1:]))


def test_criterion_08_bounds_and_witnesses():
    with criterion(8, "profile bounds for n <= 8 and witnesses for n <= 7", 120):
        for n in range(1, 9):
            for lam in enumerate_partitions(n):
                prof = sim.crset(lam)
                l = len(prof) - 1
                assert l <= n - lam.k and min(prof) >= 1
                assert stats(lam)[0] <= sim.cr_upper_bound(n, lam.k, l)
        for n in range(1, 8):
            for k in range(1, n + 1):
                for comp in compositions(k):
                    l = len(comp) - 1
                    if l > n - k:
                        continue
                    for c in range(sim.cr_upper_bound(n, k, l) + 1):
                        w = sim.witness_cr(n, k, comp, c)
                        assert (w.n, w.k, sim.crset(w), stats(w)[0]) == (n, k, comp, c)


def test_criterion_09_generating_functions():
    with criterion(9, "series routes, continued fractions and contraction", 180):
        for n in range(1, 6):
            for pi in enumerate_partitions(n):
                assert gf.s_pi_theorem(pi, 4) == gf.s_pi_brute(pi, 4)
        for pi in (EX34[0], EX35[0]):
            assert gf.s_pi_theorem(pi, 6) == gf.s_pi_brute(pi, 6)
        tail = gf.ZSeries(gf.s_pi_brute(parse_partition("1"), 7).coeffs, 8).shift(1)
        want = gf.ZSeries.const(1, 8) + tail
        v1, v2 = gf.fraction_allpartitions_v1(8), gf.fraction_allpartitions_v2(8)
        assert v1 == want == v2
        assert v1.evaluate(1, 1) == [1, 1, 2, 5, 15, 52, 203, 877, 4140]
        q, p = gf.BivarPoly.monomial(1, 0), gf.BivarPoly.monomial(0, 1)
        for ws in ([q, p, q * p, q + p, 1 + q, p * p, q * q * p, 3], gf.partition_sfraction_weights):
            lhs, rhs = gf.cf_contract(ws, 6)
            assert lhs == rhs


def test_criterion_10_noncompatibility():
    with criterion(10, "nesting-similar pair with different crossing numbers", 1):
        pi = parse_partition("1,3/2,4/5,6")
        lam = parse_partition("1,3,6/2,4/5")
        assert sim.ne_key(pi) == sim.ne_key(lam)
        assert stats(pi)[0] == 1 and stats(lam)[0] == 2
