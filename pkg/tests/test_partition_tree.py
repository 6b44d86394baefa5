from collections import Counter

import pytest

from crossnest.partition_core import EMPTY, enumerate_partitions, parse_partition, stats, to_canonical
from crossnest.partition_tree import (
    child_index, children, level, level_distributions, level_m, level_sizes, parent,
    stat_distribution,
)
from oracles import bell

EX34 = parse_partition("1,2,5/3,4")
EX34_PI = parse_partition("1,2,4/3,5")
EX35 = parse_partition("1,7/2,6/3,4/5,8")
EX35_PI = parse_partition("1,8/2,4/3,6/5,7")


def swap(c):
    return Counter({(b, a): m for (a, b), m in c.items()})


def test_children_of_singleton():
    assert [to_canonical(c) for c in children(parse_partition("1"))] == ["1/2", "1,2"]


def test_children_of_empty():
    assert children(EMPTY) == [parse_partition("1")]


def test_children_block_counts():
    kids = children(EX34)
    assert [c.k for c in kids] == [3, 2, 2]
    assert Counter(stats(c)[:2] for c in kids) == Counter({(0, 1): 2, (1, 2): 1})


def test_parent():
    assert parent(parse_partition("1,2")) == parse_partition("1")
    assert parent(parse_partition("1/2")) == parse_partition("1")
    with pytest.raises(ValueError):
        parent(EMPTY)


def test_parent_child_round_trip():
    for n in range(1, 9):
        for p in enumerate_partitions(n):
            kids = children(parent(p))
            assert p in kids
            assert kids[child_index(p)] == p


def test_children_count():
    for n in range(9):
        for p in enumerate_partitions(n):
            assert len(children(p)) == p.k + 1


def test_first_children_keep_statistic():
    for n in range(1, 9):
        for p in enumerate_partitions(n):
            kids = children(p)
            s = stats(p)[:2]
            assert stats(kids[0])[:2] == s
            assert stats(kids[1])[:2] == s


@pytest.mark.parametrize("l", range(8))
def test_level_of_singleton_is_bell(l):
    assert sum(1 for _ in level(parse_partition("1"), l)) == bell(l + 1)


def test_level_m_small_cases():
    assert list(level_m(EX34, 0, 2)) == [EX34]
    assert list(level_m(EX34, 1, 3)) == [children(EX34)[0]]


def test_level_block_range():
    for n in range(1, 7):
        for p in enumerate_partitions(n):
            for l in range(4):
                sizes = level_sizes(p, l)
                assert set(sizes) <= set(range(p.k, p.k + l + 1))
                assert set(sizes) == set(range(p.k, p.k + l + 1))
                assert sum(sizes.values()) == sum(1 for _ in level(p, l))


def test_distribution_example_35():
    want = Counter({(2, 3): 2, (3, 3): 1, (4, 3): 1, (4, 4): 1})
    assert stat_distribution(EX35, 1) == want
    assert stat_distribution(EX35_PI, 1) == want


def test_distribution_level_zero():
    assert stat_distribution(EX34, 0) == Counter({(0, 1): 1})


def test_general_alpha_beta():
    d = stat_distribution(EX34, 1, alpha=(1, 1), beta=(0, 2))
    assert d == Counter({(0, 2): 2, (1, 5): 1})


@pytest.mark.parametrize("l", range(6))
def test_swapped_pair_all_levels(l):
    a = level_distributions(EX34, l)
    b = level_distributions(EX34_PI, l)
    assert a.keys() == b.keys()
    for m in a:
        assert a[m] == swap(b[m])
        assert stat_distribution(EX34, l, m, (1, 0), (0, 1)) == stat_distribution(EX34_PI, l, m, (0, 1), (1, 0))


@pytest.mark.parametrize("l", range(6))
def test_direct_pair_all_levels(l):
    assert level_distributions(EX35, l) == level_distributions(EX35_PI, l)


def test_first_two_levels_decide_deeper_levels():
    # per-m comparison at l = 0, 1 is the hypothesis; levels up to 4 must then agree
    groups = {}
    for n in range(1, 7):
        for p in enumerate_partitions(n):
            key = tuple((l, m, tuple(sorted(d.items())))
                        for l in (0, 1) for m, d in level_distributions(p, l).items())
            groups.setdefault(key, []).append(p)
    compared = 0
    for members in groups.values():
        ref = [level_distributions(members[0], l) for l in range(5)]
        for other in members[1:]:
            compared += 1
            for l in range(2, 5):
                assert level_distributions(other, l) == ref[l]
    assert compared > 0


def test_per_level_hypothesis_equivalent_to_per_m():
    # T(lam,1,k+1) = T(lam,0) and T(lam,1,k) = T(lam,1) minus T(lam,0)
    for n in range(1, 7):
        for p in enumerate_partitions(n):
            lvl1 = level_distributions(p, 1)
            whole0 = stat_distribution(p, 0)
            assert lvl1[p.k + 1] == whole0
            assert lvl1[p.k] == stat_distribution(p, 1) - whole0
