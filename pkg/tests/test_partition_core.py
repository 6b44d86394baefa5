import json
from collections import Counter
from math import comb

import pytest
from hypothesis import given, strategies as st

from crossnest.partition_core import (
    EMPTY, Arc, PartitionParseError, SetPartition, VertexRole, al, arcs, cr,
    enumerate_partitions, enumerate_partitions_k, from_json, ne, parse_partition,
    stats, to_canonical, to_json, vertex_roles,
)
from oracles import bell, cr_ne_oracle, set_partitions, stirling2

O, C, S, T = VertexRole.OPENER, VertexRole.CLOSER, VertexRole.SINGLETON, VertexRole.TRANSIENT
FIG2 = "1,7,10/2,4,6,8/3/5,9/11,12"


def test_parse_example():
    p = parse_partition("1,2,5/3,4")
    assert p.n == 5 and p.k == 2
    assert p.blocks == ((1, 2, 5), (3, 4))


def test_parse_resorts_blocks_and_elements():
    assert parse_partition("4,3/5,1,2") == parse_partition("1,2,5/3,4")


def test_parse_singleton():
    p = parse_partition("1")
    assert (p.n, p.k, p.blocks) == (1, 1, ((1,),))


@pytest.mark.parametrize("text, fragment", [
    ("1,3/2,2", "duplicate element 2"),
    ("1,3", "missing element 2"),
    ("1//2", "empty block"),
    ("1,x/2", "'x'"),
    ("0,1", "'0'"),
])
def test_parse_errors_name_the_token(text, fragment):
    with pytest.raises(PartitionParseError, match=fragment):
        parse_partition(text)


def test_empty_partition():
    assert parse_partition("") == EMPTY
    assert EMPTY.n == 0 and EMPTY.k == 0
    assert stats(EMPTY) == (0, 0, 0)


def test_invalid_direct_construction():
    with pytest.raises(ValueError):
        SetPartition(3, ((1, 2),))
    with pytest.raises(ValueError):
        SetPartition(3, ((2, 3), (1,)))


def test_arcs():
    assert arcs(parse_partition("1,2,5/3,4")) == [(1, 2), (2, 5), (3, 4)]
    assert arcs(parse_partition("1")) == []
    fig = arcs(parse_partition(FIG2))
    assert len(fig) == 7
    assert {Arc(2, 4), Arc(4, 6), Arc(6, 8)} <= set(fig)


def test_stat_examples():
    assert (cr(parse_partition("1,7/2,6/3,4/5,8")), ne(parse_partition("1,7/2,6/3,4/5,8"))) == (2, 3)
    assert stats(parse_partition("1,2,4/3,5"))[:2] == (1, 0)
    assert stats(parse_partition("1/2/3")) == (0, 0, 0)
    assert al(parse_partition("1,2,3")) == 1


def test_vertex_roles():
    assert vertex_roles(parse_partition("1,2,5/3,4")) == [O, T, O, C, C]
    assert vertex_roles(parse_partition("1")) == [S]
    roles = vertex_roles(parse_partition(FIG2))
    assert [i for i, r in enumerate(roles, 1) if r in (O, S)] == [1, 2, 3, 5, 11]


@pytest.mark.parametrize("n", range(0, 10))
def test_enumeration_counts_and_order(n):
    parts = list(enumerate_partitions(n))
    assert len(parts) == bell(n)
    assert len(set(parts)) == len(parts)
    rgs = [p.rgs() for p in parts]
    assert rgs == sorted(rgs)


def test_enumeration_matches_independent_generator():
    for n in range(7):
        ours = {to_canonical(p) for p in enumerate_partitions(n)}
        ref = {to_canonical(SetPartition.from_blocks(b)) for b in set_partitions(list(range(1, n + 1)))}
        assert ours == ref


def test_enumerate_k():
    assert len(list(enumerate_partitions_k(4, 2))) == 7
    assert list(enumerate_partitions_k(0, 0)) == [EMPTY]
    for n in range(8):
        for k in range(n + 1):
            parts = list(enumerate_partitions_k(n, k))
            assert len(parts) == stirling2(n, k)
            assert all(p.k == k for p in parts)


@pytest.mark.parametrize("n", range(0, 10))
def test_pair_identity_and_symmetry(n):
    counts = Counter()
    for p in enumerate_partitions(n):
        c, nn, a = stats(p)
        assert c + nn + a == comb(p.n - p.k, 2)
        counts[(c, nn, a)] += 1
    assert counts == Counter({(b, a_, t): m for (a_, b, t), m in counts.items()})


def test_stats_match_oracle():
    for n in range(8):
        for p in enumerate_partitions(n):
            assert stats(p)[:2] == cr_ne_oracle(p.blocks)


def test_round_trips():
    for n in range(9):
        for p in enumerate_partitions(n):
            assert parse_partition(to_canonical(p)) == p
            assert from_json(to_json(p)) == p


def test_json_shape():
    assert json.loads(to_json(parse_partition("1,2,5/3,4"))) == {"n": 5, "blocks": [[1, 2, 5], [3, 4]]}


@given(st.lists(st.integers(0, 5), min_size=1, max_size=10))
def test_rgs_round_trip(raw):
    # force the restricted-growth property
    rgs, top = [], -1
    for x in raw:
        v = min(x, top + 1)
        rgs.append(v)
        top = max(top, v)
    p = SetPartition.from_rgs(rgs)
    assert p.rgs() == tuple(rgs)
    roles = vertex_roles(p)
    assert roles.count(O) == roles.count(C)
    assert roles.count(O) + roles.count(S) == p.k
