"""The tree of set partitions.

Children of a partition of [n] are the partitions of [n+1] whose restriction
to {2, ..., n+1} is order-isomorphic to it.  Child 0 adds {1} as a new
singleton block; child i merges the new vertex 1 into the (shifted) i-th block.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

from .partition_core import SetPartition, stats


def children(lam: SetPartition) -> list[SetPartition]:
    shifted = [tuple(x + 1 for x in b) for b in lam.blocks]
    n = lam.n + 1
    out = [SetPartition(n, ((1,),) + tuple(shifted))]
    for i in range(len(shifted)):
        merged = (1,) + shifted[i]
        out.append(SetPartition(n, (merged,) + tuple(shifted[:i]) + tuple(shifted[i + 1:])))
    return out


def child(lam: SetPartition, i: int) -> SetPartition:
    return children(lam)[i]


def parent(p: SetPartition) -> SetPartition:
    """Restrict to {2..n} and relabel to [n-1]."""
    if p.n < 1:
        raise ValueError("the empty partition has no parent")
    blocks = [tuple(x - 1 for x in b if x != 1) for b in p.blocks]
    return SetPartition.from_blocks(b for b in blocks if b)


def child_index(p: SetPartition) -> int:
    """Which child of its parent p is (0 if vertex 1 is a singleton)."""
    first = p.blocks[0]
    if len(first) == 1:
        return 0
    par = parent(p)
    target = tuple(x - 1 for x in first[1:])
    return par.blocks.index(target) + 1


def level(lam: SetPartition, l: int) -> Iterator[SetPartition]:
    """All descendants of lam at depth l, breadth first."""
    if l < 0:
        raise ValueError("level must be nonnegative")
    frontier = [lam]
    for _ in range(l):
        frontier = [c for mu in frontier for c in children(mu)]
    yield from frontier


def level_m(lam: SetPartition, l: int, m: int) -> Iterator[SetPartition]:
    for mu in level(lam, l):
        if mu.k == m:
            yield mu


def level_sizes(lam: SetPartition, l: int) -> dict[int, int]:
    """|T(lam, l, m)| keyed by m."""
    return dict(sorted(Counter(mu.k for mu in level(lam, l)).items()))


def _stat_vec(p: SetPartition, alpha, beta) -> tuple[int, int]:
    # plain tuple; compares and hashes equal to the matching GroupVec
    c, n_, _ = stats(p)
    return (c * alpha[0] + n_ * beta[0], c * alpha[1] + n_ * beta[1])


def distribution(parts: Iterable[SetPartition], alpha=(1, 0), beta=(0, 1)) -> Counter:
    return Counter(_stat_vec(mu, alpha, beta) for mu in parts)


def stat_distribution(lam: SetPartition, l: int, m: int | None = None,
                      alpha=(1, 0), beta=(0, 1)) -> Counter:
    """Multiset of cr*alpha + ne*beta over T(lam, l, m); m=None means all of T(lam, l)."""
    parts = level(lam, l) if m is None else level_m(lam, l, m)
    return distribution(parts, alpha, beta)


def level_distributions(lam: SetPartition, l: int, alpha=(1, 0), beta=(0, 1)) -> dict[int, Counter]:
    """Per-m distributions at depth l, from a single pass over the level."""
    out: dict[int, Counter] = {}
    for mu in level(lam, l):
        out.setdefault(mu.k, Counter())[_stat_vec(mu, alpha, beta)] += 1
    return dict(sorted(out.items()))
