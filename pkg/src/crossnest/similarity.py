"""Crossing- and nesting-similarity classes of set partitions.

Two partitions are crossing-similar when cr has the same distribution on
every level/block-count slice of their subtrees.  This reduces to a finite
key: (profile of the covering counts, cr).  Nesting-similarity reduces to
(left-arc count sequence, ne).  Counting is done three ways: distinct keys
over brute enumeration, a closed sum, and recurrences.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Literal

from .charlier import CharlierDiagram, RBMPath, Step, path_from_semitype, phi_r
from .partition_core import SetPartition, enumerate_partitions_k, stats
from .group_seq import uv_seq

Which = Literal["cr", "ne"]


class InfeasibleError(ValueError):
    pass


def binom(a: int, b: int) -> int:
    """Binomial coefficient, 0 outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    from math import comb
    return comb(a, b)


def crseq(lam: SetPartition) -> tuple[int, ...]:
    return tuple(uv_seq(lam)[0])


def neseq(lam: SetPartition) -> tuple[int, ...]:
    return tuple(uv_seq(lam)[1])


def crset(lam: SetPartition) -> tuple[int, ...]:
    """Multiset of crseq as an exponent vector (d_0, ..., d_l)."""
    u = crseq(lam)
    top = max(u)
    return tuple(u.count(i) for i in range(top + 1))


def cr_key(lam: SetPartition) -> tuple[tuple[int, ...], int]:
    return crset(lam), stats(lam)[0]


def ne_key(lam: SetPartition) -> tuple[tuple[int, ...], int]:
    return neseq(lam), stats(lam)[1]


def class_key(lam: SetPartition, which: Which):
    return cr_key(lam) if which == "cr" else ne_key(lam)


def count_classes_brute(n: int, k: int, which: Which) -> int:
    return len({class_key(lam, which) for lam in enumerate_partitions_k(n, k)})


def cr_upper_bound(n: int, k: int, l: int) -> int:
    return (n - k - 1) * l - l * (l - 1) // 2


def count_cr_formula(n: int, k: int) -> int:
    m = min(n - k, k - 1)
    return sum(binom(k - 1, l) * (cr_upper_bound(n, k, l) + 1) for l in range(m + 1))


def count_cr_closed(n: int, k: int) -> int:
    """Closed form valid for n >= 2k - 1."""
    if n < 2 * k - 1:
        raise ValueError("closed form needs n >= 2k - 1")
    val = (Fraction(n - k - 1) * (k - 1) * Fraction(2) ** (k - 2)
           + Fraction(2) ** (k - 1)
           - Fraction((k - 1) * (k - 2)) * Fraction(2) ** (k - 4))
    assert val.denominator == 1
    return int(val)


# nesting classes

@lru_cache(maxsize=None)
def g_rec(n: int, k: int) -> int:
    """Sum over semi-types in S^0_{n,k} of the heights of their 1-steps."""
    if k <= 0 or n < k:
        return 0
    return sum(g_rec(r, k - 1) for r in range(k - 1, n)) + (n - k) * binom(n - 2, k - 1)


def g_star_rec(n: int, k: int) -> int:
    return sum(g_rec(r, k) for r in range(k, n + 1))


@lru_cache(maxsize=None)
def count_ne_recurrence(n: int, k: int) -> int:
    if not 1 <= k <= n:
        return 0
    if k == 1:
        f = 1
    else:
        f = sum(count_ne_recurrence(r, k - 1) for r in range(k - 1, n)) + (k - 1) * binom(n - 2, k)
    via_g = g_rec(n, k) - (n - k - 1) * binom(n - 1, k - 1)
    if f != via_g:
        raise AssertionError(f"f and g bookkeeping disagree at n={n}, k={k}: {f} != {via_g}")
    return f


def count_ne_total(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    if n == 2:
        return 2
    val = Fraction(2) ** (n - 5) * (n * n - 5 * n + 22)
    assert val.denominator == 1
    return int(val)


def semitypes(n: int, k: int, restricted: bool) -> Iterator[tuple[int, ...]]:
    """0/1 sequences of length n with k zeros (first entry 0 if restricted)."""
    for zeros in combinations(range(n), k):
        if restricted and (not zeros or zeros[0] != 0):
            continue
        eps = [1] * n
        for z in zeros:
            eps[z] = 0
        yield tuple(eps)


def _height_sum(eps) -> int:
    p = path_from_semitype(eps)
    return sum(h for e, h in zip(eps, p.heights) if e == 1)


def g_brute(n: int, k: int) -> int:
    return sum(_height_sum(e) for e in semitypes(n, k, restricted=True))


def g_star_brute(n: int, k: int) -> int:
    return sum(_height_sum(e) for e in semitypes(n, k, restricted=False))


def count_ne_semitype(n: int, k: int) -> int:
    """f_{n,k} as the sum of (max nestings + 1) over admissible semi-types."""
    from .charlier import ne_of_semitype
    return sum(ne_of_semitype(e) + 1 for e in semitypes(n, k, restricted=True))


# witnesses

def witness_path(n: int, k: int, composition) -> RBMPath:
    d = tuple(composition)
    l = len(d) - 1
    if any(x < 1 for x in d) or sum(d) != k or not 0 <= l <= n - k:
        raise InfeasibleError(f"{d} is not a composition of {k} into at most {n - k + 1} parts")
    steps: list[Step] = []
    if l + 1 <= n - k:
        for di in d:
            steps += [Step.RE] * (di - 1) + [Step.NE]
        steps += [Step.BE] * (n - k - l - 1) + [Step.SE] * (l + 1)
    else:
        for di in d[:-1]:
            steps += [Step.RE] * (di - 1) + [Step.NE]
        steps += [Step.RE] * d[-1] + [Step.SE] * l
    return RBMPath(tuple(steps))


def witness_cr(n: int, k: int, composition, c: int) -> SetPartition:
    """A partition of [n] with k blocks, the given crset profile and exactly c crossings."""
    if not 1 <= k <= n:
        raise InfeasibleError(f"need 1 <= k <= n, got n={n}, k={k}")
    path = witness_path(n, k, composition)
    l = len(composition) - 1
    if not 0 <= c <= cr_upper_bound(n, k, l):
        raise InfeasibleError(f"c={c} outside 0..{cr_upper_bound(n, k, l)}")
    rest = c
    xi = []
    for s, h in zip(path.steps, path.heights()):
        if s.opens:
            xi.append(1)
        else:
            take = min(h - 1, rest)
            xi.append(take + 1)
            rest -= take
    if rest:
        raise InfeasibleError(f"could not place {c} crossings")
    return phi_r(CharlierDiagram(path, tuple(xi)))
