"""Sequences over Z+Z and the operators that track them down the partition tree.

For a partition lam with k >= 1 blocks, ``seq_stat(lam, a, b)`` lists the
statistic cr*a + ne*b of children 1..k.  Moving to a child transforms this
sequence by ``op_M`` (child 0) or ``op_R(.., i)`` (child i), which lets whole
levels be described by multisets of sequences.

Multisets are ``collections.Counter`` objects throughout.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import NamedTuple

from .partition_core import SetPartition, arcs, stats
from .partition_tree import level_m


class GroupVec(NamedTuple):
    """Element of Z+Z; ``(a, b)`` is a*(1,0) + b*(0,1)."""

    a: int
    b: int

    def __add__(self, other):
        return GroupVec(self.a + other[0], self.b + other[1])

    __radd__ = __add__

    def __sub__(self, other):
        return GroupVec(self.a - other[0], self.b - other[1])

    def __neg__(self):
        return GroupVec(-self.a, -self.b)

    def __mul__(self, c: int):
        return GroupVec(self.a * c, self.b * c)

    __rmul__ = __mul__


ZERO = GroupVec(0, 0)
ALPHA = GroupVec(1, 0)
BETA = GroupVec(0, 1)

GSeq = tuple  # tuple[GroupVec, ...]


def _vec(g) -> GroupVec:
    return g if isinstance(g, GroupVec) else GroupVec(*g)


def s_stat(p: SetPartition, alpha=ALPHA, beta=BETA) -> GroupVec:
    c, n_, _ = stats(p)
    return _vec(alpha) * c + _vec(beta) * n_


def uv_seq(lam: SetPartition) -> tuple[list[int], list[int]]:
    """u_i = #arcs strictly covering min B_i; v_i = #arcs entirely left of it."""
    if lam.k < 1:
        raise ValueError("uv_seq needs at least one block")
    es = arcs(lam)
    u, v = [], []
    for b in lam.blocks:
        m = b[0]
        u.append(sum(1 for i, j in es if i < m < j))
        v.append(sum(1 for _, j in es if j < m))
    return u, v


def seq_stat(lam: SetPartition, alpha=ALPHA, beta=BETA) -> GSeq:
    if lam.k < 1:
        raise ValueError("seq_stat is undefined for the empty partition")
    alpha, beta = _vec(alpha), _vec(beta)
    base = s_stat(lam, alpha, beta)
    u, v = uv_seq(lam)
    return tuple(base + alpha * ui + beta * vi for ui, vi in zip(u, v))


def op_M(s: GSeq) -> GSeq:
    return (s[0],) + tuple(s)


def op_R(s: GSeq, alpha, beta, i: int) -> GSeq:
    """R_{alpha,beta,i}: 1-based i; output starts with x_i."""
    if not 1 <= i <= len(s):
        raise IndexError(f"index {i} out of range for sequence of length {len(s)}")
    alpha, beta = _vec(alpha), _vec(beta)
    s = tuple(map(_vec, s))
    xi, x1 = s[i - 1], s[0]
    left = xi - x1 + alpha
    right = xi - x1 + beta
    return (xi,) + tuple(x + left for x in s[:i - 1]) + tuple(x + right for x in s[i:])


def op_R_all(s: GSeq, alpha, beta) -> Counter:
    return Counter(op_R(s, alpha, beta, i) for i in range(1, len(s) + 1))


def apply_M(X: Counter) -> Counter:
    out = Counter()
    for s, mult in X.items():
        out[op_M(s)] += mult
    return out


def apply_R(X: Counter, alpha, beta) -> Counter:
    out = Counter()
    for s, mult in X.items():
        for i in range(1, len(s) + 1):
            out[op_R(s, alpha, beta, i)] += mult
    return out


def f_gamma_r(s: GSeq, gamma, r: int) -> Counter:
    """{x_{a_1} + ... + x_{a_r} - (r-1) x_1 + gamma : 1 < a_1 < ... < a_r <= l}."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    gamma = _vec(gamma)
    x1 = _vec(s[0])
    shift = gamma - x1 * (r - 1)
    out = Counter()
    for idx in combinations(range(1, len(s)), r):
        total = shift
        for a in idx:
            total = total + _vec(s[a])
        out[total] += 1
    return out


def f_gamma_r_multi(X: Counter, gamma, r: int) -> Counter:
    """f extended to a multiset of sequences (multiplicities add)."""
    out = Counter()
    for s, mult in X.items():
        for g, c in f_gamma_r(s, gamma, r).items():
            out[g] += c * mult
    return out


def level_seq_direct(lam: SetPartition, l: int, m: int, alpha=ALPHA, beta=BETA) -> Counter:
    return Counter(seq_stat(mu, alpha, beta) for mu in level_m(lam, l, m))


def level_seq_recurrence(lam: SetPartition, l: int, m: int, alpha=ALPHA, beta=BETA) -> Counter:
    """E(lam,l,m) = R(E(lam,l-1,m)) + M(E(lam,l-1,m-1)), from E(lam,0,k) = {seq(lam)}."""
    k = lam.k
    layer = {k: Counter([seq_stat(lam, alpha, beta)])}
    for _ in range(l):
        nxt: dict[int, Counter] = {}
        for mm, X in layer.items():
            nxt.setdefault(mm, Counter()).update(apply_R(X, alpha, beta))
            nxt.setdefault(mm + 1, Counter()).update(apply_M(X))
        layer = nxt
    return layer.get(m, Counter())


def level_seq_multiset(lam: SetPartition, l: int, m: int, alpha=ALPHA, beta=BETA) -> Counter:
    """Multiset of seq_stat over T(lam,l,m); direct and recurrence routes must agree."""
    direct = level_seq_direct(lam, l, m, alpha, beta)
    rec = level_seq_recurrence(lam, l, m, alpha, beta)
    if direct != rec:
        raise AssertionError(f"level sequence routes disagree for {lam} at l={l}, m={m}")
    return direct
