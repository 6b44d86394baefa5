"""Exact generating functions for (cr, ne) over subtrees of the partition tree.

``BivarPoly`` is a sparse integer polynomial in (q, p); ``ZSeries`` is a power
series in z truncated at a fixed order whose coefficients are BivarPolys.
The series S_pi = sum_l sum_{mu in T(pi,l)} q^cr p^ne z^l is computed by
brute enumeration, by the b_{l,r} table and weighted paths, and (for the
full set of partitions) by truncated continued fractions.
"""
from __future__ import annotations

from collections.abc import Callable, Sequence
from itertools import combinations

from .group_seq import uv_seq
from .partition_core import SetPartition, stats
from .partition_tree import children


class BivarPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, int], int] = {}
        if terms:
            for e, c in dict(terms).items():
                if c:
                    self.terms[e] = self.terms.get(e, 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def const(cls, c: int) -> BivarPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, dq: int, dp: int, c: int = 1) -> BivarPoly:
        return cls({(dq, dp): c})

    @staticmethod
    def lift(x) -> BivarPoly:
        return x if isinstance(x, BivarPoly) else BivarPoly.const(x)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly.const(other)
        return isinstance(other, BivarPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = BivarPoly.lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-BivarPoly.lift(other))

    def __rsub__(self, other):
        return BivarPoly.lift(other) - self

    def __mul__(self, other):
        other = BivarPoly.lift(other)
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __call__(self, q, p):
        return sum(c * q ** a * p ** b for (a, b), c in self.terms.items())

    def swap(self) -> BivarPoly:
        """Exchange the roles of q and p."""
        return BivarPoly({(b, a): c for (a, b), c in self.terms.items()})

    def at_q_equals_p(self) -> dict[int, int]:
        """Coefficients by total degree after setting p = q."""
        out: dict[int, int] = {}
        for (a, b), c in self.terms.items():
            out[a + b] = out.get(a + b, 0) + c
        return {d: c for d, c in sorted(out.items()) if c}

    def total_degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            mono = "*".join(s for s in (_pw("q", a), _pw("p", b)) if s)
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def _pw(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


ZERO = BivarPoly()
ONE = BivarPoly.const(1)


class ZSeries:
    """Power series in z with BivarPoly coefficients, truncated after z^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        cs = [BivarPoly.lift(c) for c in coeffs][: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = cs

    @classmethod
    def const(cls, c, order: int) -> ZSeries:
        return cls([c], order)

    def __eq__(self, other):
        return (isinstance(other, ZSeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    def _coerce(self, other) -> ZSeries:
        if isinstance(other, ZSeries):
            if other.order != self.order:
                raise ValueError("series truncated at different orders")
            return other
        return ZSeries.const(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return ZSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return ZSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        L = self.order
        out = [ZERO] * (L + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(L + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return ZSeries(out, L)

    __rmul__ = __mul__

    def shift(self, s: int = 1) -> ZSeries:
        """Multiply by z^s."""
        return ZSeries([ZERO] * s + self.coeffs, self.order)

    def reciprocal(self) -> ZSeries:
        c0 = self.coeffs[0]
        if c0 == ONE:
            inv0 = 1
        elif c0 == BivarPoly.const(-1):
            inv0 = -1
        else:
            raise ArithmeticError(f"constant term {c0!r} is not invertible over the integers")
        out = [BivarPoly.const(inv0)]
        for m in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, m + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * out[m - j]
            out.append(-acc * inv0)
        return ZSeries(out, self.order)

    def map(self, fn) -> ZSeries:
        return ZSeries([fn(c) for c in self.coeffs], self.order)

    def evaluate(self, q, p) -> list:
        return [c(q, p) for c in self.coeffs]

    def __repr__(self):
        return f"ZSeries({self.coeffs!r}, order={self.order})"


def qp_int(r: int) -> BivarPoly:
    """[r]_{q,p} = q^{r-1} + q^{r-2} p + ... + p^{r-1}."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return BivarPoly({(r - 1 - t, t): 1 for t in range(r)})


def b0r(pi: SetPartition, r: int, relative: bool = False) -> BivarPoly:
    """Generating function of f_0^r(seq(pi)).

    Every term carries the factor q^cr(pi) p^ne(pi) of the root itself;
    ``relative=True`` drops it and returns the covering/left-arc part only.
    """
    if pi.k < 1:
        raise ValueError("need a partition with at least one block")
    u, v = uv_seq(pi)
    c0, n0 = (0, 0) if relative else stats(pi)[:2]
    out: dict[tuple[int, int], int] = {}
    for idx in combinations(range(1, pi.k), r):
        e = (c0 + sum(u[i] for i in idx) - (r - 1) * u[0],
             n0 + sum(v[i] for i in idx) - (r - 1) * v[0])
        out[e] = out.get(e, 0) + 1
    return BivarPoly(out)


def blr_table(pi: SetPartition, L: int) -> list[list[BivarPoly]]:
    """Rows b_{l, 0..k+l-1} for l = 0..L."""
    k = pi.k
    rows = [[b0r(pi, r) for r in range(k)]]
    for l in range(1, L + 1):
        prev = rows[-1]

        def at(r):
            return prev[r] if 0 <= r < len(prev) else ZERO

        row = []
        for r in range(k + l):
            w = qp_int(r + 1)
            row.append(at(r - 1) + (1 + w) * at(r) + w * at(r + 1))
        rows.append(row)
    return rows


def _step_weights(r: int) -> tuple[BivarPoly, BivarPoly, BivarPoly]:
    # (to r-1, stay at r, to r+1) as read off the b_{l,r} recurrence
    w = qp_int(r + 1)
    return ONE, 1 + w, w


def c_path_table(L: int) -> list[list[BivarPoly]]:
    """c_{l,s} for 0 <= s <= l <= L."""
    table = []
    vec = [ONE]
    for l in range(L + 1):
        table.append(list(vec))
        nxt = [ZERO] * (len(vec) + 1)
        for r, w in enumerate(vec):
            if not w:
                continue
            down, stay, up = _step_weights(r)
            if r > 0:
                nxt[r - 1] = nxt[r - 1] + w * down
            nxt[r] = nxt[r] + w * stay
            nxt[r + 1] = nxt[r + 1] + w * up
        vec = nxt
    return table


def c_path_weight(l: int, s: int) -> BivarPoly:
    if l < 0 or s < 0:
        raise ValueError("l and s must be nonnegative")
    if s > l:
        return ZERO
    return c_path_table(l)[l][s]


def s_pi_brute(pi: SetPartition, L: int) -> ZSeries:
    coeffs = []
    frontier = [pi]
    for l in range(L + 1):
        if l:
            frontier = [c for mu in frontier for c in children(mu)]
        acc: dict[tuple[int, int], int] = {}
        for mu in frontier:
            c, n_, _ = stats(mu)
            acc[(c, n_)] = acc.get((c, n_), 0) + 1
        coeffs.append(BivarPoly(acc))
    return ZSeries(coeffs, L)


def s_pi_theorem(pi: SetPartition, L: int) -> ZSeries:
    """sum_s b_{0,s} K_s(z), with K_s expanded through the path weights c_{l,s}."""
    ct = c_path_table(L)
    out = ZSeries([], L)
    for s in range(pi.k):
        ks = ZSeries([ct[l][s] if s <= l else ZERO for l in range(L + 1)], L)
        out = out + ks * ZSeries.const(b0r(pi, s), L)
    return out


def s_pi_table(pi: SetPartition, L: int) -> ZSeries:
    """b_{l,0} read straight from the recurrence table."""
    return ZSeries([row[0] for row in blr_table(pi, L)], L)


Weight = Callable[[int], object] | Sequence


def _weight_fn(w: Weight) -> Callable[[int], BivarPoly]:
    if callable(w):
        return lambda h: BivarPoly.lift(w(h))
    seq = list(w)
    return lambda h: BivarPoly.lift(seq[h]) if h < len(seq) else ZERO


def j_fraction(a: Weight, c: Weight, L: int, start: int = 0) -> ZSeries:
    """1/(1 - c_h z - a_h z^2/(1 - c_{h+1} z - ...)) from level ``start``, to order L.

    Evaluated bottom-up from depth L+1 with the tail set to 1.
    """
    af, cf = _weight_fn(a), _weight_fn(c)
    tail = ZSeries.const(1, L)
    for h in range(start + L, start - 1, -1):
        denom = (ZSeries.const(1, L)
                 - ZSeries([ZERO, cf(h)], L)
                 - ZSeries([ZERO, ZERO, af(h)], L) * tail)
        tail = denom.reciprocal()
    return tail


def cf_truncate(a: Weight, c: Weight, L: int) -> ZSeries:
    return j_fraction(a, c, L)


def k_s_series(s: int, L: int) -> ZSeries:
    """K_s(z) = J^(0) a_0 z J^(1) a_1 z ... J^(s) for the partition-tree weights."""
    a = lambda h: qp_int(h + 1)
    c = lambda h: qp_int(h + 1) + 1
    out = j_fraction(a, c, L, 0)
    for h in range(1, s + 1):
        out = out * ZSeries.const(a(h - 1), L).shift(1) * j_fraction(a, c, L, h)
    return out


def fraction_allpartitions_v2(L: int) -> ZSeries:
    """1 + z * S_{{1}} with levels c_h = [h+1] + 1, a_h = [h+1]."""
    j = j_fraction(lambda h: qp_int(h + 1), lambda h: qp_int(h + 1) + 1, L)
    return ZSeries.const(1, L) + j.shift(1)


def fraction_allpartitions_v1(L: int) -> ZSeries:
    """J-fraction with levels c_h = 1 + [h], a_h = [h+1]."""
    return j_fraction(lambda h: qp_int(h + 1), lambda h: 1 + qp_int(h), L)


def allpartitions_brute(L: int) -> ZSeries:
    from .partition_core import enumerate_partitions

    coeffs = []
    for n in range(L + 1):
        acc: dict[tuple[int, int], int] = {}
        for lam in enumerate_partitions(n):
            c, n_, _ = stats(lam)
            acc[(c, n_)] = acc.get((c, n_), 0) + 1
        coeffs.append(BivarPoly(acc))
    return ZSeries(coeffs, L)


def s_fraction(c: Weight, L: int) -> ZSeries:
    """c_0/(1 - c_1 z/(1 - c_2 z/(...))) to order L."""
    cf = _weight_fn(c)
    tail = ZSeries.const(1, L)
    for h in range(L + 1, 0, -1):
        tail = (ZSeries.const(1, L) - ZSeries([ZERO, cf(h)], L) * tail).reciprocal()
    return ZSeries.const(cf(0), L) * tail


def contracted_fraction(c: Weight, L: int) -> ZSeries:
    """c_0 + c_0 c_1 z/(1 - (c_1+c_2) z - c_2 c_3 z^2/(1 - (c_3+c_4) z - ...))."""
    cf = _weight_fn(c)
    j = j_fraction(lambda h: cf(2 * h + 2) * cf(2 * h + 3),
                   lambda h: cf(2 * h + 1) + cf(2 * h + 2), L)
    return ZSeries.const(cf(0), L) + ZSeries.const(cf(0) * cf(1), L).shift(1) * j


def even_contracted_fraction(c: Weight, L: int) -> ZSeries:
    """c_0/(1 - c_1 z - c_1 c_2 z^2/(1 - (c_2+c_3) z - c_3 c_4 z^2/...))."""
    cf = _weight_fn(c)
    j = j_fraction(lambda h: cf(2 * h + 1) * cf(2 * h + 2),
                   lambda h: cf(1) if h == 0 else cf(2 * h) + cf(2 * h + 1), L)
    return ZSeries.const(cf(0), L) * j


def cf_contract(c_weights: Weight, L: int) -> tuple[ZSeries, ZSeries]:
    """Both sides of the contraction identity, truncated at order L."""
    return s_fraction(c_weights, L), contracted_fraction(c_weights, L)


def partition_sfraction_weights(h: int) -> BivarPoly:
    """S-fraction weights 1, 1, [1], 1, [2], 1, [3], ... for all set partitions."""
    if h == 0 or h % 2 == 1:
        return ONE
    return qp_int(h // 2)
