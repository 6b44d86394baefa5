"""Set partitions of [n], their arc diagrams and the pairwise arc statistics.

Vertices are 1-based everywhere.  A partition is stored with its blocks
ordered by their minimal elements, each block sorted increasingly.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple


class PartitionParseError(ValueError):
    """Raised when a canonical partition string cannot be parsed."""


class Arc(NamedTuple):
    i: int
    j: int


class VertexRole(enum.Enum):
    OPENER = "opener"
    CLOSER = "closer"
    SINGLETON = "singleton"
    TRANSIENT = "transient"


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = sorted(x for b in self.blocks for x in b)
        if seen != list(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition [1..{self.n}]: {self.blocks!r}")
        for b in self.blocks:
            if not b or list(b) != sorted(b):
                raise ValueError(f"block not sorted/nonempty: {b!r}")
        mins = [b[0] for b in self.blocks]
        if mins != sorted(mins):
            raise ValueError("blocks must be ordered by their minima")

    @classmethod
    def from_blocks(cls, blocks) -> SetPartition:
        """Build from any iterable of blocks; sorts elements and blocks."""
        bs = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0)
        n = sum(len(b) for b in bs)
        return cls(n, tuple(bs))

    @classmethod
    def from_rgs(cls, rgs) -> SetPartition:
        """Build from a restricted-growth string (0-based block labels)."""
        blocks: list[list[int]] = []
        for v, label in enumerate(rgs, start=1):
            if label == len(blocks):
                blocks.append([v])
            else:
                blocks[label].append(v)
        return cls(len(rgs), tuple(tuple(b) for b in blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return to_canonical(self)

    def rgs(self) -> tuple[int, ...]:
        label = [0] * self.n
        for idx, b in enumerate(self.blocks):
            for x in b:
                label[x - 1] = idx
        return tuple(label)

    def block_of(self) -> dict[int, int]:
        """Map vertex -> index of its block."""
        return {x: idx for idx, b in enumerate(self.blocks) for x in b}


EMPTY = SetPartition(0, ())


def parse_partition(text: str) -> SetPartition:
    """Parse ``"1,2,5/3,4"`` style strings; the empty string is the empty partition."""
    text = text.strip()
    if text == "":
        return EMPTY
    blocks = []
    seen: set[int] = set()
    for chunk in text.split("/"):
        if chunk.strip() == "":
            raise PartitionParseError(f"empty block in {text!r}")
        block = []
        for tok in chunk.split(","):
            tok = tok.strip()
            try:
                x = int(tok)
            except ValueError:
                raise PartitionParseError(f"malformed token {tok!r}") from None
            if x < 1:
                raise PartitionParseError(f"element must be positive: {tok!r}")
            if x in seen:
                raise PartitionParseError(f"duplicate element {x}")
            seen.add(x)
            block.append(x)
        blocks.append(block)
    n = len(seen)
    missing = sorted(set(range(1, n + 1)) - seen)
    if missing:
        raise PartitionParseError(f"gap in 1..{max(seen)}: missing element {missing[0]}")
    return SetPartition.from_blocks(blocks)


def to_canonical(p: SetPartition) -> str:
    return "/".join(",".join(map(str, b)) for b in p.blocks)


def to_json(p: SetPartition) -> str:
    return json.dumps({"n": p.n, "blocks": [list(b) for b in p.blocks]})


def from_json(text: str) -> SetPartition:
    data = json.loads(text)
    p = SetPartition.from_blocks(data["blocks"])
    if p.n != data["n"]:
        raise ValueError(f"n={data['n']} does not match blocks")
    return p


def arcs(p: SetPartition) -> list[Arc]:
    """Arcs between consecutive elements of each block, sorted by left endpoint."""
    out = [Arc(b[t], b[t + 1]) for b in p.blocks for t in range(len(b) - 1)]
    out.sort()
    return out


def _pair_counts(p: SetPartition) -> tuple[int, int, int]:
    es = arcs(p)
    cr = ne = al = 0
    for x in range(len(es)):
        i1, j1 = es[x]
        for y in range(x + 1, len(es)):
            i2, j2 = es[y]
            # es sorted, so i1 <= i2; equal left ends cannot occur
            if i2 < j1 < j2:
                cr += 1
            elif j2 < j1:
                ne += 1
            else:
                al += 1
    return cr, ne, al


def cr(p: SetPartition) -> int:
    return _pair_counts(p)[0]


def ne(p: SetPartition) -> int:
    return _pair_counts(p)[1]


def al(p: SetPartition) -> int:
    return _pair_counts(p)[2]


def stats(p: SetPartition) -> tuple[int, int, int]:
    """(cr, ne, al) in one pass; cr + ne + al = C(n - k, 2)."""
    return _pair_counts(p)


def vertex_roles(p: SetPartition) -> list[VertexRole]:
    roles = [VertexRole.TRANSIENT] * p.n
    for b in p.blocks:
        if len(b) == 1:
            roles[b[0] - 1] = VertexRole.SINGLETON
        else:
            roles[b[0] - 1] = VertexRole.OPENER
            roles[b[-1] - 1] = VertexRole.CLOSER
    return roles


def _rgs_strings(n: int, k: int | None) -> Iterator[tuple[int, ...]]:
    # lexicographic restricted-growth strings, optionally with exactly k labels
    if n == 0:
        if k in (None, 0):
            yield ()
        return
    s = [0] * n

    def rec(pos: int, used: int):
        if pos == n:
            if k is None or used == k:
                yield tuple(s)
            return
        if k is not None and used + (n - pos) < k:
            return
        top = used if k is None else min(used, k - 1)
        for label in range(top + 1):
            s[pos] = label
            yield from rec(pos + 1, max(used, label + 1))

    yield from rec(1, 1)


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of [n] in lexicographic restricted-growth order."""
    for s in _rgs_strings(n, None):
        yield SetPartition.from_rgs(s)


def enumerate_partitions_k(n: int, k: int) -> Iterator[SetPartition]:
    if not 0 <= k <= n:
        return
    for s in _rgs_strings(n, k):
        yield SetPartition.from_rgs(s)


def total_pairs(p: SetPartition) -> int:
    return comb(p.n - p.k, 2)
