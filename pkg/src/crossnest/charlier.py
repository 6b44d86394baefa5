"""Restricted bicolored Motzkin paths, Charlier diagrams and the maps to partitions.

A partition's vertex roles give its path: opener -> NE, closer -> SE,
singleton -> RE (red east), transient -> BE (blue east).  A Charlier diagram
adds a choice ``xi_i`` for every closer/transient: which still-open vertex on
its left it connects to.  ``phi_r`` ranks the candidates right to left,
``phi_l`` left to right.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .partition_core import SetPartition, VertexRole, vertex_roles


class Step(enum.Enum):
    NE = "N"
    SE = "S"
    RE = "R"
    BE = "B"

    @property
    def rise(self) -> int:
        return {"N": 1, "S": -1}.get(self.value, 0)

    @property
    def opens(self) -> bool:
        return self in (Step.NE, Step.RE)


_ROLE_STEP = {
    VertexRole.OPENER: Step.NE,
    VertexRole.CLOSER: Step.SE,
    VertexRole.SINGLETON: Step.RE,
    VertexRole.TRANSIENT: Step.BE,
}


class InvalidPathError(ValueError):
    pass


def heights(steps) -> list[int]:
    """Height (left endpoint y) of every step."""
    out, h = [], 0
    for s in steps:
        out.append(h)
        h += s.rise
    return out


@dataclass(frozen=True)
class RBMPath:
    steps: tuple[Step, ...]

    def __post_init__(self):
        h = 0
        for idx, s in enumerate(self.steps, start=1):
            if s is Step.BE and h == 0:
                raise InvalidPathError(f"blue east step at height 0 (step {idx})")
            h += s.rise
            if h < 0:
                raise InvalidPathError(f"path goes below the axis at step {idx}")
        if h != 0:
            raise InvalidPathError(f"path ends at height {h}")

    @classmethod
    def parse(cls, text: str) -> RBMPath:
        return cls(tuple(Step(c) for c in text))

    def __str__(self) -> str:
        return "".join(s.value for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        return heights(self.steps)


@dataclass(frozen=True)
class CharlierDiagram:
    path: RBMPath
    xi: tuple[int, ...]

    def __post_init__(self):
        if len(self.xi) != len(self.path):
            raise ValueError("xi and path differ in length")
        for idx, (s, h, x) in enumerate(zip(self.path.steps, self.path.heights(), self.xi), 1):
            if s.opens:
                if x != 1:
                    raise ValueError(f"xi_{idx} must be 1 on an {s.name} step")
            elif not 1 <= x <= h:
                raise ValueError(f"xi_{idx}={x} outside 1..{h}")

    def to_json(self) -> str:
        return json.dumps({"path": str(self.path), "xi": list(self.xi)})

    @classmethod
    def from_json(cls, text: str) -> CharlierDiagram:
        data = json.loads(text)
        return cls(RBMPath.parse(data["path"]), tuple(data["xi"]))


def shape(lam: SetPartition) -> RBMPath:
    return RBMPath(tuple(_ROLE_STEP[r] for r in vertex_roles(lam)))


def profile(m: RBMPath) -> tuple[int, ...]:
    """Counts of NE/RE steps by starting height, trailing zeros trimmed."""
    counts: dict[int, int] = {}
    for s, h in zip(m.steps, m.heights()):
        if s.opens:
            counts[h] = counts.get(h, 0) + 1
    if not counts:
        return ()
    top = max(counts)
    return tuple(counts.get(i, 0) for i in range(top + 1))


def semi_type(m: RBMPath) -> tuple[int, ...]:
    return tuple(0 if s.opens else 1 for s in m.steps)


def _build(d: CharlierDiagram, from_right: bool) -> SetPartition:
    n = len(d.path)
    nxt = [0] * (n + 1)
    has_prev = [False] * (n + 1)
    available: list[int] = []  # open vertices, increasing
    for i, (s, x) in enumerate(zip(d.path.steps, d.xi), start=1):
        if s in (Step.SE, Step.BE):
            pos = len(available) - x if from_right else x - 1
            j = available.pop(pos)
            nxt[j] = i
            has_prev[i] = True
        if s in (Step.NE, Step.BE):
            available.append(i)
    blocks = []
    for v in range(1, n + 1):
        if not has_prev[v]:
            b = [v]
            while nxt[b[-1]]:
                b.append(nxt[b[-1]])
            blocks.append(tuple(b))
    return SetPartition(n, tuple(blocks))


def phi_r(d: CharlierDiagram) -> SetPartition:
    return _build(d, from_right=True)


def phi_l(d: CharlierDiagram) -> SetPartition:
    return _build(d, from_right=False)


def _inverse(lam: SetPartition, from_right: bool) -> CharlierDiagram:
    path = shape(lam)
    prev = {}
    for b in lam.blocks:
        for a, c in zip(b, b[1:]):
            prev[c] = a
    xi = []
    available: list[int] = []
    for i, s in enumerate(path.steps, start=1):
        if s in (Step.SE, Step.BE):
            pos = available.index(prev[i])
            xi.append(len(available) - pos if from_right else pos + 1)
            available.pop(pos)
        else:
            xi.append(1)
        if s in (Step.NE, Step.BE):
            available.append(i)
    return CharlierDiagram(path, tuple(xi))


def phi_r_inv(lam: SetPartition) -> CharlierDiagram:
    return _inverse(lam, from_right=True)


def phi_l_inv(lam: SetPartition) -> CharlierDiagram:
    return _inverse(lam, from_right=False)


def enumerate_rbm_paths(n: int) -> Iterator[RBMPath]:
    def rec(prefix: list[Step], h: int):
        left = n - len(prefix)
        if left == 0:
            if h == 0:
                yield RBMPath(tuple(prefix))
            return
        for s in Step:
            if s is Step.BE and h == 0:
                continue
            h2 = h + s.rise
            if h2 < 0 or h2 > left - 1:
                continue
            prefix.append(s)
            yield from rec(prefix, h2)
            prefix.pop()

    yield from rec([], 0)


def enumerate_diagrams(n: int) -> Iterator[CharlierDiagram]:
    for m in enumerate_rbm_paths(n):
        ranges = [range(1, 2) if s.opens else range(1, h + 1)
                  for s, h in zip(m.steps, m.heights())]
        for xi in product(*ranges):
            yield CharlierDiagram(m, xi)


@dataclass(frozen=True)
class SemitypePath:
    """Result of the backward construction from a 0/1 sequence.

    ``restricted`` is False when the path has a blue step at height 0,
    which happens exactly when the sequence starts with 1.
    """

    steps: tuple[Step, ...]
    heights: tuple[int, ...]
    restricted: bool

    def as_rbm(self) -> RBMPath:
        if not self.restricted:
            raise InvalidPathError("blue east step at height 0")
        return RBMPath(self.steps)


def path_from_semitype(eps) -> SemitypePath:
    n = len(eps)
    steps: list[Step | None] = [None] * n
    for i in range(n - 1, -1, -1):
        if eps[i] == 0:
            if steps[i] is None:
                steps[i] = Step.RE
            continue
        j0 = next((j for j in range(i) if eps[j] == 0 and steps[j] is None), None)
        if j0 is None:
            steps[i] = Step.BE
        else:
            steps[i] = Step.SE
            steps[j0] = Step.NE
    hs = heights(steps)
    restricted = not any(s is Step.BE and h == 0 for s, h in zip(steps, hs))
    return SemitypePath(tuple(steps), tuple(hs), restricted)


def ne_of_semitype(eps) -> int:
    """Largest nesting count among partitions with this semi-type."""
    p = path_from_semitype(eps)
    return sum(h - 1 for e, h in zip(eps, p.heights) if e == 1)
