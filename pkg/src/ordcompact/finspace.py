"""Finite topological spaces on at most 16 points.

Subsets of the ground set are plain ``int`` bit masks (bit ``i`` set means
point ``i`` belongs to the set). A :class:`Topology` keeps its open sets as a
sorted, duplicate-free tuple of masks, so two topologies are equal exactly
when their open families are equal.

Point-set operators use the minimal open neighbourhood of each point, which
exists in every finite space: ``w`` is in the closure of ``S`` iff its minimal
neighbourhood meets ``S``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidMask, NotATopology, OutOfBounds

MAX_POINTS = 16

PointSet = int


def mask_of(indices: Iterable[int]) -> PointSet:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: PointSet) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: PointSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class GroundSet:
    n: int
    # presentation only; never part of equality
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_POINTS:
            raise OutOfBounds(f"ground set size {self.n} outside 1..{MAX_POINTS}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"p{i}" for i in range(self.n)))
        else:
            labels = tuple(self.labels)
            if len(labels) != self.n or len(set(labels)) != self.n:
                raise ValueError(f"need {self.n} distinct labels, got {labels!r}")
            object.__setattr__(self, "labels", labels)

    @property
    def full(self) -> PointSet:
        return (1 << self.n) - 1

    def check(self, mask: PointSet) -> PointSet:
        if not isinstance(mask, int) or mask < 0 or mask >> self.n:
            raise InvalidMask(f"mask {mask!r} invalid for {self.n} points")
        return mask


@dataclass(frozen=True)
class Topology:
    """A topology in canonical form. Build through :func:`make_topology`."""

    ground: GroundSet
    opens: tuple[PointSet, ...]

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> PointSet:
        return self.ground.full

    @cached_property
    def open_set(self) -> frozenset[PointSet]:
        return frozenset(self.opens)

    @cached_property
    def closed_sets(self) -> tuple[PointSet, ...]:
        return tuple(sorted(self.full & ~u for u in self.opens))

    @cached_property
    def minimal_neighbourhoods(self) -> tuple[PointSet, ...]:
        """Smallest open set containing each point."""
        nbhd = [self.full] * self.n
        for u in self.opens:
            for i in indices_of(u):
                nbhd[i] &= u
        return tuple(nbhd)

    @cached_property
    def point_closures(self) -> tuple[PointSet, ...]:
        """``closure({y})`` for every point ``y``."""
        nb = self.minimal_neighbourhoods
        return tuple(
            mask_of(x for x in range(self.n) if nb[x] >> y & 1) for y in range(self.n)
        )

    def is_open(self, mask: PointSet) -> bool:
        return mask in self.open_set

    def is_closed(self, mask: PointSet) -> bool:
        return (self.full & ~mask) in self.open_set

    def is_discrete(self) -> bool:
        return len(self.opens) == 1 << self.n

    def is_trivial(self) -> bool:
        return self.opens == tuple(sorted({0, self.full}))

    def __len__(self):
        return len(self.opens)

    def __repr__(self):
        return f"Topology(n={self.n}, opens={[indices_of(u) for u in self.opens]})"

    def to_dict(self) -> dict:
        opens = sorted(indices_of(u) for u in self.opens)
        return {"n": self.n, "labels": list(self.ground.labels), "opens": opens}

    @classmethod
    def from_dict(cls, data: dict) -> "Topology":
        n = data["n"]
        labels = tuple(data.get("labels") or ())
        opens = [mask_of(_checked_indices(s, n)) for s in data["opens"]]
        return make_topology(n, opens, labels=labels)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Topology":
        return cls.from_dict(json.loads(text))


def _checked_indices(items: Sequence[int], n: int) -> list[int]:
    out = []
    for i in items:
        if not isinstance(i, int) or not 0 <= i < n:
            raise InvalidMask(f"point index {i!r} invalid for {n} points")
        out.append(i)
    return out


def _ground(n: int, labels: Sequence[str] = ()) -> GroundSet:
    return GroundSet(n, tuple(labels))


def find_topology_violation(full: PointSet, family: Iterable[PointSet]) -> str | None:
    """Return a description of the first missing member, or None if closed."""
    fam = set(family)
    if 0 not in fam:
        return "missing empty set"
    if full not in fam:
        return f"missing full set {indices_of(full)}"
    for u, v in combinations(sorted(fam), 2):
        if u | v not in fam:
            return f"missing union {indices_of(u)} | {indices_of(v)} = {indices_of(u | v)}"
        if u & v not in fam:
            return f"missing intersection {indices_of(u)} & {indices_of(v)} = {indices_of(u & v)}"
    return None


def make_topology(n: int, opens: Iterable[PointSet], labels: Sequence[str] = ()) -> Topology:
    ground = _ground(n, labels)
    family = {ground.check(u) for u in opens}
    witness = find_topology_violation(ground.full, family)
    if witness is not None:
        raise NotATopology(witness)
    return Topology(ground, tuple(sorted(family)))


def _unions_of(full: PointSet, basis: Iterable[PointSet]) -> set[PointSet]:
    fam = {0, full}
    for b in set(basis):
        if b not in fam:
            fam |= {f | b for f in fam}
    return fam


def generate_from_subbasis(n: int, sets: Iterable[PointSet], labels: Sequence[str] = ()) -> Topology:
    """Smallest topology containing every set in ``sets``."""
    ground = _ground(n, labels)
    sets = [ground.check(s) for s in sets]
    # minimal neighbourhoods of the generated topology are the finite
    # intersections of subbasis members containing each point
    nbhd = [ground.full] * n
    for s in sets:
        for i in indices_of(s):
            nbhd[i] &= s
    return Topology(ground, tuple(sorted(_unions_of(ground.full, nbhd))))


def standard_topology(n: int, kind: str) -> Topology:
    if not 1 <= n <= MAX_POINTS:
        raise OutOfBounds(f"n={n} outside 1..{MAX_POINTS}")
    ground = GroundSet(n)
    if kind == "trivial":
        return Topology(ground, tuple(sorted({0, ground.full})))
    if kind == "discrete":
        return Topology(ground, tuple(range(1 << n)))
    raise ValueError(f"unknown topology kind {kind!r}")


def trivial(n: int) -> Topology:
    return standard_topology(n, "trivial")


def discrete(n: int) -> Topology:
    return standard_topology(n, "discrete")


def sierpinski(open_point: int = 0) -> Topology:
    """Two-point space whose only nontrivial open set is ``{open_point}``."""
    return make_topology(2, [0, 1 << open_point, 3])


def closure(T: Topology, S: PointSet) -> PointSet:
    T.ground.check(S)
    nb = T.minimal_neighbourhoods
    return mask_of(w for w in range(T.n) if nb[w] & S)


def interior(T: Topology, S: PointSet) -> PointSet:
    T.ground.check(S)
    nb = T.minimal_neighbourhoods
    return mask_of(w for w in range(T.n) if nb[w] & ~S == 0)


def derived_set(T: Topology, S: PointSet) -> PointSet:
    T.ground.check(S)
    nb = T.minimal_neighbourhoods
    return mask_of(w for w in range(T.n) if nb[w] & S & ~(1 << w))


def is_limit_point(T: Topology, S: PointSet, w: int) -> bool:
    if not 0 <= w < T.n:
        raise OutOfBounds(f"point {w} outside 0..{T.n - 1}")
    return bool(derived_set(T, S) >> w & 1)


def is_dense(T: Topology, S: PointSet) -> bool:
    return closure(T, S) == T.full
