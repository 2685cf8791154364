"""The lattice of all topologies on a fixed finite ground set.

Meet is intersection of open families, join is the topology generated by
their union. A :class:`Chain` is a strictly refining sequence running from the
trivial topology to the discrete one; :func:`homotopy_eval` reads it as a
function of a parameter in [0, 1].
"""
from __future__ import annotations

import json
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterator

from .errors import DimensionMismatch, InvalidParameter, OutOfBounds
from .finspace import (
    Topology,
    generate_from_subbasis,
    indices_of,
    standard_topology,
)
from .separation import LEVELS, SeparationProfile, classify

log = logging.getLogger(__name__)

STRATEGIES = ("singleton_ascending", "random_maximal")
MAX_CHAIN_POINTS = 8
MAX_ENUM_POINTS = 5
MAX_CANON_POINTS = 8


def _same_ground(T1: Topology, T2: Topology) -> None:
    if T1.n != T2.n:
        raise DimensionMismatch(f"topologies on {T1.n} and {T2.n} points")


def meet(T1: Topology, T2: Topology) -> Topology:
    _same_ground(T1, T2)
    return Topology(T1.ground, tuple(sorted(T1.open_set & T2.open_set)))


def join(T1: Topology, T2: Topology) -> Topology:
    _same_ground(T1, T2)
    return generate_from_subbasis(T1.n, T1.open_set | T2.open_set, T1.ground.labels)


def is_refinement(coarse: Topology, fine: Topology) -> bool:
    _same_ground(coarse, fine)
    return coarse.open_set <= fine.open_set


def add_open(T: Topology, mask: int) -> Topology:
    """Join of ``T`` with the topology generated by a single set."""
    return generate_from_subbasis(T.n, T.opens + (mask,), T.ground.labels)


@dataclass(frozen=True)
class Chain:
    entries: tuple[Topology, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("empty chain")
        n = entries[0].n
        if any(t.n != n for t in entries):
            raise DimensionMismatch("chain entries on different ground sets")
        if not entries[0].is_trivial() or not entries[-1].is_discrete():
            raise ValueError("chain must run from trivial to discrete")
        for a, b in zip(entries, entries[1:]):
            if not a.open_set < b.open_set:
                raise ValueError(f"chain not strictly refining at {a!r} -> {b!r}")

    @property
    def n(self) -> int:
        return self.entries[0].n

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def to_dict(self) -> dict:
        return {"n": self.n, "entries": [t.to_dict() for t in self.entries]}

    @classmethod
    def from_dict(cls, data: dict) -> "Chain":
        return cls(tuple(Topology.from_dict(t) for t in data["entries"]))


def _covers(T: Topology) -> list[tuple[int, Topology]]:
    """Candidate sets whose single-set join is an upper cover of ``T``.

    Any topology strictly between T and join(T, S) contains some S' not in T
    with join(T, S') strictly smaller, so the covers are exactly the minimal
    single-set joins.
    """
    joins: dict[int, Topology] = {}
    for s in range(1, T.full):
        if s not in T.open_set:
            joins[s] = add_open(T, s)
    families = {j.open_set for j in joins.values()}
    minimal = {f for f in families if not any(g < f for g in families)}
    return [(s, j) for s, j in joins.items() if j.open_set in minimal]


def deformation_chain(n: int, strategy: str = "singleton_ascending", seed: int = 0) -> Chain:
    if not 1 <= n <= MAX_CHAIN_POINTS:
        raise OutOfBounds(f"chain size {n} outside 1..{MAX_CHAIN_POINTS}")
    current = standard_topology(n, "trivial")
    entries = [current]
    if strategy == "singleton_ascending":
        for i in range(n):
            nxt = add_open(current, 1 << i)
            if nxt != current:
                entries.append(nxt)
                current = nxt
    elif strategy == "random_maximal":
        rng = random.Random(seed)
        while not current.is_discrete():
            _, current = rng.choice(_covers(current))
            entries.append(current)
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    return Chain(tuple(entries))


def homotopy_eval(chain: Chain, i: float) -> Topology:
    if not 0 <= i <= 1:
        raise InvalidParameter(f"parameter {i} outside [0, 1]")
    last = len(chain) - 1
    return chain[min(math.floor(i * last), last)]


def interval_schedule(i) -> str | None:
    """Axiom label the six-interval schedule assigns to parameter ``i``.

    ``None`` at 0, T0..T4 on the successive sixths, ``"discrete"`` on (5/6, 1].
    """
    i = Fraction(i)
    if not 0 <= i <= 1:
        raise InvalidParameter(f"parameter {i} outside [0, 1]")
    if i == 0:
        return None
    k = math.ceil(i * 6)
    return LEVELS[k - 1] if k <= 5 else "discrete"


@dataclass(frozen=True)
class ChainStep:
    index: int
    parameter: Fraction
    profile: SeparationProfile

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "parameter": str(self.parameter),
            "profile": self.profile.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChainStep":
        return cls(data["index"], Fraction(data["parameter"]), SeparationProfile.from_dict(data["profile"]))


@dataclass(frozen=True)
class ChainTrace:
    steps: tuple[ChainStep, ...]
    # first chain index whose profile satisfies each axiom, absent if never
    boundaries: dict[str, int] = field(default_factory=dict)

    def strongest(self) -> list[str | None]:
        return [s.profile.strongest for s in self.steps]

    def schedule_rows(self) -> list[tuple[int, Fraction, str | None, str | None]]:
        """(index, parameter, observed strongest, scheduled label) per step."""
        return [
            (s.index, s.parameter, s.profile.strongest, interval_schedule(s.parameter))
            for s in self.steps
        ]

    def to_dict(self) -> dict:
        return {
            "steps": [s.to_dict() for s in self.steps],
            "boundaries": dict(self.boundaries),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChainTrace":
        steps = tuple(ChainStep.from_dict(s) for s in data["steps"])
        return cls(steps, dict(data["boundaries"]))


def classify_chain(chain: Chain) -> ChainTrace:
    last = len(chain) - 1
    steps = []
    boundaries: dict[str, int] = {}
    for j, T in enumerate(chain):
        param = Fraction(j, last) if last else Fraction(1)
        prof = classify(T)
        steps.append(ChainStep(j, param, prof))
        for level in LEVELS:
            if level not in boundaries and prof.satisfies(level):
                boundaries[level] = j
    return ChainTrace(tuple(steps), boundaries)


def chain_dump(chain: Chain, trace: ChainTrace | None = None) -> dict:
    trace = trace or classify_chain(chain)
    return {"chain": chain.to_dict(), "trace": trace.to_dict()}


def _enumerate_families(n: int, order: Callable[[list[int]], list[int]] | None = None,
                        progress: Callable[[int], None] | None = None) -> list[tuple[int, ...]]:
    """Depth-first closure search from the trivial topology.

    Every topology is reached by adding its non-trivial opens one at a time,
    and the visited set (keyed by the canonical open tuple) prunes repeats.
    """
    start = standard_topology(n, "trivial")
    candidates = list(range(1, start.full))
    if order is not None:
        candidates = order(candidates)
    seen = {start.opens}
    stack = [start]
    while stack:
        T = stack.pop()
        for s in candidates:
            if s in T.open_set:
                continue
            nxt = add_open(T, s)
            if nxt.opens not in seen:
                seen.add(nxt.opens)
                stack.append(nxt)
                if progress is not None and len(seen) % 1000 == 0:
                    progress(len(seen))
    return sorted(seen)


def enumerate_topologies(n: int, progress: Callable[[int], None] | None = None
                         ) -> tuple[int, Iterator[Topology]]:
    """All topologies on ``n`` points, each once, in canonical order."""
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise OutOfBounds(f"enumeration size {n} outside 1..{MAX_ENUM_POINTS}")
    if n == MAX_ENUM_POINTS and progress is None:
        progress = lambda k: log.info("enumerated %d topologies so far", k)  # noqa: E731
    families = _enumerate_families(n, progress=progress)
    ground = standard_topology(n, "trivial").ground
    return len(families), (Topology(ground, f) for f in families)


def all_topologies(n: int) -> list[Topology]:
    return list(enumerate_topologies(n)[1])


def _permute_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i, p in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << p
    return out


def relabel(T: Topology, perm: tuple[int, ...]) -> Topology:
    """Image of ``T`` under the point map ``i -> perm[i]``."""
    return Topology(T.ground, tuple(sorted(_permute_mask(u, perm) for u in T.opens)))


def canonical_form(T: Topology) -> Topology:
    if T.n > MAX_CANON_POINTS:
        raise OutOfBounds(f"canonical form limited to {MAX_CANON_POINTS} points")
    best = min(
        tuple(sorted(_permute_mask(u, perm) for u in T.opens))
        for perm in permutations(range(T.n))
    )
    return Topology(T.ground, best)


def hasse_edges(tops: list[Topology]) -> list[tuple[int, int]]:
    """Covering pairs (coarse index, fine index) of the refinement order."""
    edges = []
    sets = [t.open_set for t in tops]
    for a, sa in enumerate(sets):
        above = [b for b, sb in enumerate(sets) if sa < sb]
        for b in above:
            if not any(sets[a] < sets[c] < sets[b] for c in above):
                edges.append((a, b))
    return edges


def hasse_dot(n: int) -> str:
    if not 1 <= n <= 3:
        raise OutOfBounds("Hasse diagram emitted only for n <= 3")
    tops = all_topologies(n)
    lines = ["digraph refinement {", "  rankdir=BT;", "  node [shape=box];"]
    for k, T in enumerate(tops):
        opens = " ".join("{" + ",".join(map(str, indices_of(u))) + "}" for u in T.opens)
        label = f"{len(T)} opens\\n{classify(T).strongest or 'None'}\\n{opens}"
        lines.append(f'  t{k} [label="{label}"];')
    for a, b in hasse_edges(tops):
        lines.append(f"  t{a} -> t{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def chain_json(chain: Chain) -> str:
    return json.dumps(chain_dump(chain), indent=2)
