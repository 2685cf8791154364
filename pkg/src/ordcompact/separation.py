"""Separation axioms T0-T4 for finite topologies.

Convention: T3 means regular and T1, T4 means normal and T1. With it the
indiscrete space on two or more points satisfies none of T0..T4 even though
it is vacuously regular and normal.

:func:`classify` is the fast path, working from minimal neighbourhoods and
point closures in O(n^2). :func:`classify_definitional` searches open and
closed sets directly and serves as the oracle in tests.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations

from .finspace import Topology

LEVELS = ("T0", "T1", "T2", "T3", "T4")


@dataclass(frozen=True)
class SeparationProfile:
    t0: bool
    t1: bool
    t2: bool
    regular: bool
    t3: bool
    normal: bool
    t4: bool
    strongest: str | None

    @classmethod
    def build(cls, t0, t1, t2, regular, normal) -> "SeparationProfile":
        t3 = regular and t1
        t4 = normal and t1
        strongest = None
        for label, flag in zip(LEVELS, (t0, t1, t2, t3, t4)):
            if flag:
                strongest = label
        return cls(t0, t1, t2, regular, t3, normal, t4, strongest)

    def satisfies(self, level: str) -> bool:
        return getattr(self, level.lower())

    def all_true(self) -> bool:
        return all((self.t0, self.t1, self.t2, self.regular, self.t3, self.normal, self.t4))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["strongest"] = self.strongest or "None"
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "SeparationProfile":
        prof = cls.build(data["t0"], data["t1"], data["t2"], data["regular"], data["normal"])
        if prof.to_dict() != data:
            raise ValueError(f"inconsistent separation profile {data!r}")
        return prof


def specialization_preorder(T: Topology) -> tuple[tuple[bool, ...], ...]:
    """Matrix whose entry ``[x][y]`` says ``x`` lies in the closure of ``{y}``."""
    nb = T.minimal_neighbourhoods
    return tuple(tuple(bool(nb[x] >> y & 1) for y in range(T.n)) for x in range(T.n))


def classify(T: Topology) -> SeparationProfile:
    n = T.n
    nb = T.minimal_neighbourhoods
    cl = T.point_closures
    order = specialization_preorder(T)
    t0 = all(not (order[x][y] and order[y][x]) for x, y in combinations(range(n), 2))
    t1 = all(not order[x][y] for x in range(n) for y in range(n) if x != y)
    t2 = all(nb[x] & nb[y] == 0 for x, y in combinations(range(n), 2))
    # a closed set containing c contains cl({c}); minimal opens around x and
    # around cl({c}) already decide separability
    regular = all(
        nb[x] & nb[c] == 0 for x in range(n) for c in range(n) if not cl[c] >> x & 1
    )
    normal = all(
        nb[c] & nb[d] == 0 for c in range(n) for d in range(n) if cl[c] & cl[d] == 0
    )
    return SeparationProfile.build(t0, t1, t2, regular, normal)


def _separated(T: Topology, a: int, b: int) -> bool:
    """Disjoint open sets U ⊇ a and V ⊇ b exist (a, b are masks)."""
    ups_a = [u for u in T.opens if u & a == a]
    ups_b = [v for v in T.opens if v & b == b]
    return any(u & v == 0 for u in ups_a for v in ups_b)


def t0_definitional(T: Topology) -> bool:
    for x, y in combinations(range(T.n), 2):
        bx, by = 1 << x, 1 << y
        if not any(bool(u & bx) != bool(u & by) for u in T.opens):
            return False
    return True


def classify_definitional(T: Topology) -> SeparationProfile:
    n = T.n
    pairs = list(combinations(range(n), 2))
    t0 = t0_definitional(T)
    t1 = all(
        any(u >> x & 1 and not u >> y & 1 for u in T.opens)
        and any(u >> y & 1 and not u >> x & 1 for u in T.opens)
        for x, y in pairs
    )
    t2 = all(_separated(T, 1 << x, 1 << y) for x, y in pairs)
    closed = T.closed_sets
    regular = all(
        _separated(T, 1 << x, c) for c in closed for x in range(n) if not c >> x & 1
    )
    normal = all(
        _separated(T, c, d) for c in closed for d in closed if c & d == 0
    )
    return SeparationProfile.build(t0, t1, t2, regular, normal)


def describe(profile: SeparationProfile) -> str:
    flags = " ".join(
        f"{k}={'y' if v else 'n'}" for k, v in profile.to_dict().items() if k != "strongest"
    )
    return f"strongest={profile.strongest or 'None'} {flags}"

