"""Ordinals below omega^2 and the order topology on initial segments.

An :class:`Ordinal` ``Ordinal(a, b)`` stands for ``w*a + b``. Subsets of a
space are :class:`IntervalSet` values: finite unions of intervals, stored
internally as sorted, disjoint, non-adjacent half-open spans ``[lo, hi)``.
Every interval with ordinal endpoints has this form, because ``(x, y]`` is
``[x+1, y+1)``.

In the order topology 0 and successor ordinals are isolated, and the basic
neighbourhoods of a limit ``l`` are the intervals ``(g, l]`` with ``g < l``.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import (
    InvalidParameter,
    NoFiniteSubcover,
    NotOpen,
    OutOfCarrier,
    Overflow,
    UncoveredPoint,
)
from .finspace import Topology, generate_from_subbasis, mask_of

WORD = 2**63


@dataclass(frozen=True, order=True)
class Ordinal:
    a: int = 0
    b: int = 0

    def __post_init__(self):
        for v in (self.a, self.b):
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"ordinal coefficients must be naturals, got {self.a}, {self.b}")
            if v >= WORD:
                raise Overflow(f"ordinal coefficient {v} exceeds word range")

    def is_limit(self) -> bool:
        return self.b == 0 and self.a != 0

    def is_finite(self) -> bool:
        return self.a == 0

    def successor(self) -> "Ordinal":
        if self.b + 1 >= WORD:
            raise Overflow(f"successor of {self} overflows")
        return Ordinal(self.a, self.b + 1)

    def predecessor(self) -> "Ordinal":
        if self.b == 0:
            raise ValueError(f"{self} has no immediate predecessor")
        return Ordinal(self.a, self.b - 1)

    def __str__(self):
        if self.a == 0:
            return str(self.b)
        head = "w" if self.a == 1 else f"w*{self.a}"
        return head if self.b == 0 else f"{head}+{self.b}"

    @classmethod
    def parse(cls, text: str) -> "Ordinal":
        return parse_ordinal(text)


ZERO = Ordinal(0, 0)
OMEGA = Ordinal(1, 0)


def ord_compare(x: Ordinal, y: Ordinal) -> int:
    return (x > y) - (x < y)


def is_limit(x: Ordinal) -> bool:
    return x.is_limit()


def successor(x: Ordinal) -> Ordinal:
    return x.successor()


_ORD_RE = re.compile(
    r"^\s*(?:(?P<w>[wω])\s*(?:\*\s*(?P<a>\d+))?\s*(?:\+\s*(?P<b1>\d+))?|(?P<b2>\d+))\s*$"
)


def parse_ordinal(text: str) -> Ordinal:
    """Parse ``"0"``, ``"7"``, ``"w"``, ``"w+3"``, ``"w*2"`` or ``"w*2+3"``."""
    m = _ORD_RE.match(text)
    if not m:
        raise InvalidParameter(f"bad ordinal literal {text!r}")
    if m["w"]:
        a = int(m["a"]) if m["a"] is not None else 1
        b = int(m["b1"]) if m["b1"] is not None else 0
        return Ordinal(a, b)
    return Ordinal(0, int(m["b2"]))


def _as_ordinal(x) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int):
        return Ordinal(0, x)
    if isinstance(x, str):
        return parse_ordinal(x)
    raise TypeError(f"cannot interpret {x!r} as an ordinal")


Span = tuple[Ordinal, Ordinal]


def _normalize(spans: Iterable[Span]) -> tuple[Span, ...]:
    out: list[list[Ordinal]] = []
    for lo, hi in sorted(s for s in spans if s[0] < s[1]):
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return tuple((lo, hi) for lo, hi in out)


@dataclass(frozen=True)
class IntervalSet:
    """Finite union of ordinal intervals in normalized half-open form."""

    spans: tuple[Span, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "spans", _normalize(self.spans))

    @classmethod
    def interval(cls, lo, hi, lo_closed: bool = True, hi_closed: bool = False) -> "IntervalSet":
        lo, hi = _as_ordinal(lo), _as_ordinal(hi)
        start = lo if lo_closed else lo.successor()
        stop = hi.successor() if hi_closed else hi
        return cls(((start, stop),))

    @classmethod
    def point(cls, x) -> "IntervalSet":
        x = _as_ordinal(x)
        return cls(((x, x.successor()),))

    @classmethod
    def points(cls, xs: Iterable) -> "IntervalSet":
        return cls(tuple((o, o.successor()) for o in map(_as_ordinal, xs)))

    @property
    def intervals(self) -> list[tuple[Ordinal, bool, Ordinal, bool]]:
        """Spans as ``(lo, lo_closed, hi, hi_closed)`` records."""
        return [(lo, True, hi, False) for lo, hi in self.spans]

    def is_empty(self) -> bool:
        return not self.spans

    def is_finite(self) -> bool:
        return all(lo.a == hi.a for lo, hi in self.spans)

    def __contains__(self, x) -> bool:
        x = _as_ordinal(x)
        return any(lo <= x < hi for lo, hi in self.spans)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.spans + other.spans)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for lo1, hi1 in self.spans:
            for lo2, hi2 in other.spans:
                lo, hi = max(lo1, lo2), min(hi1, hi2)
                if lo < hi:
                    out.append((lo, hi))
        return IntervalSet(tuple(out))

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for lo, hi in self.spans:
            cur = lo
            for olo, ohi in other.spans:
                if ohi <= cur or olo >= hi:
                    continue
                if olo > cur:
                    out.append((cur, olo))
                cur = max(cur, ohi)
            if cur < hi:
                out.append((cur, hi))
        return IntervalSet(tuple(out))

    def __le__(self, other: "IntervalSet") -> bool:
        return (self - other).is_empty()

    def min(self) -> Ordinal:
        return self.spans[0][0]

    def __str__(self):
        if not self.spans:
            return "{}"
        return " | ".join(_format_span(lo, hi) for lo, hi in self.spans)

    def __repr__(self):
        return f"IntervalSet({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "IntervalSet":
        return parse_interval_set(text)


def _format_span(lo: Ordinal, hi: Ordinal) -> str:
    if hi.b > 0 and hi.predecessor() == lo:
        return "{" + str(lo) + "}"
    if hi.b > 0:
        return f"[{lo},{hi.predecessor()}]"
    return f"[{lo},{hi})"


_INTERVAL_RE = re.compile(r"^\s*([\[(])\s*([^,]+?)\s*,\s*([^,]+?)\s*([\])])\s*$")


def parse_interval_set(text: str) -> IntervalSet:
    """Parse ``"[0,w)"``, ``"(3,w]"``, ``"{5}"``, ``"{1,3,5}"`` and unions joined by ``|``."""
    text = text.strip()
    if text in ("{}", "", "∅"):
        return IntervalSet()
    parts = []
    for chunk in re.split(r"\s*[|∪]\s*", text):
        chunk = chunk.strip()
        if chunk.startswith("{") and chunk.endswith("}"):
            inner = chunk[1:-1].strip()
            if inner:
                parts.append(IntervalSet.points(parse_ordinal(t) for t in inner.split(",")))
            continue
        m = _INTERVAL_RE.match(chunk)
        if not m:
            raise InvalidParameter(f"bad interval literal {chunk!r}")
        lo, hi = parse_ordinal(m[2]), parse_ordinal(m[3])
        parts.append(IntervalSet.interval(lo, hi, m[1] == "[", m[4] == "]"))
    out = IntervalSet()
    for p in parts:
        out = out | p
    return out


@dataclass(frozen=True)
class OrdinalSpace:
    """``[0, bound]`` when ``includes_top`` else ``[0, bound)``."""

    bound: Ordinal
    includes_top: bool = True

    def __post_init__(self):
        if not self.includes_top and self.bound == ZERO:
            raise InvalidParameter("[0,0) is empty")

    @property
    def sup(self) -> Ordinal:
        """Least ordinal above every carrier point."""
        return self.bound.successor() if self.includes_top else self.bound

    @property
    def carrier(self) -> IntervalSet:
        return IntervalSet(((ZERO, self.sup),))

    def top(self) -> Ordinal | None:
        """Largest carrier point, or None when the carrier has no maximum."""
        sup = self.sup
        return sup.predecessor() if sup.b > 0 else None

    def limits(self) -> list[Ordinal]:
        """Non-zero limit ordinals in the carrier."""
        return [Ordinal(k, 0) for k in range(1, self.sup.a + (self.sup.b > 0))]

    def check(self, S: IntervalSet) -> IntervalSet:
        if not S <= self.carrier:
            raise OutOfCarrier(f"{S} is not inside {self}")
        return S

    def __str__(self):
        return f"[0,{self.bound}]" if self.includes_top else f"[0,{self.bound})"

    @classmethod
    def parse(cls, text: str) -> "OrdinalSpace":
        m = re.match(r"^\s*\[\s*0\s*,\s*([^\])]+?)\s*([\])])\s*$", text)
        if not m:
            raise InvalidParameter(f"bad space literal {text!r}; expected [0,a] or [0,a)")
        return cls(parse_ordinal(m[1]), m[2] == "]")


def is_open(space: OrdinalSpace, S: IntervalSet) -> bool:
    # a span starting at a limit misses points cofinally below it, and
    # non-adjacent normalization means no earlier span can fill that gap
    space.check(S)
    return not any(lo.is_limit() for lo, _ in S.spans)


def derived_set_o(space: OrdinalSpace, S: IntervalSet) -> IntervalSet:
    space.check(S)
    sup = space.sup
    limits = []
    for lo, hi in S.spans:
        # limits l with lo < l <= hi are approached from below inside [lo, l)
        for k in range(lo.a + 1, hi.a + 1):
            lim = Ordinal(k, 0)
            if lim < sup:
                limits.append(lim)
    return IntervalSet.points(limits)


def closure_o(space: OrdinalSpace, S: IntervalSet) -> IntervalSet:
    return S | derived_set_o(space, S)


def is_dense_o(space: OrdinalSpace, S: IntervalSet) -> bool:
    return closure_o(space, S) == space.carrier


ONE_POINT = OrdinalSpace(OMEGA, True)


def alexandroff_open(S: IntervalSet) -> bool:
    """Openness in the one-point compactification of the discrete naturals."""
    ONE_POINT.check(S)
    if OMEGA not in S:
        return True
    naturals = IntervalSet(((ZERO, OMEGA),))
    return (naturals - S).is_finite()


@dataclass(frozen=True)
class Concrete:
    set: IntervalSet

    def __str__(self):
        return str(self.set)


@dataclass(frozen=True)
class InitialSegments:
    """The family ``{[0,n) : n natural}``."""

    def __str__(self):
        return "seg"


@dataclass(frozen=True)
class SingletonsBelow:
    """The family of singletons ``{g}`` with ``g < beta`` not a limit."""

    beta: Ordinal

    def __str__(self):
        return f"sing<{self.beta}"


Atom = Union[Concrete, InitialSegments, SingletonsBelow]


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "[({":
            depth += 1
        elif ch in "])}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_atom(text: str) -> Atom:
    text = text.strip()
    if text == "seg":
        return InitialSegments()
    if text.startswith("sing<"):
        return SingletonsBelow(parse_ordinal(text[5:]))
    return Concrete(parse_interval_set(text))


@dataclass(frozen=True)
class CoverFamily:
    atoms: tuple[Atom, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if not self.atoms:
            raise InvalidParameter("cover family needs at least one atom")

    @classmethod
    def parse(cls, text: str) -> "CoverFamily":
        """Comma-separated atoms: ``seg``, ``sing<b`` or interval literals."""
        return cls(tuple(parse_atom(p) for p in _split_top_level(text)))

    def __str__(self):
        return ",".join(str(a) for a in self.atoms)


def _atom_union(atom: Atom, space: OrdinalSpace) -> IntervalSet:
    """Union of every member of the atom, clipped to the carrier."""
    carrier = space.carrier
    if isinstance(atom, Concrete):
        return atom.set
    if isinstance(atom, InitialSegments):
        return IntervalSet(((ZERO, OMEGA),)) & carrier
    beta = atom.beta
    spans = [(ZERO, min(OMEGA, beta))]
    for k in range(1, beta.a + 1):
        spans.append((Ordinal(k, 1), min(Ordinal(k + 1, 0), beta)))
    return IntervalSet(tuple(spans)) & carrier


def _atom_member_at(atom: Atom, x: Ordinal, space: OrdinalSpace) -> IntervalSet | None:
    """Member of the atom containing ``x`` whose lowest point is least."""
    if isinstance(atom, Concrete):
        for lo, hi in atom.set.spans:
            if lo <= x < hi:
                return atom.set
        return None
    if isinstance(atom, InitialSegments):
        if x.is_finite():
            return IntervalSet(((ZERO, x.successor()),)) & space.carrier
        return None
    if x < atom.beta and not x.is_limit():
        return IntervalSet.point(x)
    return None


def _member_low(member: IntervalSet, x: Ordinal) -> Ordinal:
    for lo, hi in member.spans:
        if lo <= x < hi:
            return lo
    raise AssertionError("member does not contain x")


def _validate_cover(space: OrdinalSpace, cover: CoverFamily) -> None:
    for atom in cover.atoms:
        if isinstance(atom, Concrete):
            if not is_open(space, atom.set):
                raise NotOpen(f"cover atom {atom} is not open in {space}")
        elif isinstance(atom, SingletonsBelow) and atom.beta > space.sup:
            raise InvalidParameter(f"{atom} reaches beyond {space}")
    union = IntervalSet()
    for atom in cover.atoms:
        union = union | _atom_union(atom, space)
    missing = space.carrier - union
    if not missing.is_empty():
        raise UncoveredPoint(missing.min())


@dataclass(frozen=True)
class SubcoverStep:
    point: Ordinal | None  # None when a tail below a missing supremum was covered
    atom_index: int
    member: IntervalSet


def subcover_steps(space: OrdinalSpace, cover: CoverFamily) -> list[SubcoverStep]:
    """Greedy descent: cover the largest uncovered point by the member reaching lowest."""
    _validate_cover(space, cover)
    uncovered = space.carrier
    steps: list[SubcoverStep] = []
    while not uncovered.is_empty():
        lo_last, hi_last = uncovered.spans[-1]
        if hi_last.b == 0:
            # no largest uncovered point: some concrete atom must hold a tail
            for k, atom in enumerate(cover.atoms):
                if isinstance(atom, Concrete) and any(
                    lo < hi_last <= hi for lo, hi in atom.set.spans
                ):
                    steps.append(SubcoverStep(None, k, atom.set))
                    uncovered = uncovered - atom.set
                    break
            else:
                raise NoFiniteSubcover(
                    f"no atom contains a tail below {hi_last}; every finite "
                    f"subfamily has supremum below {hi_last}"
                )
            continue
        x = hi_last.predecessor()
        best = None
        for k, atom in enumerate(cover.atoms):
            member = _atom_member_at(atom, x, space)
            if member is not None:
                low = _member_low(member, x)
                if best is None or low < best[0]:
                    best = (low, k, member)
        if best is None:
            raise UncoveredPoint(x)
        steps.append(SubcoverStep(x, best[1], best[2]))
        uncovered = uncovered - best[2]
    return steps


def finite_subcover(space: OrdinalSpace, cover: CoverFamily) -> list[IntervalSet]:
    return [s.member for s in subcover_steps(space, cover)]


def finite_model(N: int) -> Topology:
    """``[0, N]`` plus a top point, as an (N+2)-point finite topology.

    Points below the top are isolated; the top's open sets are the tails
    ``{k..N, top}`` for ``k <= N``.
    """
    n = N + 2
    top = N + 1
    sets = [1 << i for i in range(N + 1)]
    sets += [mask_of(list(range(k, N + 1)) + [top]) for k in range(N + 1)]
    return generate_from_subbasis(n, sets)


def random_ordinal(rng: random.Random, below: Ordinal, max_b: int = 8) -> Ordinal:
    """Random ordinal ``< below`` with finite part at most ``max_b``."""
    while True:
        # limits are rare under uniform draws; favour them so openness is contested
        b = 0 if rng.random() < 0.5 else rng.randint(0, max_b)
        x = Ordinal(rng.randint(0, below.a), b)
        if x < below:
            return x


def random_interval_set(rng: random.Random, space: OrdinalSpace, max_intervals: int = 4,
                        max_b: int = 8) -> IntervalSet:
    """Union of up to ``max_intervals`` random intervals inside the carrier.

    Endpoints are drawn from the carrier or its supremum, with random
    closedness, so limits, successors and the top point all show up as
    endpoints.
    """
    out = IntervalSet()
    sup = space.sup
    for _ in range(rng.randint(0, max_intervals)):
        lo = random_ordinal(rng, sup, max_b)
        hi = sup
        if rng.random() < 0.8:
            while True:
                hi = random_ordinal(rng, sup, max_b)
                if hi >= lo:
                    break
        hi_closed = rng.random() < 0.5 and hi != sup
        out = out | IntervalSet.interval(lo, hi, rng.random() < 0.5, hi_closed)
    return out & space.carrier
