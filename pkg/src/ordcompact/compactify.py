"""Four-step compactification pipeline and the comparison fragments.

The pipeline deforms a finite space from the trivial to the discrete
topology, indexes the discrete points by finite ordinals, then checks in the
order topology on ``[0, alpha]`` that ``[0, alpha)`` is dense, that ``alpha``
is one of its limit points, and that a sample open cover has a finite
subcover.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .errors import (
    NoFiniteSubcover,
    NotALimitOrdinal,
    NotDiscrete,
    OutOfBounds,
    PipelineAbort,
    WorkbenchError,
)
from .finspace import Topology
from .lattice import Chain, ChainTrace, classify_chain, deformation_chain, interval_schedule
from .ordinal import (
    Concrete,
    CoverFamily,
    InitialSegments,
    IntervalSet,
    Ordinal,
    OMEGA,
    OrdinalSpace,
    ZERO,
    derived_set_o,
    finite_subcover,
    is_dense_o,
    parse_ordinal,
)

MAX_MAP_POINTS = 5
SAMPLE_COVER_CUT = Ordinal(0, 3)


@dataclass(frozen=True)
class IndexingMap:
    pairs: tuple[tuple[Ordinal, int], ...]

    def __post_init__(self):
        ords = [o for o, _ in self.pairs]
        if ords != [Ordinal(0, k) for k in range(len(ords))]:
            raise ValueError("indexing ordinals must be exactly 0..k-1")
        if sorted(p for _, p in self.pairs) != list(range(len(ords))):
            raise ValueError("indexing map is not a bijection onto the ground set")

    def __len__(self):
        return len(self.pairs)

    def to_list(self) -> list:
        return [[str(o), p] for o, p in self.pairs]

    @classmethod
    def from_list(cls, data: list) -> "IndexingMap":
        return cls(tuple((parse_ordinal(o), p) for o, p in data))


def ordinal_indexing(T: Topology) -> IndexingMap:
    if not T.is_discrete():
        missing = next(i for i in range(T.n) if not T.is_open(1 << i))
        raise NotDiscrete(f"singleton {{{missing}}} is not open")
    return IndexingMap(tuple((Ordinal(0, i), i) for i in range(T.n)))


def all_continuous_maps(dom: Topology, cod: Topology) -> list[tuple[int, ...]]:
    """Every continuous map, as a tuple giving the image of each domain point."""
    if dom.n > MAX_MAP_POINTS or cod.n > MAX_MAP_POINTS:
        raise OutOfBounds(f"map search limited to {MAX_MAP_POINTS} points per side")
    out = []
    for f in product(range(cod.n), repeat=dom.n):
        if all(dom.is_open(preimage(f, v)) for v in cod.opens):
            out.append(f)
    return out


def preimage(f: Sequence[int], mask: int) -> int:
    return sum(1 << x for x, y in enumerate(f) if mask >> y & 1)


def compose(g: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    """``g after f``."""
    return tuple(g[y] for y in f)


@dataclass(frozen=True)
class EventuallyConstantMap:
    """A real sequence on the naturals equal to ``tail_value`` off a finite set.

    Exceptions whose value equals the tail are dropped on construction, so
    equal maps have equal representations.
    """

    exceptions: tuple[tuple[Ordinal, float], ...]
    tail_value: float

    def __post_init__(self):
        seen = set()
        for o, _ in self.exceptions:
            if not o.is_finite():
                raise ValueError(f"exception ordinal {o} is not below w")
            if o in seen:
                raise ValueError(f"duplicate exception at {o}")
            seen.add(o)
        kept = tuple(sorted((o, v) for o, v in self.exceptions if v != self.tail_value))
        object.__setattr__(self, "exceptions", kept)

    def __call__(self, x: Ordinal) -> float:
        if not x.is_finite():
            raise ValueError(f"{x} is outside [0,w)")
        return dict(self.exceptions).get(x, self.tail_value)

    @property
    def tail_start(self) -> int:
        return self.exceptions[-1][0].b + 1 if self.exceptions else 0

    def to_dict(self) -> dict:
        return {
            "exceptions": [[str(o), v] for o, v in self.exceptions],
            "tail_value": self.tail_value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EventuallyConstantMap":
        return cls(
            tuple((parse_ordinal(o), float(v)) for o, v in data["exceptions"]),
            float(data["tail_value"]),
        )


@dataclass(frozen=True)
class Extension:
    """A map on ``[0, w]``: ``prefix`` on ``0..tail_start-1``, ``value`` from there to ``w``."""

    value: float
    tail_start: int
    prefix: tuple[float, ...]

    def __call__(self, x: Ordinal) -> float:
        if x == OMEGA or (x.is_finite() and x.b >= self.tail_start):
            return self.value
        if x.is_finite():
            return self.prefix[x.b]
        raise ValueError(f"{x} is outside [0,w]")

    def restrict(self) -> EventuallyConstantMap:
        return EventuallyConstantMap(
            tuple((Ordinal(0, k), v) for k, v in enumerate(self.prefix)), self.value
        )


def extend_eventually_constant(f: EventuallyConstantMap) -> Extension:
    # every neighbourhood (g, w] of w meets the tail, so continuity at w
    # leaves the tail value as the only choice
    start = f.tail_start
    prefix = tuple(f(Ordinal(0, k)) for k in range(start))
    return Extension(f.tail_value, start, prefix)


@dataclass(frozen=True)
class PipelineConfig:
    n: int
    strategy: str = "singleton_ascending"
    seed: int = 0
    alpha: Ordinal = OMEGA

    def to_dict(self) -> dict:
        return {"n": self.n, "strategy": self.strategy, "seed": self.seed, "alpha": str(self.alpha)}

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineConfig":
        return cls(data["n"], data["strategy"], data["seed"], parse_ordinal(data["alpha"]))


@dataclass(frozen=True)
class PipelineReport:
    config: PipelineConfig
    chain_length: int
    trace: ChainTrace
    indexing: IndexingMap
    space: OrdinalSpace
    density_ok: bool
    infinity_is_limit_point: bool
    sample_cover_compact: bool
    subcover: tuple[IntervalSet, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def verdicts(self) -> tuple[bool, bool, bool]:
        return (self.density_ok, self.infinity_is_limit_point, self.sample_cover_compact)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "chain_length": self.chain_length,
            "trace": self.trace.to_dict(),
            "indexing": self.indexing.to_list(),
            "space": str(self.space),
            "density_ok": self.density_ok,
            "infinity_is_limit_point": self.infinity_is_limit_point,
            "sample_cover_compact": self.sample_cover_compact,
            "subcover": [str(s) for s in self.subcover],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineReport":
        return cls(
            config=PipelineConfig.from_dict(data["config"]),
            chain_length=data["chain_length"],
            trace=ChainTrace.from_dict(data["trace"]),
            indexing=IndexingMap.from_list(data["indexing"]),
            space=OrdinalSpace.parse(data["space"]),
            density_ok=data["density_ok"],
            infinity_is_limit_point=data["infinity_is_limit_point"],
            sample_cover_compact=data["sample_cover_compact"],
            subcover=tuple(IntervalSet.parse(s) for s in data["subcover"]),
            notes=tuple(data["notes"]),
        )

    def render_text(self) -> str:
        c = self.config
        strongest = ", ".join(str(s) for s in self.trace.strongest())
        lines = [
            f"step1: target W={self.space}, A=[0,{c.alpha}) (compactness of W checked in step4)",
            f"step2: {c.strategy} chain on {c.n} points, length {self.chain_length}, strongest [{strongest}]",
            f"step3: indexed {len(self.indexing)} discrete points by ordinals 0..{len(self.indexing) - 1}",
            f"step4: subcover {[str(s) for s in self.subcover]}",
            f"density_ok: {str(self.density_ok).lower()}",
            f"infinity_is_limit_point: {str(self.infinity_is_limit_point).lower()}",
            f"sample_cover_compact: {str(self.sample_cover_compact).lower()}",
        ]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines) + "\n"


def _schedule_note(trace: ChainTrace) -> str:
    observed = " ".join(f"{s.parameter}:{s.profile.strongest}" for s in trace.steps)
    scheduled = " ".join(f"{s.parameter}:{interval_schedule(s.parameter)}" for s in trace.steps)
    return f"observed strata {observed}; six-interval schedule {scheduled}"


def run_pipeline(n: int, strategy: str = "singleton_ascending", seed: int = 0,
                 alpha: Ordinal = OMEGA) -> PipelineReport:
    config = PipelineConfig(n, strategy, seed, alpha)
    notes = []

    try:
        chain: Chain = deformation_chain(n, strategy, seed)
        if not chain[-1].is_discrete():
            raise NotDiscrete("deformation chain did not end at the discrete topology")
        trace = classify_chain(chain)
    except WorkbenchError as exc:
        raise PipelineAbort("step2", exc) from exc
    notes.append(_schedule_note(trace))

    try:
        indexing = ordinal_indexing(chain[-1])
    except WorkbenchError as exc:
        raise PipelineAbort("step3", exc) from exc

    try:
        if not alpha.is_limit():
            raise NotALimitOrdinal(f"{alpha} is not a limit ordinal")
        space = OrdinalSpace(alpha, includes_top=True)
        A = IntervalSet(((ZERO, alpha),))
        density_ok = is_dense_o(space, A)
        infinity_is_limit_point = alpha in derived_set_o(space, A)
        cover = CoverFamily((InitialSegments(), Concrete(IntervalSet.interval(SAMPLE_COVER_CUT, alpha, False, True))))
        try:
            subcover = tuple(finite_subcover(space, cover))
        except NoFiniteSubcover as exc:
            subcover = ()
            notes.append(str(exc))
        union = IntervalSet()
        for s in subcover:
            union = union | s
        sample_cover_compact = bool(subcover) and union == space.carrier
    except WorkbenchError as exc:
        raise PipelineAbort("step4", exc) from exc

    return PipelineReport(
        config=config,
        chain_length=len(chain),
        trace=trace,
        indexing=indexing,
        space=space,
        density_ok=density_ok,
        infinity_is_limit_point=infinity_is_limit_point,
        sample_cover_compact=sample_cover_compact,
        subcover=subcover,
        notes=tuple(notes),
    )
