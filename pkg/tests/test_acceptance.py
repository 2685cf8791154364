"""Acceptance criteria, one test per criterion.

Each criterion records PASS/FAIL; the conftest terminal-summary hook prints
one line per criterion. Running this file directly prints the same lines.
"""
import contextlib
import io
import random
import sys
import time
from itertools import product

import pytest

from ordcompact.cli import main as cli_main
from ordcompact.compactify import (
    EventuallyConstantMap,
    all_continuous_maps,
    extend_eventually_constant,
    run_pipeline,
)
from ordcompact.finspace import closure, derived_set, discrete, interior, trivial
from ordcompact.lattice import (
    _enumerate_families,
    classify_chain,
    deformation_chain,
    enumerate_topologies,
    is_refinement,
    join,
    meet,
)
from ordcompact.ordinal import (
    OMEGA,
    CoverFamily,
    IntervalSet,
    Ordinal,
    OrdinalSpace,
    alexandroff_open,
    derived_set_o,
    finite_subcover,
    is_dense_o,
    is_open,
    random_interval_set,
)
from ordcompact.errors import NoFiniteSubcover
from ordcompact.separation import classify

from oracles import naive_topology_families, topologies

RESULTS: dict[int, tuple[str, bool, str]] = {}


def cli_stdout(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, buf.getvalue()


def c1_enumeration():
    start = time.perf_counter()
    for n, expected in ((2, 4), (3, 29), (4, 355)):
        assert cli_stdout("enumerate", "--n", str(n), "--count-only") == (0, f"{expected}\n")
        assert enumerate_topologies(n)[0] == expected
    for n in (2, 3):
        assert _enumerate_families(n) == naive_topology_families(n)
    base = _enumerate_families(4)
    for seed in range(3):
        rng = random.Random(seed)
        assert _enumerate_families(4, order=lambda c: rng.sample(c, len(c))) == base
    assert len(naive_topology_families(4)) == 355
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"{elapsed:.1f}s"
    return f"4/29/355 confirmed in {elapsed:.1f}s"


def c2_kuratowski():
    start = time.perf_counter()
    checked = 0
    for n in (3, 4):
        for T in topologies(n):
            full = T.full
            assert closure(T, 0) == 0
            for S in range(full + 1):
                c = closure(T, S)
                assert S & c == S
                assert closure(T, c) == c
                assert c == S | derived_set(T, S)
                assert interior(T, S) == full & ~closure(T, full & ~S)
                for R in range(full + 1):
                    assert closure(T, S | R) == c | closure(T, R)
            checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 29 + 355
    assert elapsed < 30, f"{elapsed:.1f}s"
    return f"{checked} topologies, all subsets, {elapsed:.1f}s"


def c3_endpoints():
    for n in range(2, 7):
        assert classify(discrete(n)).strongest == "T4"
        assert classify(trivial(n)).strongest is None
    return "n=2..6"


def c4_t1_collapse():
    count = 0
    for n in range(1, 5):
        for T in topologies(n):
            prof = classify(T)
            assert prof.t1 == T.is_discrete()
            assert prof.t1 == prof.t2
            count += 1
    return f"{count} topologies"


def _lattice_laws(a, b, c):
    assert meet(a, b) == meet(b, a)
    assert join(a, b) == join(b, a)
    assert meet(meet(a, b), c) == meet(a, meet(b, c))
    assert join(join(a, b), c) == join(a, join(b, c))
    assert meet(a, a) == a and join(a, a) == a
    assert meet(a, join(a, b)) == a
    assert join(a, meet(a, b)) == a


def c5_lattice_laws():
    for n in (1, 2, 3):
        tops = topologies(n)
        for a, b in product(tops, repeat=2):
            _lattice_laws(a, b, a)
        for a, b, c in product(tops, repeat=3):
            assert meet(meet(a, b), c) == meet(a, meet(b, c))
            assert join(join(a, b), c) == join(a, join(b, c))
        for T in tops:
            assert is_refinement(trivial(n), T) and is_refinement(T, discrete(n))
    rng = random.Random(2024)
    tops = topologies(4)
    for _ in range(1000):
        a, b, c = rng.choice(tops), rng.choice(tops), rng.choice(tops)
        _lattice_laws(a, b, c)
    for T in tops:
        assert is_refinement(trivial(4), T) and is_refinement(T, discrete(4))
    return "exhaustive n<=3, 1000 seeded triples at n=4"


def c6_chain_monotonicity():
    divergent = 0
    for n in (3, 4, 5):
        for seed in range(50):
            trace = classify_chain(deformation_chain(n, "random_maximal", seed))
            for flag in ("t0", "t1"):
                seq = [getattr(s.profile, flag) for s in trace.steps]
                assert seq == sorted(seq)
            assert trace.steps[0].profile.strongest is None
            assert trace.steps[-1].profile.strongest == "T4"
            rows = trace.schedule_rows()
            divergent += any(seen != sched for _, _, seen, sched in rows[1:-1])
    return f"150 chains; intermediate schedule diverges on {divergent} (reported, not asserted)"


def c7_step1_step4():
    space = OrdinalSpace(OMEGA, True)
    A = IntervalSet(((Ordinal(0, 0), OMEGA),))
    assert is_dense_o(space, A)
    assert derived_set_o(space, A) == IntervalSet.point(OMEGA)
    sample = CoverFamily.parse("seg,(3,w]")
    assert len(finite_subcover(space, sample)) == 2
    with pytest.raises(NoFiniteSubcover):
        finite_subcover(OrdinalSpace(OMEGA, False), CoverFamily.parse("seg"))
    return "dense, {w} derived, 2-atom subcover, [0,w) not compact"


def c8_alexandroff():
    rng = random.Random(8)
    space = OrdinalSpace(OMEGA, True)
    mismatches = 0
    n_open = 0
    for _ in range(500):
        S = random_interval_set(rng, space)
        if rng.random() < 0.5:
            # openness is only contested when the top point is present
            S = S | IntervalSet.point(OMEGA)
        a, b = is_open(space, S), alexandroff_open(S)
        mismatches += a != b
        n_open += a
    assert mismatches == 0
    return f"500 sets ({n_open} open), 0 mismatches"


def c9_eventually_constant():
    checked = 0
    for m in range(1, 4):
        for T in topologies(m):
            if not classify(T).t1:
                continue
            for n in range(1, 5):
                maps = all_continuous_maps(trivial(n), T)
                assert len(maps) == m
                assert all(len(set(f)) == 1 for f in maps)
                checked += 1
    rng = random.Random(9)
    for _ in range(100):
        keys = rng.sample(range(30), rng.randint(0, 8))
        f = EventuallyConstantMap(
            tuple((Ordinal(0, k), rng.uniform(-10, 10)) for k in keys), rng.uniform(-10, 10)
        )
        ext = extend_eventually_constant(f)
        assert ext.value == f.tail_value
        assert ext.restrict() == f
    return f"{checked} (n, T1 codomain) pairs; 100 round trips"


def c10_pipeline():
    start = time.perf_counter()
    runs = 0
    for n in range(1, 7):
        for strategy in ("singleton_ascending", "random_maximal"):
            for seed in (0, 1, 2):
                for alpha in (OMEGA, Ordinal(2, 0)):
                    assert run_pipeline(n, strategy, seed, alpha).verdicts == (True, True, True)
                    runs += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 10, f"{elapsed:.1f}s"
    return f"{runs} runs all true in {elapsed:.1f}s"


CRITERIA = [
    (1, "enumeration oracle 4/29/355", c1_enumeration),
    (2, "Kuratowski suite n=3,4", c2_kuratowski),
    (3, "discrete=T4, trivial=None for n=2..6", c3_endpoints),
    (4, "finite T1 collapse", c4_t1_collapse),
    (5, "lattice laws", c5_lattice_laws),
    (6, "chain monotonicity", c6_chain_monotonicity),
    (7, "density, limit point at w, compactness", c7_step1_step4),
    (8, "order topology = one-point compactification", c8_alexandroff),
    (9, "constant maps and eventually-constant extension", c9_eventually_constant),
    (10, "pipeline sweep", c10_pipeline),
]


def _run(number, name, fn):
    try:
        detail = fn()
    except Exception as exc:
        RESULTS[number] = (name, False, f"{type(exc).__name__}: {exc}")
        raise
    RESULTS[number] = (name, True, detail or "")


@pytest.mark.parametrize("number, name, fn", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, name, fn):
    _run(number, name, fn)


def summary_lines():
    return [
        f"criterion {k:>2} {'PASS' if ok else 'FAIL'}  {name}: {detail}"
        for k, (name, ok, detail) in sorted(RESULTS.items())
    ]


if __name__ == "__main__":
    failed = 0
    for number, name, fn in CRITERIA:
        try:
            _run(number, name, fn)
        except Exception:
            failed += 1
    print("\n".join(summary_lines()))
    sys.exit(1 if failed else 0)
