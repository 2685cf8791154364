"""Brute-force oracles shared by the test modules.

Nothing here calls the package's fast paths; each oracle works straight
from the open-set definitions.
"""
from functools import lru_cache
from itertools import combinations

from hypothesis import strategies as st

from ordcompact.finspace import generate_from_subbasis, make_topology
from ordcompact.lattice import all_topologies


def naive_topology_families(n):
    """Every family containing the empty and full sets that is closed under
    pairwise union and intersection, found by scanning all 2^(2^n - 2) families."""
    full = (1 << n) - 1
    middle = list(range(1, full))
    out = []
    for bits in range(1 << len(middle)):
        fam = {0, full} | {m for k, m in enumerate(middle) if bits >> k & 1}
        if all(u | v in fam and u & v in fam for u, v in combinations(fam, 2)):
            out.append(tuple(sorted(fam)))
    return sorted(out)


def closure_oracle(T, S):
    """Intersection of every closed set containing S."""
    out = T.full
    for u in T.opens:
        c = T.full & ~u
        if c & S == S:
            out &= c
    return out


def interior_oracle(T, S):
    out = 0
    for u in T.opens:
        if u & ~S == 0:
            out |= u
    return out


def derived_oracle(T, S):
    """Points every open neighbourhood of which meets S minus the point."""
    out = 0
    for w in range(T.n):
        bit = 1 << w
        if all(u & S & ~bit for u in T.opens if u & bit):
            out |= bit
    return out


def is_constant(f):
    return len(set(f)) <= 1


@lru_cache(maxsize=None)
def topologies(n):
    return tuple(all_topologies(n))


@st.composite
def finite_topologies(draw, min_n=1, max_n=6):
    """Topology generated by a random subbasis."""
    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    sets = draw(st.lists(st.integers(0, full), max_size=6))
    return generate_from_subbasis(n, sets)


@st.composite
def topology_and_subset(draw, max_n=6):
    T = draw(finite_topologies(max_n=max_n))
    S = draw(st.integers(0, T.full))
    return T, S


SIERPINSKI = make_topology(2, [0, 1, 3])

