import pytest
from hypothesis import given

from ordcompact.finspace import closure, discrete, sierpinski, trivial
from ordcompact.separation import (
    SeparationProfile,
    classify,
    classify_definitional,
    specialization_preorder,
    t0_definitional,
)

from oracles import finite_topologies, topologies


def test_preorder_examples():
    assert specialization_preorder(discrete(2)) == ((True, False), (False, True))
    assert specialization_preorder(trivial(2)) == ((True, True), (True, True))
    order = specialization_preorder(sierpinski(0))
    assert order[1][0] is True
    assert order[0][1] is False
    assert order[0][0] and order[1][1]


@given(finite_topologies())
def test_preorder_matches_closure_and_is_a_preorder(T):
    order = specialization_preorder(T)
    n = T.n
    for x in range(n):
        assert order[x][x]
        for y in range(n):
            assert order[x][y] == bool(closure(T, 1 << y) >> x & 1)
            for z in range(n):
                if order[x][y] and order[y][z]:
                    assert order[x][z]


def test_discrete_profile():
    prof = classify(discrete(3))
    assert prof.all_true()
    assert prof.strongest == "T4"


def test_trivial_profile():
    prof = classify(trivial(2))
    assert not any((prof.t0, prof.t1, prof.t2, prof.t3, prof.t4))
    assert prof.regular and prof.normal
    assert prof.strongest is None


def test_sierpinski_profile():
    prof = classify(sierpinski(0))
    assert (prof.t0, prof.t1, prof.t2, prof.regular, prof.normal, prof.t3, prof.t4) == (
        True, False, False, False, True, False, False,
    )
    assert prof.strongest == "T0"


def test_profile_conjunctions():
    prof = SeparationProfile.build(True, False, False, True, True)
    assert not prof.t3 and not prof.t4
    assert prof.strongest == "T0"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fast_path_matches_definitional(n):
    for T in topologies(n):
        assert classify(T) == classify_definitional(T)
        assert classify(T).t0 == t0_definitional(T)


@given(finite_topologies(max_n=5))
def test_fast_path_matches_definitional_random(T):
    assert classify(T) == classify_definitional(T)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_finite_t1_collapse(n):
    for T in topologies(n):
        prof = classify(T)
        assert prof.t1 == T.is_discrete()
        assert prof.t1 == prof.t2
        # finite spaces: T4 forces T3 and everything below
        if prof.t4:
            assert prof.t3 and prof.t2 and prof.t1 and prof.t0


@pytest.mark.parametrize("n", range(1, 7))
def test_endpoints(n):
    assert classify(discrete(n)).strongest == "T4"
    if n >= 2:
        assert classify(trivial(n)).strongest is None


def test_profile_round_trip():
    prof = classify(sierpinski(0))
    assert SeparationProfile.from_dict(prof.to_dict()) == prof
    none = classify(trivial(3))
    assert none.to_dict()["strongest"] == "None"
    assert SeparationProfile.from_dict(none.to_dict()) == none
    bad = dict(prof.to_dict(), t3=True)
    with pytest.raises(ValueError):
        SeparationProfile.from_dict(bad)
