import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from countsys.errors import InvalidAtomError, TooLargeError
from countsys.finset import (
    EMPTY,
    FiniteSet,
    MapTable,
    bijection_exists,
    classify_map,
    enumerate_maps,
    fresh_atom,
    identity_map,
    injection_exists,
    make_set,
    parse_set,
    power_set,
)

small_sets = st.lists(st.integers(0, 20), max_size=6).map(make_set)


def test_make_set():
    assert make_set([]) == EMPTY
    assert make_set([3, 1, 1]).atoms == (1, 3)
    assert make_set([0, 1, 2]).atoms == (0, 1, 2)
    with pytest.raises(InvalidAtomError):
        make_set([1, -2])


def test_text_form_round_trips():
    assert str(EMPTY) == "{}"
    assert str(make_set([7, 1, 3])) == "{1,3,7}"
    assert parse_set("{1,3,7}") == make_set([1, 3, 7])
    assert parse_set("{}") == EMPTY


def test_unsorted_atoms_rejected():
    with pytest.raises(InvalidAtomError):
        FiniteSet((3, 1))


def test_fresh_atom():
    assert fresh_atom(EMPTY).id not in EMPTY
    assert fresh_atom(make_set([0, 1, 2])).id == 3
    assert fresh_atom(make_set([5])).id == 6


def test_fresh_atom_random_sets():
    rng = random.Random(1234)
    for _ in range(1000):
        A = make_set(rng.sample(range(500), rng.randrange(15)))
        assert fresh_atom(A).id not in A


def test_power_set_order():
    assert power_set(EMPTY) == [EMPTY]
    a, b = 4, 9
    assert power_set(make_set([a, b])) == [EMPTY, make_set([a]), make_set([b]), make_set([a, b])]
    assert len(power_set(make_set(range(4)))) == 16
    with pytest.raises(TooLargeError):
        power_set(make_set(range(21)))


@given(small_sets)
def test_power_set_cardinality_and_round_trip(A):
    subsets = power_set(A)
    assert len(subsets) == 2 ** len(A)
    assert len(set(subsets)) == len(subsets)
    for B in subsets:
        assert make_set(B.atoms) == B
        assert B.issubset(A)


def test_classify_map():
    A = make_set([0, 1, 2])
    assert classify_map(identity_map(A)) == {"injective": True, "surjective": True, "bijective": True}
    two = make_set([0, 1])
    assert classify_map(MapTable(two, two, (0, 0))) == {"injective": False, "surjective": False, "bijective": False}
    m = MapTable(two, A, (1, 2))
    assert classify_map(m) == {"injective": True, "surjective": False, "bijective": False}
    assert str(m) == "0->1, 1->2"


def test_map_table_validates():
    with pytest.raises(InvalidAtomError):
        MapTable(make_set([0]), make_set([1]), (2,))
    with pytest.raises(InvalidAtomError):
        MapTable(make_set([0, 1]), make_set([1]), (1,))


def brute_force_injections(A, B):
    return [m for m in enumerate_maps(A, B) if classify_map(m)["injective"]]


def test_injection_exists():
    B = make_set([5, 6, 7])
    w = injection_exists(EMPTY, B)
    assert w is not None and w.values == ()
    w = injection_exists(make_set([0, 1]), B)
    assert w is not None and classify_map(w)["injective"]
    assert w.values == (5, 6)  # first in lexicographic order
    assert brute_force_injections(make_set([0, 1]), B)[0] == w
    assert injection_exists(make_set([0, 1, 2]), make_set([5])) is None
    assert brute_force_injections(make_set([0, 1, 2]), make_set([5])) == []


def test_bijection_exists():
    A = make_set([2, 4, 8])
    assert bijection_exists(A, A) == identity_map(A)
    w = bijection_exists(make_set([0, 1]), make_set([7, 9]))
    assert w is not None and classify_map(w)["bijective"]
    assert bijection_exists(make_set([0]), make_set([1, 2])) is None
    assert not any(classify_map(m)["bijective"] for m in enumerate_maps(make_set([0]), make_set([1, 2])))


def test_search_size_guard():
    with pytest.raises(TooLargeError):
        injection_exists(make_set(range(11)), make_set(range(11)))


def test_enumerate_maps_counts():
    assert [m.values for m in enumerate_maps(EMPTY, make_set([1, 2]))] == [()]
    assert sum(1 for _ in enumerate_maps(make_set([0, 1, 2]), make_set([0, 1, 2]))) == 27
    maps = list(enumerate_maps(make_set([0, 1]), make_set([0, 1, 2])))
    assert len(maps) == 9
    assert [m.values for m in maps] == sorted(m.values for m in maps)
    assert len({m.values for m in maps}) == 9
    with pytest.raises(TooLargeError):
        next(enumerate_maps(make_set(range(7)), make_set(range(10))))


@pytest.mark.parametrize("n", range(5))
def test_selfmap_injective_iff_surjective(n):
    A = make_set(range(n))
    for m in enumerate_maps(A, A):
        flags = classify_map(m)
        assert flags["injective"] == flags["surjective"]


def test_injection_dichotomy_and_bijection():
    sets = [make_set(range(10, 10 + k)) for k in range(7)]
    for A, B in itertools.product(sets, repeat=2):
        ab, ba = injection_exists(A, B), injection_exists(B, A)
        assert ab is not None or ba is not None
        assert (ab is not None) == (len(A) <= len(B))
        if ab is not None and ba is not None:
            assert bijection_exists(A, B) is not None


def test_no_proper_subset_is_equinumerous():
    for n in range(7):
        A = make_set(range(n))
        for B in power_set(A):
            if bijection_exists(B, A) is not None:
                assert B == A
