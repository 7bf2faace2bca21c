import itertools

import pytest

from countsys.counting import (
    C3,
    N5,
    ONE,
    R5,
    S4,
    CountingSystem,
    is_bijective,
    is_injective,
    is_minimal,
    iterate,
    minimal_systems,
    relabel,
    trajectory,
)
from countsys.errors import CannotRestrictError, NotEquinumerousError, RequiresMinimalError, ValidationError
from countsys.finset import classify_map, make_set
from countsys.minimal import (
    Segment,
    end_point,
    endpoint_bijection_check,
    is_segment,
    is_sharp_regular,
    is_z_minimal,
    modify_end,
    segment_extend,
    segment_join,
    segment_morphism,
    segment_of_size,
    segment_restrict,
    sset,
    z_minimal_points,
)
from countsys.oracle import count, sharp_regular_by_definition, sset_by_definition


def labeled_minimal(max_n):
    for n in range(1, max_n + 1):
        yield from minimal_systems(n, labeled=True)


def test_end_point_examples():
    assert end_point(ONE) == 0
    assert end_point(R5) == 4
    assert end_point(S4) == 3
    with pytest.raises(RequiresMinimalError):
        end_point(N5)


@pytest.mark.parametrize("cs", [R5, C3, S4])
def test_endpoint_bijection_examples(cs):
    assert endpoint_bijection_check(cs)


def test_end_point_unique_z_minimal():
    for cs in labeled_minimal(5):
        z = end_point(cs)
        assert z_minimal_points(cs) == [z]
        assert endpoint_bijection_check(cs)


def test_z_minimal_implies_minimal():
    for n in range(1, 4):
        for f in itertools.product(range(n), repeat=n):
            cs = CountingSystem(n, f, 0)
            for z in range(n):
                if is_z_minimal(cs, z):
                    assert is_minimal(cs)


def test_no_fixed_point_off_the_end():
    for cs in labeled_minimal(5):
        z = end_point(cs)
        assert all(cs.f[x] != x for x in range(cs.n) if x != z)


def test_end_image_decides_bijectivity():
    for cs in labeled_minimal(5):
        z = end_point(cs)
        if cs.f[z] == cs.x0:
            assert is_bijective(cs) and cs.x0 in cs.f
        else:
            assert not is_injective(cs) and cs.x0 not in cs.f


def test_sset_examples():
    for cs in (ONE, C3, S4, R5):
        assert sset(cs, 0) == {cs.x0}
    assert sset(R5, 2) == {0, 1, 2}
    assert sset(R5, 10) == {0, 1, 2, 3, 4}


@pytest.mark.parametrize("cs", [ONE, C3, S4, R5], ids=["ONE", "C3", "S4", "R5"])
def test_sset_matches_subset_counts(cs):
    for k in range(8):
        A = make_set(range(40, 40 + k))
        assert sset(cs, k) == sset_by_definition(cs, A)
        assert len(sset(cs, k)) == min(k + 1, trajectory(cs).length)


def test_sharp_regular_examples():
    for cs in (ONE, C3, S4, R5):
        assert is_sharp_regular(cs, 0)
    assert is_sharp_regular(R5, 4)
    assert not is_sharp_regular(R5, 5)
    assert not is_sharp_regular(C3, 3)


def test_sharp_regular_matches_definition():
    for cs in labeled_minimal(4):
        X = frozenset(range(cs.n))
        for k in range(cs.n + 3):
            A = make_set(range(k))
            assert is_sharp_regular(cs, k) == sharp_regular_by_definition(cs, A)
            if k >= 1:
                assert is_sharp_regular(cs, k) == (sset(cs, k - 1) != X)


def test_regular_spanning_sets_count_to_the_end_point():
    for cs in labeled_minimal(5):
        X = frozenset(range(cs.n))
        spanning = [k for k in range(2 * cs.n) if is_sharp_regular(cs, k) and sset(cs, k) == X]
        assert spanning == [cs.n - 1]
        assert count(cs, make_set(range(cs.n - 1))) == end_point(cs)


def test_modify_end_examples():
    m = modify_end(R5, 0)
    assert m == CountingSystem(5, (1, 2, 3, 4, 0), 0)
    assert is_minimal(m) and end_point(m) == 4
    m = modify_end(R5, 4)
    assert m == CountingSystem(5, (1, 2, 3, 4, 4), 0) and is_segment(m)
    assert modify_end(S4, 3) == S4


def test_modify_end_keeps_end_point():
    for cs in labeled_minimal(5):
        z = end_point(cs)
        for w in range(cs.n):
            m = modify_end(cs, w)
            assert is_minimal(m) and end_point(m) == z


def test_is_segment():
    assert is_segment(S4)
    assert not is_segment(C3)
    assert is_segment(ONE)
    assert not is_segment(N5)
    for cs in labeled_minimal(4):
        assert is_segment(cs) == (trajectory(cs).cycle == 1)


def test_segment_of_size():
    assert segment_of_size(1).system == ONE
    assert segment_of_size(4).system == S4
    tr = trajectory(segment_of_size(6).system)
    assert (tr.tail, tr.cycle) == (5, 1)
    with pytest.raises(ValidationError):
        segment_of_size(0)


def test_segment_extend():
    two = segment_extend(segment_of_size(1))
    assert two.size == 2 and two.system == segment_of_size(2).system
    five = segment_extend(Segment.of(S4))
    assert five.size == 5 and five.end == 4
    for k in range(1, 7):
        s = segment_of_size(k)
        assert trajectory(segment_extend(s).system).tail == trajectory(s.system).tail + 1


def test_segment_restrict():
    three = segment_restrict(Segment.of(S4))
    assert three.size == 3 and three.system == segment_of_size(3).system
    for k in range(1, 7):
        s = segment_of_size(k)
        assert segment_restrict(segment_extend(s)) == s
    with pytest.raises(CannotRestrictError):
        segment_restrict(Segment.of(ONE))


def test_restrict_of_relabeled_segment():
    # S4 with elements renamed 0->2, 1->0, 2->3, 3->1
    s = Segment.of(relabel(S4, [2, 0, 3, 1]))
    r = segment_restrict(s)
    assert r.system == segment_of_size(3).system


def test_segment_join_examples():
    assert segment_join(segment_of_size(1), segment_of_size(1)).size == 2
    j = segment_join(segment_of_size(3), segment_of_size(2))
    assert j.system == CountingSystem(5, (1, 2, 3, 4, 4), 0) and j.end == 4
    for p in range(1, 7):
        s = segment_of_size(p)
        assert segment_join(s, segment_of_size(1)).size == p + 1


def test_segment_join_sizes_and_end():
    for p, q in itertools.product(range(1, 7), repeat=2):
        s, u = segment_of_size(p), segment_of_size(q)
        j = segment_join(s, u)
        assert j.size == p + q
        assert is_segment(j.system)
        # u's end-point sits at orbit position p + (q - 1)
        assert j.end == p + q - 1 == j.system.trajectory.orbit.index(j.end)


def test_segment_join_follows_definition_before_relabeling():
    s, u = Segment.of(relabel(S4, [1, 3, 0, 2])), segment_of_size(3)
    j = segment_join(s, u)
    walk, x = [], j.system.x0
    for _ in range(8):
        walk.append(x)
        x = j.system.f[x]
    assert walk == [0, 1, 2, 3, 4, 5, 6, 6]


def test_segment_morphism():
    s = Segment.of(S4)
    assert segment_morphism(s, s).values == (0, 1, 2, 3)
    perm = [2, 0, 3, 1]
    t = Segment.of(relabel(S4, perm))
    p = segment_morphism(s, t)
    assert p.values == tuple(perm)
    assert classify_map(p)["bijective"] and p(s.end) == t.end
    with pytest.raises(NotEquinumerousError):
        segment_morphism(s, segment_of_size(3))


def test_segment_morphism_is_unique_and_structure_preserving():
    for n in range(1, 6):
        s = segment_of_size(n)
        for perm in itertools.permutations(range(n)):
            t = Segment.of(relabel(s.system, perm))
            p = segment_morphism(s, t)
            assert p(s.system.x0) == t.system.x0
            assert all(t.system.f[p(x)] == p(s.system.f[x]) for x in range(n))
            assert p(s.end) == t.end


def test_segment_json():
    assert Segment.of(S4).to_dict() == {"n": 4, "f": [1, 2, 3, 3], "x0": 0, "end": 3}


def test_sset_counts_iterate():
    for cs in (C3, S4, R5):
        for k in range(10):
            assert sset(cs, k) == {iterate(cs, j) for j in range(k + 1)}
