import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from countsys import arith
from countsys.arith import (
    Law,
    add,
    cayley_table,
    check_law,
    mul,
    power,
    power_by_repeated_mul,
    power_coordinate,
    table_tsv,
)
from countsys.counting import (
    C3,
    N5,
    ONE,
    R5,
    S4,
    coordinate,
    is_bijective,
    is_injective,
    minimal_systems,
    normalize,
    sharp,
)
from countsys.errors import RequiresMinimalError, UnknownLawError
from countsys.finset import make_set
from countsys.natmodel import BoundedNat
from countsys.verify import arith_matches_counting
from countsys.oracle import (
    add_table_by_recurrence,
    count,
    iterator_table,
    mul_table_by_recurrence,
    pow_table_by_recurrence,
    product_set,
)

from conftest import minimal_systems as minimal_strategy


def nat(k):
    return BoundedNat(k)


def shapes(max_n):
    for n in range(1, max_n + 1):
        yield from minimal_systems(n)


def test_add_examples():
    assert add(R5, 3, 0) == 3
    # a 3-element and a disjoint 4-element set, counted together
    assert add(R5, 3, 4) == count(R5, make_set(range(3)).union(make_set(range(10, 14)))) == 4
    assert add(C3, 2, 2) == (2 + 2) % 3 == 1


def test_mul_examples():
    assert mul(R5, 2, 0) == 0
    assert mul(R5, 2, 1) == 2
    assert mul(R5, 2, 3) == count(R5, product_set(make_set(range(2)), make_set(range(3)))) == 3


def test_pow_examples():
    for cs in (ONE, C3, S4, R5):
        for x in range(cs.n):
            assert power(cs, x, nat(0)) == cs.f[cs.x0]
    assert power(C3, 2, nat(3)) == 2
    assert power(R5, 2, nat(10)) == power_by_repeated_mul(R5, 2, 10) == 4
    assert normalize(R5, 2**10) == 4


def test_pow_rejects_carrier_exponent():
    with pytest.raises(TypeError):
        power(R5, 2, 3)


def test_pow_edge_cases_at_zero():
    for cs in (C3, S4, R5):
        assert power(cs, cs.x0, nat(0)) == cs.f[cs.x0]
        for e in range(1, 8):
            assert power(cs, cs.x0, nat(e)) == cs.x0


def test_pow_handles_huge_exponents():
    e = 2**16
    for cs in (C3, S4, R5):
        for x in range(cs.n):
            k = coordinate(cs, x)
            assert power(cs, x, BoundedNat(e, cap=e)) == cs.trajectory.orbit[normalize(cs, k**e)]
    assert power_coordinate(R5, 3, 10**18) == 2 + (pow(3, 10**18, 3) - 2) % 3


def test_requires_minimal():
    for op in (add, mul):
        with pytest.raises(RequiresMinimalError):
            op(N5, 0, 1)
    with pytest.raises(RequiresMinimalError):
        cayley_table(N5, "add")


def test_cayley_tables():
    assert cayley_table(ONE, "add") == [[0]]
    assert cayley_table(C3, "add") == [[(i + j) % 3 for j in range(3)] for i in range(3)]
    assert cayley_table(C3, "mul") == [[(i * j) % 3 for j in range(3)] for i in range(3)]
    assert table_tsv(C3, "mul") == "mul\t0\t1\t2\n0\t0\t0\t0\n1\t0\t1\t2\n2\t0\t2\t1\n"


def test_check_law_examples():
    r = check_law(R5, "assoc_add")
    assert r.passed and r.instances_checked == 125
    r = check_law(C3, Law.GROUP)
    assert r.passed and r.stats["f_bijective"]
    with pytest.raises(UnknownLawError):
        check_law(R5, "subtraction")


def test_cancellation_fails_on_r5_with_valid_witness():
    r = check_law(R5, "cancellation")
    assert not r.passed
    w = r.counterexample
    assert w["x1"] != w["x2"]
    assert add(R5, w["x1"], w["x"]) == add(R5, w["x2"], w["x"])
    # the witness quoted for this system is valid too
    assert add(R5, 0, 3) == 3 == add(R5, 3, 3)


@pytest.mark.parametrize("cs", list(shapes(6)), ids=lambda cs: f"t{cs.trajectory.tail}l{cs.trajectory.cycle}")
def test_all_laws_on_every_shape(cs):
    for law in Law:
        r = check_law(cs, law)
        if law is Law.CANCELLATION:
            assert r.passed == is_injective(cs) == (cs.trajectory.tail == 0)
        elif law is Law.GROUP:
            assert r.passed == is_bijective(cs) == (cs.trajectory.tail == 0)
        else:
            assert r.passed, r.counterexample


def test_cancellation_and_group_on_labeled_systems():
    for n in range(1, 7):
        for cs in minimal_systems(n, labeled=True):
            t0 = cs.trajectory.tail == 0
            assert check_law(cs, "cancellation").passed == is_injective(cs) == t0
            assert check_law(cs, "group").passed == is_bijective(cs) == t0


@pytest.mark.parametrize("cs", list(shapes(6)), ids=lambda cs: f"t{cs.trajectory.tail}l{cs.trajectory.cycle}")
def test_tables_are_the_unique_solutions_of_the_recurrences(cs):
    assert add_table_by_recurrence(cs) == cayley_table(cs, "add")
    assert mul_table_by_recurrence(cs) == cayley_table(cs, "mul")
    P = pow_table_by_recurrence(cs, 20)
    for x in range(cs.n):
        assert P[x] == [power(cs, x, nat(e)) for e in range(21)]


@settings(max_examples=60, deadline=None)
@given(minimal_strategy(max_n=7))
def test_laws_on_relabeled_systems(cs):
    for law in (Law.A1, Law.M1, Law.DISTRIBUTIVE, Law.TRICHOTOMY, Law.E1):
        assert check_law(cs, law).passed
    assert add_table_by_recurrence(cs) == cayley_table(cs, "add")


@settings(deadline=None)
@given(minimal_strategy(max_n=6), st.integers(0, 30), st.integers(0, 30))
def test_exponent_laws(cs, y1, y2):
    for x in range(cs.n):
        lhs = power(cs, x, nat(y1 + y2))
        assert lhs == mul(cs, power(cs, x, nat(y1)), power(cs, x, nat(y2)))
        for x2 in range(cs.n):
            assert power(cs, mul(cs, x, x2), nat(y1)) == mul(cs, power(cs, x, nat(y1)), power(cs, x2, nat(y1)))


def test_pow_via_normalize_equals_repeated_mul():
    for cs in shapes(6):
        for x in range(cs.n):
            for e in range(21):
                assert power(cs, x, nat(e)) == power_by_repeated_mul(cs, x, e)


def test_group_is_cyclic_generated_by_one():
    for cs in shapes(6):
        if cs.trajectory.tail:
            continue
        one, x, seen = cs.f[cs.x0], cs.x0, set()
        for _ in range(cs.n):
            seen.add(x)
            x = add(cs, x, one)
        assert seen == set(range(cs.n))


@pytest.mark.parametrize("cs", [C3, S4, R5], ids=["C3", "S4", "R5"])
def test_arithmetic_matches_set_counting(cs):
    r = arith_matches_counting(cs)
    assert r.passed, r.counterexample
    assert r.instances_checked == 3**10 + 32**2 + 8 * 4


def test_counting_check_detects_a_wrong_addition(monkeypatch):
    monkeypatch.setattr(arith, "add", lambda cs, x, y: mul(cs, x, y))
    r = arith_matches_counting(R5, universe_size=4)
    assert not r.passed and r.counterexample["op"] == "add"


def test_sums_of_small_sets_by_hand():
    U = make_set(range(6))
    table = iterator_table(R5, U)
    A, B = make_set([0, 1]), make_set([2, 3, 4, 5])
    assert add(R5, table[A], table[B]) == table[U] == sharp(R5, U) == 3
