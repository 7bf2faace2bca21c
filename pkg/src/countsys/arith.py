"""Addition, multiplication and exponentiation on a minimal counting system.

Elements are mapped to their coordinates (orbit positions), combined as
ordinary integers and folded back with :func:`~countsys.counting.normalize`.
That the result does not depend on which sets represent the operands is not
assumed here; it is checked against literal set counting in the tests.
"""

from __future__ import annotations

import itertools
from enum import Enum
from typing import Callable, Union

from .counting import CountingSystem, coordinate, is_bijective, is_injective, iterate, normalize, require_minimal
from .errors import UnknownLawError, ValidationError
from .natmodel import DEFAULT_CAP, BoundedNat
from .oracle import CheckReport, report


class Law(str, Enum):
    A0 = "a0"
    A1 = "a1"
    M0 = "m0"
    M1 = "m1"
    E0 = "e0"
    E1 = "e1"
    COMM_ADD = "comm_add"
    ASSOC_ADD = "assoc_add"
    COMM_MUL = "comm_mul"
    ASSOC_MUL = "assoc_mul"
    DISTRIBUTIVE = "distributive"
    TRICHOTOMY = "trichotomy"
    UNIT_MUL = "unit_mul"
    ZERO_MUL = "zero_mul"
    CANCELLATION = "cancellation"
    GROUP = "group"


def _check_element(cs: CountingSystem, x: int):
    if not 0 <= x < cs.n:
        raise ValidationError(f"{x} is not an element of the carrier")


def add(cs: CountingSystem, x: int, y: int) -> int:
    require_minimal(cs, "add")
    _check_element(cs, x)
    _check_element(cs, y)
    return iterate(cs, coordinate(cs, x) + coordinate(cs, y))


def mul(cs: CountingSystem, x: int, y: int) -> int:
    require_minimal(cs, "mul")
    _check_element(cs, x)
    _check_element(cs, y)
    return iterate(cs, coordinate(cs, x) * coordinate(cs, y))


def power_coordinate(cs: CountingSystem, k: int, e: int) -> int:
    """``normalize(cs, k**e)`` without forming ``k**e`` once it passes the tail."""
    tr = cs.trajectory
    if k <= 1:
        return normalize(cs, k**e)
    threshold, p = 0, 1
    while p < tr.length:
        p *= k
        threshold += 1
    if e < threshold:
        return normalize(cs, k**e)
    # k**e >= tail + cycle, so it sits in the cycle
    return tr.tail + (pow(k, e, tr.cycle) - tr.tail) % tr.cycle


def power(cs: CountingSystem, x: int, e: BoundedNat) -> int:
    """``x`` raised to a natural-number exponent."""
    if not isinstance(e, BoundedNat):
        raise TypeError("exponent must be a BoundedNat, not a carrier element")
    require_minimal(cs, "power")
    _check_element(cs, x)
    return cs.trajectory.orbit[power_coordinate(cs, coordinate(cs, x), e.value)]


def power_by_repeated_mul(cs: CountingSystem, x: int, e: int) -> int:
    result = cs.f[cs.x0]
    for _ in range(e):
        result = mul(cs, x, result)
    return result


OPS: dict[str, Callable[[CountingSystem, int, int], int]] = {"add": add, "mul": mul}


def cayley_table(cs: CountingSystem, op: str) -> list[list[int]]:
    try:
        fn = OPS[op]
    except KeyError:
        raise ValidationError(f"unknown operation {op!r}; expected add or mul") from None
    require_minimal(cs, "cayley_table")
    return [[fn(cs, i, j) for j in range(cs.n)] for i in range(cs.n)]


def table_tsv(cs: CountingSystem, op: str) -> str:
    """Header row of element indices (first cell names the operation), one row per left operand."""
    table = cayley_table(cs, op)
    lines = ["\t".join([op] + [str(j) for j in range(cs.n)])]
    for i, row in enumerate(table):
        lines.append("\t".join([str(i)] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"


def exponent_range(cs: CountingSystem) -> range:
    return range(2 * cs.trajectory.length + 3)


def check_law(cs: CountingSystem, law: Union[Law, str]) -> CheckReport:
    """Exhaustively check one arithmetic law over every tuple of elements."""
    try:
        law = Law(law)
    except ValueError:
        raise UnknownLawError(f"unknown law {law!r}") from None
    require_minimal(cs, "check_law")
    n, f, x0 = cs.n, cs.f, cs.x0
    one = f[x0]
    X = range(n)
    A = cayley_table(cs, "add")
    M = cayley_table(cs, "mul")
    name = law.value

    def first_failure(tuples, holds, keys):
        checked = 0
        for tup in tuples:
            checked += 1
            if not holds(*tup):
                return checked, dict(zip(keys, tup))
        return checked, None

    def pairs():
        return itertools.product(X, repeat=2)

    def triples():
        return itertools.product(X, repeat=3)

    if law is Law.A0:
        checked, bad = first_failure(((x,) for x in X), lambda x: A[x][x0] == x, ("x",))
    elif law is Law.A1:
        checked, bad = first_failure(pairs(), lambda x, y: A[x][f[y]] == f[A[x][y]], ("x", "y"))
    elif law is Law.M0:
        checked, bad = first_failure(((x,) for x in X), lambda x: M[x][x0] == x0, ("x",))
    elif law is Law.M1:
        checked, bad = first_failure(pairs(), lambda x, y: M[x][f[y]] == A[x][M[x][y]], ("x", "y"))
    elif law is Law.E0:
        zero = BoundedNat(0, DEFAULT_CAP)
        checked, bad = first_failure(((x,) for x in X), lambda x: power(cs, x, zero) == one, ("x",))
    elif law is Law.E1:
        def e1(x, e):
            lhs = power(cs, x, BoundedNat(e + 1, DEFAULT_CAP))
            return lhs == M[x][power(cs, x, BoundedNat(e, DEFAULT_CAP))]
        checked, bad = first_failure(itertools.product(X, exponent_range(cs)), e1, ("x", "e"))
    elif law is Law.COMM_ADD:
        checked, bad = first_failure(pairs(), lambda x, y: A[x][y] == A[y][x], ("x", "y"))
    elif law is Law.ASSOC_ADD:
        checked, bad = first_failure(triples(), lambda x, y, z: A[A[x][y]][z] == A[x][A[y][z]], ("x", "y", "z"))
    elif law is Law.COMM_MUL:
        checked, bad = first_failure(pairs(), lambda x, y: M[x][y] == M[y][x], ("x", "y"))
    elif law is Law.ASSOC_MUL:
        checked, bad = first_failure(triples(), lambda x, y, z: M[M[x][y]][z] == M[x][M[y][z]], ("x", "y", "z"))
    elif law is Law.DISTRIBUTIVE:
        checked, bad = first_failure(
            triples(), lambda x, y, z: M[x][A[y][z]] == A[M[x][y]][M[x][z]], ("x", "y", "z")
        )
    elif law is Law.TRICHOTOMY:
        checked, bad = first_failure(
            pairs(),
            lambda x1, x2: any(x1 == A[x2][x] or x2 == A[x1][x] for x in X),
            ("x1", "x2"),
        )
    elif law is Law.UNIT_MUL:
        checked, bad = first_failure(((x,) for x in X), lambda x: M[x][one] == x == M[one][x], ("x",))
    elif law is Law.ZERO_MUL:
        checked, bad = first_failure(((x,) for x in X), lambda x: M[x0][x] == x0 == M[x][x0], ("x",))
    elif law is Law.CANCELLATION:
        candidates = ((x1, x2, x) for x1 in X for x2 in X if x2 > x1 for x in X)
        checked, bad = first_failure(candidates, lambda x1, x2, x: A[x1][x] != A[x2][x], ("x1", "x2", "x"))
        return report(name, checked, bad, f_injective=is_injective(cs))
    else:
        checked, bad = first_failure(
            ((x,) for x in X), lambda x: any(A[x][y] == x0 for y in X), ("x",)
        )
        return report(name, checked, bad, f_bijective=is_bijective(cs))
    return report(name, checked, bad)


def check_all_laws(cs: CountingSystem) -> list[CheckReport]:
    return [check_law(cs, law) for law in Law]
