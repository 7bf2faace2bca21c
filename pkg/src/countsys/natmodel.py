"""A bounded model of the natural numbers with successor and zero.

Values live in ``[0, cap]``.  Running past the cap raises
:class:`~countsys.errors.NatOverflowError` instead of wrapping, so every
statement checked here is honestly scoped to "below the cap".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .counting import CountingSystem, iterate
from .errors import NatOverflowError, TooLargeError, ValidationError
from .finset import FiniteSet, bijection_exists, make_set
from .oracle import CheckReport, report

DEFAULT_CAP = 2**16


@dataclass(frozen=True, order=True)
class BoundedNat:
    value: int
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.cap < 1:
            raise ValidationError("cap must be >= 1")
        if not 0 <= self.value <= self.cap:
            raise NatOverflowError(f"{self.value} outside [0, {self.cap}]")

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def zero(cap: int = DEFAULT_CAP) -> BoundedNat:
    return BoundedNat(0, cap)


def successor(n: BoundedNat) -> BoundedNat:
    if n.value == n.cap:
        raise NatOverflowError(f"successor of the cap {n.cap}")
    return BoundedNat(n.value + 1, n.cap)


def nat_add(a: BoundedNat, b: BoundedNat) -> BoundedNat:
    """Addition by repeated successor; overflows loudly."""
    result = a
    for _ in range(b.value):
        result = successor(result)
    return result


def bracket(n: BoundedNat) -> FiniteSet:
    """``{0, ..., n-1}``."""
    return make_set(range(n.value))


def nat_sharp(A: FiniteSet, cap: int = DEFAULT_CAP) -> BoundedNat:
    """Count ``A`` in the model: apply successor once per element."""
    x = zero(cap)
    for _ in A:
        x = successor(x)
    return x


def nat_recursion(target: CountingSystem, k: BoundedNat) -> int:
    """Value at ``k`` of the unique map ``h`` with ``h(0) = y0`` and ``h(s(k)) = g(h(k))``."""
    return iterate(target, k.value)


def recursion_solutions(target: CountingSystem, cap: int) -> Iterator[tuple[int, ...]]:
    """All tables ``h`` on ``[0, cap]`` obeying the recursion, by depth-first search.

    Every target value is tried at every position, so this finds any
    solution that exists, not just the one the closed form predicts.
    """
    if cap > 256:
        raise TooLargeError("recursion_solutions limited to cap <= 256")
    h: list[int] = []

    def extend():
        k = len(h)
        if k == cap + 1:
            yield tuple(h)
            return
        for v in range(target.n):
            if (k == 0 and v == target.x0) or (k > 0 and v == target.f[h[-1]]):
                h.append(v)
                yield from extend()
                h.pop()

    return extend()


def check_recursion_uniqueness(target: CountingSystem, cap: int = 32) -> CheckReport:
    expected = tuple(nat_recursion(target, BoundedNat(k, cap)) for k in range(cap + 1))
    solutions = list(itertools.islice(recursion_solutions(target, cap), 2))
    if solutions != [expected]:
        return report("recursion", 1, {"expected": list(expected), "found": [list(s) for s in solutions]})
    return report("recursion", 1, cap=cap)


def check_standard_below_cap(cap: int) -> CheckReport:
    """Successor is injective on ``[0, cap-1]`` and zero is not a successor."""
    images = [successor(BoundedNat(k, cap)).value for k in range(cap)]
    if len(set(images)) != len(images):
        return report("standard", cap, {"reason": "successor not injective"})
    if 0 in images:
        return report("standard", cap, {"reason": "zero is a successor"})
    return report("standard", cap)


def check_completeness(cap: int) -> CheckReport:
    """Equal counts imply equinumerous sets, for all sizes up to ``cap``.

    Sets ``A_k = {0..k-1}`` and ``B_k`` (shifted past the cap) are grown one
    atom at a time; their counts follow the adjunction rule and a bijection
    ``A_k -> B_k`` is extended alongside.  Small sizes are cross-checked with
    the backtracking bijection search.
    """
    if cap > 2**16:
        raise TooLargeError("check_completeness limited to cap <= 2^16")
    A: list[int] = []
    B: list[int] = []
    image: set[int] = set()
    count_a = count_b = zero(cap)
    size_of_count: dict[int, int] = {}
    for k in range(cap + 1):
        if k:
            a, b = k - 1, cap + k
            A.append(a)
            B.append(b)
            count_a, count_b = successor(count_a), successor(count_b)
            if b in image:
                return report("completeness", k, {"size": k, "reason": "pairing not injective"})
            image.add(b)
        if count_a.value in size_of_count:
            return report("completeness", k + 1, {"count": count_a.value, "sizes": [size_of_count[count_a.value], k]})
        size_of_count[count_a.value] = k
        if count_a != count_b or len(image) != len(B):
            return report("completeness", k + 1, {"size": k})
        if k <= 10 and bijection_exists(make_set(A), make_set(B)) is None:
            return report("completeness", k + 1, {"size": k, "reason": "no bijection found"})
    return report("completeness", cap + 1, cap=cap)
