"""Brute-force ground truth.

Nothing in here uses the closed forms of :mod:`countsys.counting`; sets are
counted by literally adjoining one element at a time, inductive systems are
found by enumerating every family of subsets, and the arithmetic recurrences
are solved by filling tables cell by cell.  The optimized modules are tested
against these functions.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from .counting import CountingSystem, is_minimal, require_minimal
from .errors import (
    BadOrderError,
    EmptySystemError,
    InvalidAtomError,
    RequiresMinimalError,
    TooLargeError,
    UnknownLawError,
)
from .finset import (
    EMPTY,
    FiniteSet,
    all_self_maps,
    enumerate_maps,
    make_set,
    power_set,
)

STRIDE = 2**16
INDUCTIVE_LIMIT = 4
SELFMAP_LIMIT = 7


@dataclass(frozen=True)
class SubsetSystem:
    base: FiniteSet
    members: tuple[FiniteSet, ...]

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if len(set(members)) != len(members):
            raise InvalidAtomError("duplicate members in subset system")
        for m in members:
            if not m.issubset(self.base):
                raise InvalidAtomError(f"{m} is not a subset of {self.base}")

    def __contains__(self, B):
        return B in set(self.members)

    def __len__(self):
        return len(self.members)


@dataclass
class CheckReport:
    law: str
    instances_checked: int
    passed: bool
    counterexample: Optional[dict] = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("a report passes exactly when it has no counterexample")

    def to_dict(self) -> dict[str, Any]:
        return {
            "law": self.law,
            "checked": self.instances_checked,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in self.stats.items())
        return f"{status} {self.law} checked={self.instances_checked}{extra}"


def report(law: str, checked: int, counterexample=None, **stats) -> CheckReport:
    return CheckReport(law, checked, counterexample is None, counterexample, dict(stats))


# ---------------------------------------------------------------------------
# finite sets, inductive systems


def is_inductive(K: SubsetSystem) -> bool:
    members = set(K.members)
    if EMPTY not in members:
        return False
    for B in members:
        for a in K.base:
            if a not in B and B.add(a) not in members:
                return False
    return True


def _inductive_masks(n: int) -> list[int]:
    # a family of subsets is an integer whose bit m says "subset m is a member"
    result = []
    for fam in range(1 << (1 << n)):
        if not fam & 1:
            continue
        ok = True
        for m in range(1 << n):
            if fam >> m & 1:
                for j in range(n):
                    if not (m >> j & 1) and not (fam >> (m | 1 << j) & 1):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            result.append(fam)
    return result


def inductive_systems(A: FiniteSet) -> list[SubsetSystem]:
    """Every inductive system in the power set of ``A``, by exhaustive enumeration."""
    n = len(A)
    if n > INDUCTIVE_LIMIT:
        raise TooLargeError(f"inductive_systems limited to |A| <= {INDUCTIVE_LIMIT}")
    subsets = power_set(A)
    return [
        SubsetSystem(A, tuple(subsets[m] for m in range(1 << n) if fam >> m & 1))
        for fam in _inductive_masks(n)
    ]


def candidate_count(A: FiniteSet) -> int:
    return 2 ** (2 ** len(A))


def every_inductive_contains(A: FiniteSet) -> bool:
    return all(A in K for K in inductive_systems(A))


def is_finite_by_definition(A: FiniteSet) -> bool:
    """True iff the full power set is the only inductive system in it."""
    systems = inductive_systems(A)
    return len(systems) == 1 and set(systems[0].members) == set(power_set(A))


def tarski_minimal(S: SubsetSystem) -> FiniteSet:
    """A member with no proper subset among the members.

    Ties are broken by cardinality, then lexicographically on sorted atoms.
    """
    if not S.members:
        raise EmptySystemError("tarski_minimal needs a nonempty system")
    minimal = [
        B for B in S.members if not any(C.is_proper_subset(B) for C in S.members)
    ]
    return min(minimal, key=lambda B: (len(B), B.atoms))


def check_selfmaps(n: int) -> CheckReport:
    """Injective iff surjective, for all ``n^n`` self-maps of an ``n``-set."""
    if n > SELFMAP_LIMIT:
        raise TooLargeError(f"check_selfmaps limited to n <= {SELFMAP_LIMIT}")
    full = set(range(n))
    checked = bijective = 0
    for values in all_self_maps(n):
        checked += 1
        image = set(values)
        injective = len(image) == n
        surjective = image == full
        if injective != surjective:
            return report("selfmaps", checked, {"map": list(values)}, n=n)
        bijective += injective
    return report("selfmaps", checked, n=n, bijective=bijective)


# ---------------------------------------------------------------------------
# iterator by literal construction


def iterator_by_removal(cs: CountingSystem, A: FiniteSet, order: Sequence[int]) -> int:
    """Evaluate the iterator on ``A`` through its defining recursion.

    Elements are peeled off ``A`` in ``order`` down to the empty set, which
    counts as ``x0``; climbing back up applies ``f`` once per adjoined element.
    """
    order = list(order)
    if len(order) != len(A) or set(order) != set(A.atoms):
        raise BadOrderError(f"order {order} is not a permutation of {A}")
    chain = [A]
    for a in order:
        chain.append(chain[-1].difference(FiniteSet((a,))))
    assert chain[-1] == EMPTY
    x = cs.x0
    for smaller, larger in zip(reversed(chain), list(reversed(chain))[1:]):
        assert len(larger) == len(smaller) + 1 and smaller.issubset(larger)
        x = cs.f[x]
    return x


def count(cs: CountingSystem, A: FiniteSet) -> int:
    return iterator_by_removal(cs, A, A.atoms)


def iterator_table(cs: CountingSystem, A: FiniteSet) -> dict[FiniteSet, int]:
    """The iterator on every subset of ``A`` built from the two defining rules.

    Each nonempty subset ``B`` gets ``f(#(B - {a}))`` for *every* ``a`` in ``B``;
    the candidates must agree, which is exactly the well-definedness of ``#``.
    """
    if len(A) > 12:
        raise TooLargeError("iterator_table limited to |A| <= 12")
    n = len(A)
    subsets = power_set(A)
    value = {0: cs.x0}
    for mask in sorted(range(1, 1 << n), key=lambda m: bin(m).count("1")):
        candidates = {cs.f[value[mask & ~(1 << j)]] for j in range(n) if mask >> j & 1}
        if len(candidates) != 1:
            raise AssertionError(f"iterator not well defined at {subsets[mask]}")
        value[mask] = candidates.pop()
    return {subsets[m]: v for m, v in value.items()}


# ---------------------------------------------------------------------------
# realizing products and function spaces as genuine finite sets


def pair_atom(a: int, b: int) -> int:
    if not (0 <= a < STRIDE and 0 <= b < STRIDE):
        raise InvalidAtomError("paired atoms must lie below STRIDE")
    return a * STRIDE + b


def product_set(A: FiniteSet, B: FiniteSet) -> FiniteSet:
    return make_set(pair_atom(a, b) for a in A for b in B)


def map_space(domain: FiniteSet, codomain: FiniteSet) -> FiniteSet:
    """All maps ``domain -> codomain`` as a set of atoms, one per enumerated map."""
    return FiniteSet(tuple(i for i, _ in enumerate(enumerate_maps(domain, codomain))))


def universe(size: int) -> FiniteSet:
    return make_set(range(size))


COUNTING_LAWS = ("beta", "delta", "exp")


def check_counting_law(cs: CountingSystem, law: str, universe_size: int) -> CheckReport:
    """Representative-independence of set counting.

    beta:  disjoint ``A, B`` and ``A', B'`` with equal counts have unions of equal count.
    delta: same for cartesian products (arbitrary pairs).
    exp:   ``#B = #C`` implies ``#(maps A->B) = #(maps A->C)`` for ``|A| <= 3``.
    """
    if law not in COUNTING_LAWS:
        raise UnknownLawError(f"unknown counting law {law!r}")
    if not is_minimal(cs):
        raise RequiresMinimalError("check_counting_law requires a minimal system")
    limit = 5 if law == "exp" else 8
    if universe_size > limit:
        raise TooLargeError(f"{law} limited to universe_size <= {limit}")
    U = list(range(universe_size))
    seen: dict[Any, tuple[int, Any]] = {}
    checked = 0

    def record(key, value, witness):
        nonlocal checked
        checked += 1
        if key in seen and seen[key][0] != value:
            return {"key": list(key), "first": seen[key][1], "second": witness}
        seen.setdefault(key, (value, witness))
        return None

    if law == "beta":
        for labels in itertools.product((0, 1, 2), repeat=universe_size):
            A = make_set(u for u, l in zip(U, labels) if l == 1)
            B = make_set(u for u, l in zip(U, labels) if l == 2)
            bad = record((count(cs, A), count(cs, B)), count(cs, A.union(B)), [str(A), str(B)])
            if bad:
                return report(law, checked, bad)
    elif law == "delta":
        subsets = power_set(make_set(U))
        for A in subsets:
            for B in subsets:
                bad = record((count(cs, A), count(cs, B)), count(cs, product_set(A, B)), [str(A), str(B)])
                if bad:
                    return report(law, checked, bad)
    else:
        subsets = power_set(make_set(U))
        exponents = [A for A in subsets if len(A) <= 3]
        for A in exponents:
            for B in subsets:
                bad = record((count(cs, B), A.atoms), count(cs, map_space(A, B)), [str(A), str(B)])
                if bad:
                    return report(law, checked, bad)
    return report(law, checked, classes=len(seen))


# ---------------------------------------------------------------------------
# morphisms and arithmetic recurrences, by enumeration / table filling


@lru_cache(maxsize=64)
def _candidate_maps(n: int, m: int) -> np.ndarray:
    # every map {0..n-1} -> {0..m-1}, one per row, lexicographic
    if m**n > 10**6:
        raise TooLargeError("too many candidate maps")
    grid = np.indices((m,) * n).reshape(n, -1).T if n else np.zeros((1, 0), dtype=int)
    grid.setflags(write=False)
    return grid


def morphisms_by_enumeration(src: CountingSystem, dst: CountingSystem) -> list[tuple[int, ...]]:
    """Every map ``src -> dst`` (as a value tuple) that is a morphism.

    All ``|dst|^|src|`` candidates are tested; numpy evaluates them in bulk.
    """
    H = _candidate_maps(src.n, dst.n)
    g = np.asarray(dst.f)
    ok = (H[:, src.x0] == dst.x0) & np.all(H[:, list(src.f)] == g[H], axis=1)
    return [tuple(int(v) for v in row) for row in H[ok]]


def _orbit_steps(cs: CountingSystem) -> Iterable[tuple[int, int]]:
    # pairs (y, f(y)) along the orbit of x0, including the step that closes the cycle
    y = cs.x0
    visited = set()
    while y not in visited:
        visited.add(y)
        yield y, cs.f[y]
        y = cs.f[y]


def _fill_by_recurrence(cs: CountingSystem, start, step) -> list[list[int]]:
    # T[x][x0] = start(x); T[x][f(y)] = step(x, T[x][y]); every cell must be forced consistently
    n = cs.n
    table: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for x in range(n):
        table[x][cs.x0] = start(x)
        for y, fy in _orbit_steps(cs):
            new = step(x, table[x][y])
            if table[x][fy] is None:
                table[x][fy] = new
            elif table[x][fy] != new:
                raise AssertionError(f"recurrence inconsistent at ({x}, {fy})")
    return table  # type: ignore[return-value]


def add_table_by_recurrence(cs: CountingSystem) -> list[list[int]]:
    """The unique table with ``x + x0 = x`` and ``x + f(y) = f(x + y)``."""
    require_minimal(cs, "add_table_by_recurrence")
    return _fill_by_recurrence(cs, lambda x: x, lambda x, v: cs.f[v])


def mul_table_by_recurrence(cs: CountingSystem) -> list[list[int]]:
    """The unique table with ``x * x0 = x0`` and ``x * f(y) = x + (x * y)``."""
    add = add_table_by_recurrence(cs)
    return _fill_by_recurrence(cs, lambda x: cs.x0, lambda x, v: add[x][v])


def pow_table_by_recurrence(cs: CountingSystem, max_exponent: int) -> list[list[int]]:
    """``P[x][e]`` for ``e <= max_exponent`` from ``x^0 = f(x0)``, ``x^(e+1) = x * x^e``."""
    mul = mul_table_by_recurrence(cs)
    table = []
    for x in range(cs.n):
        row = [cs.f[cs.x0]]
        for _ in range(max_exponent):
            row.append(mul[x][row[-1]])
        table.append(row)
    return table


def sharp_regular_by_definition(cs: CountingSystem, A: FiniteSet) -> bool:
    """No proper subset of ``A`` has the same count as ``A``."""
    target = count(cs, A)
    return all(count(cs, B) != target for B in power_set(A) if len(B) < len(A))


def sset_by_definition(cs: CountingSystem, A: FiniteSet) -> frozenset[int]:
    """Counts of all subsets of ``A``."""
    return frozenset(count(cs, B) for B in power_set(A))
