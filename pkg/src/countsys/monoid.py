"""The monoid of iterates ``f^k`` of a self-map, under composition.

For a minimal system, evaluating an iterate at the base point is a bijection
from this monoid onto the carrier.  Pulling composition back along it gives a
second construction of addition, and the map ``u, v -> u^(exponent of v)``
gives multiplication; both are compared against :mod:`countsys.arith`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .arith import add, mul
from .counting import CountingSystem, require_minimal
from .errors import CarrierMismatchError
from .oracle import CheckReport, report


@lru_cache(maxsize=1024)
def index_period(f: tuple[int, ...]) -> tuple[int, int]:
    """Index and period of ``f`` in the full transformation monoid.

    The powers ``f^0, f^1, ...`` repeat for the first time at
    ``f^(index + period) == f^index``.
    """
    seen: dict[tuple[int, ...], int] = {}
    g = tuple(range(len(f)))
    k = 0
    while g not in seen:
        seen[g] = k
        g = tuple(f[x] for x in g)
        k += 1
    i = seen[g]
    return i, k - i


def canonical_exponent(f: tuple[int, ...], k: int) -> int:
    i, p = index_period(f)
    return k if k < i + p else i + (k - i) % p


@dataclass(frozen=True, eq=False)
class PowerMap:
    exponent_class: int
    table: tuple[int, ...]
    generator: tuple[int, ...] = field(repr=False)

    # equality is extensional: two iterates are equal when their tables agree
    def __eq__(self, other):
        if not isinstance(other, PowerMap):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __str__(self):
        return f"f^{self.exponent_class}: {list(self.table)}"


def _iterate_table(f: tuple[int, ...], k: int) -> tuple[int, ...]:
    g = tuple(range(len(f)))
    for _ in range(k):
        g = tuple(f[x] for x in g)
    return g


def f_power(cs: CountingSystem, k: int) -> PowerMap:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    j = canonical_exponent(cs.f, k)
    return PowerMap(j, _iterate_table(cs.f, j), cs.f)


def identity(cs: CountingSystem) -> PowerMap:
    return f_power(cs, 0)


def monoid_elements(cs: CountingSystem) -> list[PowerMap]:
    """Distinct iterates of ``f``, found by composing until a table repeats."""
    require_minimal(cs, "monoid_elements")
    elements: list[PowerMap] = []
    seen = set()
    table = tuple(range(cs.n))
    k = 0
    while table not in seen:
        seen.add(table)
        elements.append(PowerMap(k, table, cs.f))
        table = tuple(cs.f[x] for x in table)
        k += 1
    return elements


def phi(cs: CountingSystem, u: PowerMap) -> int:
    require_minimal(cs, "phi")
    return u.table[cs.x0]


def compose(u: PowerMap, v: PowerMap) -> PowerMap:
    """``u`` after ``v``."""
    if len(u.table) != len(v.table) or u.generator != v.generator:
        raise CarrierMismatchError("iterates of different maps")
    table = tuple(u.table[x] for x in v.table)
    return PowerMap(canonical_exponent(u.generator, u.exponent_class + v.exponent_class), table, u.generator)


def psi(v: PowerMap, u: PowerMap) -> PowerMap:
    """Iterate ``v`` as many times as ``u`` iterates ``f``."""
    if v.generator != u.generator:
        raise CarrierMismatchError("iterates of different maps")
    table = _iterate_table(v.table, u.exponent_class)
    return PowerMap(canonical_exponent(v.generator, v.exponent_class * u.exponent_class), table, v.generator)


def diamond(cs: CountingSystem, u: PowerMap, v: PowerMap) -> PowerMap:
    """``f^(j*k)`` for ``u = f^j`` and ``v = f^k``."""
    require_minimal(cs, "diamond")
    if u.generator != cs.f or v.generator != cs.f:
        raise CarrierMismatchError("iterates of a different map")
    return f_power(cs, u.exponent_class * v.exponent_class)


def check_monoid_iso(cs: CountingSystem) -> CheckReport:
    """Evaluation at the base point carries composition to addition and
    ``diamond`` to multiplication; ``diamond`` agrees with ``psi``, commutes,
    and distributes over composition."""
    require_minimal(cs, "check_monoid_iso")
    elems = monoid_elements(cs)
    f1 = f_power(cs, 1)
    ident = identity(cs)
    counts = {"phi_add": 0, "phi_mul": 0, "commutes_with_f": 0, "psi": 0, "psi_symmetric": 0, "endomorphism": 0}

    def fail(law, **witness):
        return report("monoid_iso", sum(counts.values()), {"law": law, **{k: str(v) for k, v in witness.items()}})

    for u in elems:
        counts["commutes_with_f"] += 1
        if compose(f1, u) != compose(u, f1):
            return fail("commutes_with_f", u=u)
        for v in elems:
            counts["phi_add"] += 1
            if phi(cs, compose(u, v)) != add(cs, phi(cs, u), phi(cs, v)):
                return fail("phi_add", u=u, v=v)
            counts["phi_mul"] += 1
            d = diamond(cs, u, v)
            if phi(cs, d) != mul(cs, phi(cs, u), phi(cs, v)):
                return fail("phi_mul", u=u, v=v)
            counts["psi"] += 1
            if d != psi(u, v):
                return fail("psi", u=u, v=v)
            counts["psi_symmetric"] += 1
            if psi(v, u) != psi(u, v):
                return fail("psi_symmetric", u=u, v=v)
    for v in elems:
        counts["endomorphism"] += 1
        if diamond(cs, v, ident) != ident:
            return fail("endomorphism", v=v)
        for u1 in elems:
            for u2 in elems:
                counts["endomorphism"] += 1
                if diamond(cs, v, compose(u1, u2)) != compose(diamond(cs, v, u1), diamond(cs, v, u2)):
                    return fail("endomorphism", v=v, u1=u1, u2=u2)
    return report("monoid_iso", sum(counts.values()), **counts)
