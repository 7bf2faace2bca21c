"""Verification suites run by ``countsys verify``.

Each suite returns a list of :class:`~countsys.oracle.CheckReport`; the
command exits nonzero if any of them failed.  ``max_n`` bounds carrier sizes
(individual suites clamp it further where enumeration would explode).
"""

from __future__ import annotations

import itertools
import math
from typing import Callable

from . import arith, counting, minimal, monoid, natmodel, oracle
from .counting import FIXTURES, CountingSystem
from .finset import bijection_exists, make_set
from .oracle import CheckReport, report


def _first_failure(law: str, items, check) -> CheckReport:
    # check(item) returns None when fine, else a counterexample dict
    checked = 0
    for item in items:
        checked += 1
        bad = check(item)
        if bad is not None:
            return report(law, checked, bad)
    return report(law, checked)


def suite_selfmaps(max_n: int, cap: int) -> list[CheckReport]:
    out = []
    for n in range(min(max_n, oracle.SELFMAP_LIMIT) + 1):
        r = oracle.check_selfmaps(n)
        if r.passed and r.stats["bijective"] != math.factorial(n):
            r = report("selfmaps", r.instances_checked, {"n": n, "bijective": r.stats["bijective"]}, n=n)
        out.append(r)
    return out


def suite_inductive(max_n: int, cap: int) -> list[CheckReport]:
    out = []
    for k in range(min(max_n, oracle.INDUCTIVE_LIMIT) + 1):
        A = oracle.universe(k)
        systems = oracle.inductive_systems(A)
        bad = None
        if not oracle.is_finite_by_definition(A):
            bad = {"size": k, "systems": len(systems)}
        elif not oracle.every_inductive_contains(A):
            bad = {"size": k, "reason": "an inductive system misses A"}
        out.append(report(f"inductive[{k}]", oracle.candidate_count(A), bad, systems=len(systems)))
    return out


def tarski_all(k: int) -> CheckReport:
    """Every nonempty family of subsets of a ``k``-set has a minimal member."""
    A = oracle.universe(k)
    subsets = oracle.power_set(A)

    def check(fam):
        S = oracle.SubsetSystem(A, tuple(subsets[m] for m in range(len(subsets)) if fam >> m & 1))
        B = oracle.tarski_minimal(S)
        if B not in S or any(C.is_proper_subset(B) for C in S.members):
            return {"family": [str(C) for C in S.members]}
        return None

    return _first_failure(f"tarski[{k}]", range(1, 1 << len(subsets)), check)


def suite_tarski(max_n: int, cap: int) -> list[CheckReport]:
    return [tarski_all(k) for k in range(min(max_n, oracle.INDUCTIVE_LIMIT) + 1)]


def iterator_orders(cs: CountingSystem, max_size: int = 5) -> CheckReport:
    """``sharp`` agrees with the removal recursion under every element order."""

    def items():
        for size in range(max_size + 1):
            A = make_set(range(10, 10 + size))
            for order in itertools.permutations(A.atoms):
                yield A, order

    def check(item):
        A, order = item
        if oracle.iterator_by_removal(cs, A, order) != counting.sharp(cs, A):
            return {"set": str(A), "order": list(order)}
        return None

    return _first_failure("iterator", items(), check)


def suite_iterator(max_n: int, cap: int) -> list[CheckReport]:
    out = []
    for name, cs in FIXTURES.items():
        r = iterator_orders(cs, min(max_n, 5))
        r.law = f"iterator[{name}]"
        out.append(r)
    return out


def trajectory_ok(cs: CountingSystem) -> bool:
    tr = counting.trajectory(cs)
    orb = tr.orbit
    return (
        len(set(orb)) == len(orb) == tr.tail + tr.cycle
        and tr.cycle >= 1
        and orb[0] == cs.x0
        and all(cs.f[orb[k]] == orb[k + 1] for k in range(len(orb) - 1))
        and cs.f[orb[-1]] == orb[tr.tail]
    )


def suite_counting(max_n: int, cap: int) -> list[CheckReport]:
    out = []
    for n in range(1, min(max_n, 4) + 1):

        def check(cs):
            if not trajectory_ok(cs):
                return {"system": cs.to_dict(), "reason": "trajectory"}
            if counting.is_minimal(cs) != (len(counting.reachable(cs)) == cs.n):
                return {"system": cs.to_dict(), "reason": "minimal"}
            if counting.is_standard(cs):
                return {"system": cs.to_dict(), "reason": "finite standard system"}
            return None

        out.append(_first_failure(f"systems[{n}]", counting.all_systems(n), check))
    return out


def minimal_structure(cs: CountingSystem) -> dict | None:
    """Counterexample dict if ``cs`` violates any end-point fact, else None."""
    z = minimal.end_point(cs)
    if minimal.z_minimal_points(cs) != [z]:
        return {"reason": "end-point not the unique z-minimal point"}
    if not minimal.endpoint_bijection_check(cs):
        return {"reason": "f not bijective off the end-point"}
    if any(cs.f[x] == x for x in range(cs.n) if x != z):
        return {"reason": "fixed point other than the end-point"}
    bij = counting.is_bijective(cs)
    if (cs.f[z] == cs.x0) != bij:
        return {"reason": "f(z) = x0 iff f bijective"}
    if cs.f[z] != cs.x0 and (counting.is_injective(cs) or cs.x0 in cs.f):
        return {"reason": "f(z) != x0 case"}
    for w in range(cs.n):
        m = minimal.modify_end(cs, w)
        if not counting.is_minimal(m) or minimal.end_point(m) != z:
            return {"reason": "modify_end", "w": w}
    return None


def suite_minimal(max_n: int, cap: int) -> list[CheckReport]:
    out = []
    for n in range(1, min(max_n, 5) + 1):
        out.append(
            _first_failure(
                f"minimal[{n}]",
                counting.minimal_systems(n, labeled=True),
                lambda cs: None if (bad := minimal_structure(cs)) is None else {"system": cs.to_dict(), **bad},
            )
        )
    return out


def suite_morphism(max_n: int, cap: int) -> list[CheckReport]:
    k = min(max_n, 4)
    sources = [cs for n in range(1, k + 1) for cs in counting.minimal_systems(n, labeled=True)]
    targets = [cs for n in range(1, k + 1) for cs in counting.all_systems(n)]

    def check(pair):
        src, dst = pair
        found = counting.find_morphism(src, dst)
        brute = oracle.morphisms_by_enumeration(src, dst)
        if found is None:
            return None if not brute else {"src": src.to_dict(), "dst": dst.to_dict()}
        h, unique = found
        if [h.values] != brute or unique != (len(brute) == 1):
            return {"src": src.to_dict(), "dst": dst.to_dict()}
        return None

    return [_first_failure("morphism", itertools.product(sources, targets), check)]


def shapes(max_n: int):
    for n in range(1, max_n + 1):
        yield from counting.minimal_systems(n)


def suite_arith(max_n: int, cap: int) -> list[CheckReport]:
    out = []
    for cs in shapes(min(max_n, 6)):
        tag = f"t={cs.trajectory.tail},l={cs.trajectory.cycle}"
        for law in arith.Law:
            r = arith.check_law(cs, law)
            if law is arith.Law.CANCELLATION:
                ok = r.passed == counting.is_injective(cs) == (cs.trajectory.tail == 0)
            elif law is arith.Law.GROUP:
                ok = r.passed == counting.is_bijective(cs) == (cs.trajectory.tail == 0)
            else:
                ok = r.passed
            out.append(report(f"{law.value}[{tag}]", r.instances_checked, None if ok else r.to_dict()))
    return out


def arith_matches_counting(cs: CountingSystem, universe_size: int = 10) -> CheckReport:
    """Coordinate arithmetic against literal counting of sets.

    Sums: every disjoint pair of subsets of a ``universe_size`` universe.
    Products: paired atoms over subsets of a 5-atom universe.
    Powers: enumerated function spaces with base and exponent sets of size <= 3.
    """
    U = oracle.universe(universe_size)
    table = oracle.iterator_table(cs, U)
    checked = 0
    for labels in itertools.product((0, 1, 2), repeat=len(U)):
        A = make_set(u for u, lab in zip(U, labels) if lab == 1)
        B = make_set(u for u, lab in zip(U, labels) if lab == 2)
        checked += 1
        if arith.add(cs, table[A], table[B]) != table[A.union(B)]:
            return report("arith_vs_counting", checked, {"op": "add", "A": str(A), "B": str(B)})
    small = [A for A in table if A.issubset(oracle.universe(min(universe_size, 5)))]
    for A, B in itertools.product(small, repeat=2):
        checked += 1
        if arith.mul(cs, table[A], table[B]) != oracle.count(cs, oracle.product_set(A, B)):
            return report("arith_vs_counting", checked, {"op": "mul", "A": str(A), "B": str(B)})
    bases = [A for A in table if len(A) <= 3 and A.issubset(oracle.universe(3))]
    exponents = [make_set(range(100, 100 + k)) for k in range(4)]
    for A, B in itertools.product(bases, exponents):
        checked += 1
        e = natmodel.BoundedNat(len(B))
        if arith.power(cs, table[A], e) != oracle.count(cs, oracle.map_space(B, A)):
            return report("arith_vs_counting", checked, {"op": "pow", "A": str(A), "B": str(B)})
    return report("arith_vs_counting", checked)


def suite_counting_laws(max_n: int, cap: int) -> list[CheckReport]:
    out = []
    for cs in shapes(min(max_n, 5)):
        tag = f"t={cs.trajectory.tail},l={cs.trajectory.cycle}"
        for law, size in (("beta", 6), ("delta", 5), ("exp", 4)):
            r = oracle.check_counting_law(cs, law, size)
            r.law = f"{law}[{tag}]"
            out.append(r)
    return out


def monoid_tables_agree(cs: CountingSystem) -> dict | None:
    """Counterexample if evaluation at ``x0`` is not a bijection from the iterates
    onto the carrier, or if the tables pulled back from the monoid differ from
    the coordinate tables."""
    elems = monoid.monoid_elements(cs)
    inv = {monoid.phi(cs, u): u for u in elems}
    if not len(elems) == len(inv) == cs.trajectory.length == cs.n:
        return {"system": cs.to_dict(), "size": len(elems)}
    X = range(cs.n)
    if [[monoid.phi(cs, monoid.compose(inv[x], inv[y])) for y in X] for x in X] != arith.cayley_table(cs, "add"):
        return {"system": cs.to_dict(), "op": "add"}
    if [[monoid.phi(cs, monoid.diamond(cs, inv[x], inv[y])) for y in X] for x in X] != arith.cayley_table(cs, "mul"):
        return {"system": cs.to_dict(), "op": "mul"}
    return None


def suite_monoid(max_n: int, cap: int) -> list[CheckReport]:
    out = []
    for cs in shapes(min(max_n, 6)):
        r = monoid.check_monoid_iso(cs)
        r.law = f"monoid_iso[t={cs.trajectory.tail},l={cs.trajectory.cycle}]"
        out.append(r)
    for n in range(1, min(max_n, 6) + 1):
        out.append(_first_failure(f"monoid_tables[{n}]", counting.minimal_systems(n, labeled=True), monoid_tables_agree))
    return out


def suite_natmodel(max_n: int, cap: int) -> list[CheckReport]:
    out = [natmodel.check_completeness(min(cap, 16)), natmodel.check_standard_below_cap(cap)]

    def bracket_check(k):
        n = natmodel.BoundedNat(k, cap)
        b = natmodel.bracket(n)
        if len(b) != k or k in b:
            return {"k": k}
        if k < cap and natmodel.bracket(natmodel.successor(n)) != b.add(k):
            return {"k": k}
        return None

    out.append(_first_failure("bracket", range(min(cap, 64) + 1), bracket_check))

    def sharp_check(k):
        A = make_set(range(100, 100 + k))
        m = natmodel.nat_sharp(A, cap)
        if bijection_exists(A, natmodel.bracket(m)) is None:
            return {"size": k}
        for cs in FIXTURES.values():
            if counting.sharp(cs, A) != natmodel.nat_recursion(cs, m):
                return {"size": k, "system": cs.to_dict()}
        return None

    out.append(_first_failure("bracket_count", range(min(cap, 8) + 1), sharp_check))
    targets = [cs for n in range(1, min(max_n, 4) + 1) for cs in counting.all_systems(n)]
    out.append(
        _first_failure(
            "recursion",
            targets,
            lambda cs: None if natmodel.check_recursion_uniqueness(cs, min(cap, 32)).passed else cs.to_dict(),
        )
    )
    return out


SUITES: dict[str, Callable[[int, int], list[CheckReport]]] = {
    "selfmaps": suite_selfmaps,
    "inductive": suite_inductive,
    "tarski": suite_tarski,
    "iterator": suite_iterator,
    "counting": suite_counting,
    "minimal": suite_minimal,
    "morphism": suite_morphism,
    "arith": suite_arith,
    "counting-laws": suite_counting_laws,
    "monoid": suite_monoid,
    "natmodel": suite_natmodel,
}


def run(suite: str, max_n: int, cap: int = natmodel.DEFAULT_CAP) -> list[CheckReport]:
    if suite == "all":
        return [r for fn in SUITES.values() for r in fn(max_n, cap)]
    return SUITES[suite](max_n, cap)
