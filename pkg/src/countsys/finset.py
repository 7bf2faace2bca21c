"""Explicit finite sets and mappings over a universe of integer atoms.

Everything here is immutable.  A ``FiniteSet`` keeps its atom ids sorted so
that textual forms and enumeration orders are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import InvalidAtomError, TooLargeError

POWER_SET_LIMIT = 20
SEARCH_LIMIT = 10
MAP_ENUM_LIMIT = 10**6


@dataclass(frozen=True)
class Atom:
    id: int
    label: Optional[str] = None

    def __post_init__(self):
        if self.id < 0:
            raise InvalidAtomError(f"atom id must be non-negative, got {self.id}")
        if self.label is not None and not self.label:
            raise InvalidAtomError("atom label must be nonempty when given")


@dataclass(frozen=True)
class FiniteSet:
    atoms: tuple[int, ...] = ()

    def __post_init__(self):
        atoms = tuple(self.atoms)
        if any(b <= a for a, b in zip(atoms, atoms[1:])):
            raise InvalidAtomError("atoms must be strictly increasing; use make_set")
        if atoms and atoms[0] < 0:
            raise InvalidAtomError(f"negative atom id {atoms[0]}")
        object.__setattr__(self, "atoms", atoms)

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __contains__(self, a):
        return a in self._members

    @property
    def _members(self) -> frozenset:
        # cached on first use; frozen dataclasses still own a __dict__
        try:
            return self.__dict__["_m"]
        except KeyError:
            m = frozenset(self.atoms)
            self.__dict__["_m"] = m
            return m

    def issubset(self, other: "FiniteSet") -> bool:
        return self._members <= other._members

    def is_proper_subset(self, other: "FiniteSet") -> bool:
        return len(self) < len(other) and self.issubset(other)

    def union(self, other: "FiniteSet") -> "FiniteSet":
        return make_set(self.atoms + other.atoms)

    def difference(self, other: "FiniteSet") -> "FiniteSet":
        return FiniteSet(tuple(a for a in self.atoms if a not in other))

    def isdisjoint(self, other: "FiniteSet") -> bool:
        return self._members.isdisjoint(other._members)

    def add(self, a: int) -> "FiniteSet":
        return make_set(self.atoms + (a,))

    def __str__(self):
        return "{" + ",".join(str(a) for a in self.atoms) + "}"


EMPTY = FiniteSet(())


def make_set(ids: Iterable[int]) -> FiniteSet:
    ids = list(ids)
    for a in ids:
        if a < 0:
            raise InvalidAtomError(f"negative atom id {a}")
    return FiniteSet(tuple(sorted(set(ids))))


def parse_set(text: str) -> FiniteSet:
    """Inverse of ``str(FiniteSet)``: ``"{1,3,7}"`` -> FiniteSet."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise InvalidAtomError(f"not a set literal: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return EMPTY
    return make_set(int(tok) for tok in body.split(","))


def fresh_atom(A: FiniteSet) -> Atom:
    """An atom not in ``A``: one past the largest id (0 for the empty set)."""
    return Atom(A.atoms[-1] + 1 if A.atoms else 0)


def power_set(A: FiniteSet) -> list[FiniteSet]:
    """All subsets of ``A`` in binary-counter order over the sorted atoms."""
    n = len(A)
    if n > POWER_SET_LIMIT:
        raise TooLargeError(f"power_set: |A| = {n} exceeds {POWER_SET_LIMIT}")
    atoms = A.atoms
    return [
        FiniteSet(tuple(atoms[j] for j in range(n) if mask >> j & 1))
        for mask in range(1 << n)
    ]


@dataclass(frozen=True)
class MapTable:
    """A total function ``domain -> codomain``; ``values[i]`` is the image of ``domain.atoms[i]``."""

    domain: FiniteSet
    codomain: FiniteSet
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != len(self.domain):
            raise InvalidAtomError(
                f"map has {len(values)} values for a domain of size {len(self.domain)}"
            )
        for v in values:
            if v not in self.codomain:
                raise InvalidAtomError(f"value {v} not in codomain {self.codomain}")

    @classmethod
    def from_pairs(cls, domain, codomain, pairs) -> "MapTable":
        send = dict(pairs)
        return cls(domain, codomain, tuple(send[a] for a in domain))

    @property
    def assignment(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.domain.atoms, self.values))

    def __call__(self, a: int) -> int:
        try:
            i = self.domain.atoms.index(a)
        except ValueError:
            raise InvalidAtomError(f"{a} not in domain {self.domain}") from None
        return self.values[i]

    def as_dict(self) -> dict[int, int]:
        return dict(self.assignment)

    def image(self) -> FiniteSet:
        return make_set(self.values)

    def __str__(self):
        return ", ".join(f"{a}->{b}" for a, b in self.assignment)


def identity_map(A: FiniteSet) -> MapTable:
    return MapTable(A, A, A.atoms)


def classify_map(m: MapTable) -> dict[str, bool]:
    injective = len(set(m.values)) == len(m.values)
    surjective = set(m.values) == set(m.codomain.atoms)
    return {
        "injective": injective,
        "surjective": surjective,
        "bijective": injective and surjective,
    }


def _check_search_size(A: FiniteSet, B: FiniteSet):
    if len(A) > SEARCH_LIMIT or len(B) > SEARCH_LIMIT:
        raise TooLargeError(f"search limited to sets of size <= {SEARCH_LIMIT}")


def _injective_search(A: FiniteSet, B: FiniteSet, want_surjective: bool) -> Optional[MapTable]:
    # lexicographic backtracking; the first witness found is returned
    targets = B.atoms
    used = [False] * len(targets)
    chosen: list[int] = []

    def extend(i):
        if i == len(A):
            return not want_surjective or all(used)
        if want_surjective and len(A) - i < used.count(False):
            return False
        for j, b in enumerate(targets):
            if used[j]:
                continue
            used[j] = True
            chosen.append(b)
            if extend(i + 1):
                return True
            chosen.pop()
            used[j] = False
        return False

    if extend(0):
        return MapTable(A, B, tuple(chosen))
    return None


def injection_exists(A: FiniteSet, B: FiniteSet) -> Optional[MapTable]:
    _check_search_size(A, B)
    return _injective_search(A, B, want_surjective=False)


def bijection_exists(A: FiniteSet, B: FiniteSet) -> Optional[MapTable]:
    _check_search_size(A, B)
    return _injective_search(A, B, want_surjective=True)


def count_maps(A: FiniteSet, B: FiniteSet) -> int:
    return len(B) ** len(A)


def enumerate_maps(A: FiniteSet, B: FiniteSet) -> Iterator[MapTable]:
    """Every map ``A -> B`` in lexicographic order of value tuples."""
    total = count_maps(A, B)
    if total > MAP_ENUM_LIMIT:
        raise TooLargeError(f"{total} maps exceeds the limit of {MAP_ENUM_LIMIT}")
    for values in itertools.product(B.atoms, repeat=len(A)):
        yield MapTable(A, B, values)


def all_self_maps(n: int) -> Iterator[tuple[int, ...]]:
    """Raw value tuples of every self-map of ``{0..n-1}``."""
    if n ** n > MAP_ENUM_LIMIT:
        raise TooLargeError(f"{n}^{n} self-maps exceeds the limit of {MAP_ENUM_LIMIT}")
    return itertools.product(range(n), repeat=n)


def random_set(rng, max_size: int = 12, max_id: int = 1000) -> FiniteSet:
    size = rng.randrange(max_size + 1)
    return make_set(rng.sample(range(max_id), size))
