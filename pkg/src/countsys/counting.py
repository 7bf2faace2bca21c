"""Counting systems ``(X, f, x0)`` on a dense carrier ``{0, ..., n-1}``.

The orbit of the base point under ``f`` is eventually periodic: ``tail``
steps lead into a cycle of length ``cycle``.  Everything else in this module
(the iterator, coordinates, normalization, morphisms) is read off that shape.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence, Union

from .errors import RequiresMinimalError, UnreachableElementError, ValidationError
from .finset import FiniteSet, MapTable, all_self_maps


@dataclass(frozen=True)
class Trajectory:
    orbit: tuple[int, ...]
    tail: int
    cycle: int

    @property
    def length(self) -> int:
        return self.tail + self.cycle


@dataclass(frozen=True)
class CountingSystem:
    n: int
    f: tuple[int, ...]
    x0: int = 0

    def __post_init__(self):
        f = tuple(self.f)
        object.__setattr__(self, "f", f)
        if self.n < 1:
            raise ValidationError(f"carrier must be nonempty, got n={self.n}")
        if len(f) != self.n:
            raise ValidationError(f"f has {len(f)} entries, expected {self.n}")
        for i, v in enumerate(f):
            if not 0 <= v < self.n:
                raise ValidationError(f"f[{i}] = {v} out of range [0,{self.n})", index=i)
        if not 0 <= self.x0 < self.n:
            raise ValidationError(f"x0 = {self.x0} out of range [0,{self.n})")

    @cached_property
    def trajectory(self) -> Trajectory:
        seen: dict[int, int] = {}
        orbit: list[int] = []
        x = self.x0
        while x not in seen:
            seen[x] = len(orbit)
            orbit.append(x)
            x = self.f[x]
        t = seen[x]
        return Trajectory(tuple(orbit), t, len(orbit) - t)

    @cached_property
    def _position(self) -> dict[int, int]:
        return {x: k for k, x in enumerate(self.trajectory.orbit)}

    @property
    def carrier(self) -> FiniteSet:
        return FiniteSet(tuple(range(self.n)))

    def to_dict(self) -> dict:
        return {"n": self.n, "f": list(self.f), "x0": self.x0}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


SCHEMA_KEYS = {"n", "f", "x0"}


def new_system(n: int, f_table: Sequence[int], x0: int = 0) -> CountingSystem:
    return CountingSystem(n, tuple(f_table), x0)


def from_dict(data: dict, extra_keys: frozenset = frozenset()) -> CountingSystem:
    if not isinstance(data, dict):
        raise ValidationError("system must be a JSON object")
    unknown = set(data) - SCHEMA_KEYS - set(extra_keys)
    if unknown:
        raise ValidationError(f"unknown fields: {sorted(unknown)}")
    missing = SCHEMA_KEYS - set(data)
    if missing:
        raise ValidationError(f"missing fields: {sorted(missing)}")
    n, f, x0 = data["n"], data["f"], data["x0"]
    if not _is_int(n) or not _is_int(x0):
        raise ValidationError("n and x0 must be integers")
    if not isinstance(f, list) or not all(_is_int(v) for v in f):
        raise ValidationError("f must be a list of integers")
    return new_system(n, f, x0)


def from_json(text: str) -> CountingSystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"invalid JSON: {e}") from None
    return from_dict(data)


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def trajectory(cs: CountingSystem) -> Trajectory:
    return cs.trajectory


def reachable(cs: CountingSystem) -> frozenset[int]:
    return frozenset(cs.trajectory.orbit)


def is_minimal(cs: CountingSystem) -> bool:
    return len(cs.trajectory.orbit) == cs.n


def minimal_part(cs: CountingSystem) -> CountingSystem:
    """The subsystem on the elements reachable from ``x0``, renumbered in increasing order."""
    keep = sorted(reachable(cs))
    index = {x: i for i, x in enumerate(keep)}
    return CountingSystem(len(keep), tuple(index[cs.f[x]] for x in keep), index[cs.x0])


def require_minimal(cs: CountingSystem, what: str = "operation"):
    if not is_minimal(cs):
        raise RequiresMinimalError(f"{what} requires a minimal counting system")


def is_injective(cs: CountingSystem) -> bool:
    return len(set(cs.f)) == cs.n


def is_bijective(cs: CountingSystem) -> bool:
    # finite carrier: injective and surjective coincide, but test both literally
    return is_injective(cs) and set(cs.f) == set(range(cs.n))


def is_standard(cs: CountingSystem) -> bool:
    return is_injective(cs) and cs.x0 not in cs.f


def normalize(cs: CountingSystem, m: int) -> int:
    """Smallest exponent ``k`` with ``f^k(x0) == f^m(x0)``."""
    if m < 0:
        raise ValueError("exponent must be non-negative")
    tr = cs.trajectory
    if m < tr.length:
        return m
    return tr.tail + (m - tr.tail) % tr.cycle


def iterate(cs: CountingSystem, k: int) -> int:
    return cs.trajectory.orbit[normalize(cs, k)]


def iterate_naive(cs: CountingSystem, k: int) -> int:
    x = cs.x0
    for _ in range(k):
        x = cs.f[x]
    return x


def sharp(cs: CountingSystem, A: FiniteSet) -> int:
    """The iterator value of ``A``; closed form ``f^|A|(x0)``."""
    return iterate(cs, len(A))


def coordinate(cs: CountingSystem, x: int) -> int:
    try:
        return cs._position[x]
    except KeyError:
        raise UnreachableElementError(f"{x} is not reachable from x0={cs.x0}") from None


def is_morphism(src: CountingSystem, dst: CountingSystem, h: Union[MapTable, Sequence[int]]) -> bool:
    """Check ``h(x0) = y0`` and ``h . f = g . h`` pointwise."""
    values = h.as_dict() if isinstance(h, MapTable) else dict(enumerate(h))
    if set(values) != set(range(src.n)):
        raise ValidationError("h must be total on the source carrier")
    if values[src.x0] != dst.x0:
        return False
    return all(values[src.f[x]] == dst.f[values[x]] for x in range(src.n))


def find_morphism(src: CountingSystem, dst: CountingSystem) -> Optional[tuple[MapTable, bool]]:
    """The morphism ``src -> dst`` if one exists.

    ``src`` must be minimal, so any morphism is pinned down on the orbit and
    is unique.  It exists iff the target's tail is no longer than the source's
    and the target's cycle length divides the source's.
    """
    require_minimal(src, "find_morphism")
    ts, td = src.trajectory, dst.trajectory
    if not (td.tail <= ts.tail and ts.cycle % td.cycle == 0):
        return None
    values = [0] * src.n
    for k, x in enumerate(ts.orbit):
        values[x] = iterate(dst, k)
    return MapTable(src.carrier, dst.carrier, tuple(values)), True


def all_systems(n: int) -> Iterator[CountingSystem]:
    """Every ``(f, x0)`` on ``{0..n-1}``: ``n^n * n`` systems."""
    for f in all_self_maps(n):
        for x0 in range(n):
            yield CountingSystem(n, f, x0)


def chain_system(tail: int, cycle: int) -> CountingSystem:
    """Canonical minimal system of shape (tail, cycle): ``0 -> 1 -> ... -> n-1 -> tail``."""
    n = tail + cycle
    if tail < 0 or cycle < 1:
        raise ValidationError("need tail >= 0 and cycle >= 1")
    return CountingSystem(n, tuple(range(1, n)) + (tail,), 0)


def minimal_systems(n: int, labeled: bool = False) -> Iterator[CountingSystem]:
    """Minimal systems on ``n`` elements.

    Unlabeled: one canonical chain per shape ``tail + cycle = n``.
    Labeled: every minimal ``(f, x0)`` on ``{0..n-1}``, generated directly as
    an orbit order of the carrier plus an arbitrary image of its last element.
    """
    if not labeled:
        for tail in range(n):
            yield chain_system(tail, n - tail)
        return
    for order in itertools.permutations(range(n)):
        for w in range(n):
            f = [0] * n
            for a, b in zip(order, order[1:]):
                f[a] = b
            f[order[-1]] = w
            yield CountingSystem(n, tuple(f), order[0])


def relabel(cs: CountingSystem, perm: Sequence[int]) -> CountingSystem:
    """Isomorphic copy of ``cs`` with element ``x`` renamed ``perm[x]``."""
    f = [0] * cs.n
    for x in range(cs.n):
        f[perm[x]] = perm[cs.f[x]]
    return CountingSystem(cs.n, tuple(f), perm[cs.x0])


def canonical_form(cs: CountingSystem) -> CountingSystem:
    """Relabel a minimal system so that orbit position ``k`` becomes element ``k``."""
    require_minimal(cs, "canonical_form")
    perm = [0] * cs.n
    for k, x in enumerate(cs.trajectory.orbit):
        perm[x] = k
    return relabel(cs, perm)


# fixtures used throughout the tests and docs
ONE = CountingSystem(1, (0,), 0)
C3 = CountingSystem(3, (1, 2, 0), 0)
S4 = CountingSystem(4, (1, 2, 3, 3), 0)
R5 = CountingSystem(5, (1, 2, 3, 4, 2), 0)
N5 = CountingSystem(5, (1, 2, 0, 4, 3), 0)

FIXTURES = {"ONE": ONE, "C3": C3, "S4": S4, "R5": R5, "N5": N5}
