"""Finite minimal counting systems: end-points, regular sizes and segments.

For a finite minimal system the orbit of ``x0`` covers the carrier, so the
end-point is simply the last element visited before the orbit closes.  The
subset-enumeration characterization (``is_z_minimal``) is kept alongside as
the definition the fast path is tested against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .counting import (
    CountingSystem,
    canonical_form,
    chain_system,
    is_minimal,
    require_minimal,
)
from .errors import (
    CannotRestrictError,
    NotEquinumerousError,
    TooLargeError,
    ValidationError,
)
from .finset import MapTable

Z_MINIMAL_LIMIT = 12


def end_point(cs: CountingSystem) -> int:
    require_minimal(cs, "end_point")
    return cs.trajectory.orbit[-1]


def is_z_minimal(cs: CountingSystem, z: int) -> bool:
    """The only subset containing ``x0`` with ``f(Y - {z})`` inside it is the whole carrier."""
    n = cs.n
    if n > Z_MINIMAL_LIMIT:
        raise TooLargeError(f"z-minimality enumeration limited to n <= {Z_MINIMAL_LIMIT}")
    full = (1 << n) - 1
    base = 1 << cs.x0
    for mask in range(1 << n):
        if not mask & base or mask == full:
            continue
        if all(mask >> cs.f[x] & 1 for x in range(n) if mask >> x & 1 and x != z):
            return False
    return True


def z_minimal_points(cs: CountingSystem) -> list[int]:
    return [z for z in range(cs.n) if is_z_minimal(cs, z)]


def endpoint_bijection_check(cs: CountingSystem) -> bool:
    """``f`` maps the carrier minus the end-point bijectively onto the carrier minus ``x0``."""
    z = end_point(cs)
    images = [cs.f[x] for x in range(cs.n) if x != z]
    return len(set(images)) == len(images) and set(images) == set(range(cs.n)) - {cs.x0}


def sset(cs: CountingSystem, size: int) -> frozenset[int]:
    """Counts of the subsets of any ``size``-element set."""
    require_minimal(cs, "sset")
    return frozenset(cs.trajectory.orbit[: min(size + 1, cs.trajectory.length)])


def is_sharp_regular(cs: CountingSystem, size: int) -> bool:
    require_minimal(cs, "is_sharp_regular")
    return size < cs.trajectory.length


def modify_end(cs: CountingSystem, w: int) -> CountingSystem:
    """Redirect the end-point to ``w``; all other values of ``f`` are kept."""
    z = end_point(cs)
    if not 0 <= w < cs.n:
        raise ValidationError(f"w = {w} out of range [0,{cs.n})")
    f = list(cs.f)
    f[z] = w
    return CountingSystem(cs.n, tuple(f), cs.x0)


def is_segment(cs: CountingSystem) -> bool:
    if not is_minimal(cs):
        return False
    z = end_point(cs)
    return cs.f[z] == z


@dataclass(frozen=True)
class Segment:
    system: CountingSystem
    end: int

    def __post_init__(self):
        if not is_segment(self.system):
            raise ValidationError("not a segment: needs a minimal system whose end-point is fixed")
        if end_point(self.system) != self.end:
            raise ValidationError(f"end {self.end} is not the end-point")

    @classmethod
    def of(cls, cs: CountingSystem) -> "Segment":
        if not is_minimal(cs):
            raise ValidationError("not a segment: system is not minimal")
        return cls(cs, end_point(cs))

    @property
    def size(self) -> int:
        return self.system.n

    def to_dict(self) -> dict:
        return {**self.system.to_dict(), "end": self.end}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def segment_of_size(n: int) -> Segment:
    if n < 1:
        raise ValidationError("segment size must be >= 1")
    return Segment.of(chain_system(n - 1, 1))


def _canonical_segment(f: list[int], x0: int) -> Segment:
    return Segment.of(canonical_form(CountingSystem(len(f), tuple(f), x0)))


def segment_extend(s: Segment) -> Segment:
    """Adjoin a new base point mapping onto the old base."""
    cs = s.system
    diamond = cs.n
    return _canonical_segment(list(cs.f) + [cs.x0], diamond)


def segment_restrict(s: Segment) -> Segment:
    """Drop the base point; the new base is its image."""
    cs = s.system
    if cs.n == 1:
        raise CannotRestrictError("cannot restrict a trivial segment")
    keep = [x for x in range(cs.n) if x != cs.x0]
    index = {x: i for i, x in enumerate(keep)}
    f = [index[cs.f[x]] for x in keep]
    return _canonical_segment(f, index[cs.f[cs.x0]])


def segment_join(s: Segment, u: Segment) -> Segment:
    """Run through ``s``, then jump from its end-point to the base of ``u``."""
    a, b = s.system, u.system
    offset = a.n
    f = list(a.f) + [v + offset for v in b.f]
    f[s.end] = b.x0 + offset
    return _canonical_segment(f, a.x0)


def segment_morphism(s: Segment, u: Segment) -> MapTable:
    """The unique base- and step-preserving map between equinumerous segments."""
    if s.size != u.size:
        raise NotEquinumerousError(f"segments of sizes {s.size} and {u.size}")
    values = [0] * s.size
    for x, y in zip(s.system.trajectory.orbit, u.system.trajectory.orbit):
        values[x] = y
    return MapTable(s.system.carrier, u.system.carrier, tuple(values))
