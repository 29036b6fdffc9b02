"""Triangulations of cyclic polytopes as sets of vertex tuples, and bistellar flips."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .combinat import VertexTuple, sorted_tuples
from .errors import ContractViolation, IntegrityError
from .polytope import (
    PolytopeSpec,
    enumerate_facets,
    improperly_intersecting,
    internal_simplices,
    lower_facet_faces,
    simplex_volume,
    total_volume,
)


class Side(Enum):
    LOWER = "lower"
    UPPER = "upper"


class TupleFamily(Enum):
    """Which tuple data determines an even-dimensional triangulation."""

    TILTING = "tilting"  # d-simplices in no lower facet, e(T)
    CLUSTER = "cluster"  # internal d-simplices


@dataclass(frozen=True)
class Triangulation:
    spec: PolytopeSpec
    simplices: tuple[VertexTuple, ...]
    _members: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        simplices = sorted_tuples(self.simplices)
        size = self.spec.delta + 1
        for s in simplices:
            if len(s) != size or s[0] < 1 or s[-1] > self.spec.m:
                raise ContractViolation(f"{s} is not a {self.spec.delta}-simplex of {self.spec}")
        object.__setattr__(self, "simplices", simplices)
        object.__setattr__(self, "_members", frozenset(simplices))

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self._members

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self):
        return iter(self.simplices)

    def to_json(self) -> dict:
        return {"m": self.spec.m, "delta": self.spec.delta, "simplices": [list(s) for s in self.simplices]}

    @classmethod
    def from_json(cls, data: dict) -> "Triangulation":
        return cls(PolytopeSpec(data["m"], data["delta"]), tuple(tuple(s) for s in data["simplices"]))


@dataclass(frozen=True)
class FlipEvent:
    """An increasing bistellar flip supported on the (delta+2)-tuple ``support``."""

    support: VertexTuple
    removed: tuple[VertexTuple, ...]
    added: tuple[VertexTuple, ...]

    @classmethod
    def on(cls, support: Sequence[int]) -> "FlipEvent":
        lower, upper = circuit_halves(tuple(support))
        return cls(tuple(support), lower, upper)


def circuit_halves(support: VertexTuple) -> tuple[tuple[VertexTuple, ...], tuple[VertexTuple, ...]]:
    """Lower and upper triangulations of C(support, len(support) - 2).

    These are the lower and upper facets of the simplex on ``support``:
    dropping the vertex at 1-based position j gives a lower facet exactly
    when len(support) - j is even.
    """
    n = len(support)
    lower, upper = [], []
    for j in range(1, n + 1):
        face = support[: j - 1] + support[j:]
        (lower if (n - j) % 2 == 0 else upper).append(face)
    return tuple(sorted(lower)), tuple(sorted(upper))


def boundary_triangulation(spec: PolytopeSpec, side: Side) -> Triangulation:
    """Lower or upper triangulation: the projection of lower/upper facets of C(m, delta+1)."""
    if spec.m == spec.delta + 1:
        return Triangulation(spec, (tuple(spec.vertices),))
    lower, upper = enumerate_facets(PolytopeSpec(spec.m, spec.delta + 1))
    return Triangulation(spec, lower if side is Side.LOWER else upper)


def is_triangulation(simplices: Iterable[Sequence[int]], spec: PolytopeSpec) -> bool:
    """Pairwise proper intersections plus exact volume equal to that of C(m, delta)."""
    items = sorted_tuples(simplices)
    for s in items:
        if len(s) != spec.delta + 1:
            raise ContractViolation(f"{s} is not a {spec.delta}-simplex")
    if sum((simplex_volume(s) for s in items), Fraction(0)) != total_volume(spec):
        return False
    return not any(improperly_intersecting(s, t, spec) for s, t in combinations(items, 2))


def _candidate_supports(t: Triangulation) -> list[VertexTuple]:
    out = set()
    for s in t.simplices:
        members = set(s)
        for x in t.spec.vertices:
            if x not in members:
                out.add(tuple(sorted(members | {x})))
    return sorted(out)


def increasing_flips(t: Triangulation) -> list[FlipEvent]:
    """All increasing flips of ``t``, sorted by support."""
    events = []
    for h in _candidate_supports(t):
        event = FlipEvent.on(h)
        if all(s in t for s in event.removed):
            events.append(event)
    return events


def decreasing_flips(t: Triangulation) -> list[FlipEvent]:
    """Flips F with ``t`` containing F.added; reverting F lowers ``t``."""
    events = []
    for h in _candidate_supports(t):
        event = FlipEvent.on(h)
        if all(s in t for s in event.added):
            events.append(event)
    return events


def apply_flip(t: Triangulation, event: FlipEvent) -> Triangulation:
    if not all(s in t for s in event.removed) or FlipEvent.on(event.support) != event:
        raise ContractViolation(f"flip on {event.support} does not apply to this triangulation")
    kept = [s for s in t.simplices if s not in set(event.removed)]
    return Triangulation(t.spec, tuple(kept) + event.added)


def revert_flip(t: Triangulation, event: FlipEvent) -> Triangulation:
    """Apply the decreasing flip on ``event.support``."""
    if not all(s in t for s in event.added) or FlipEvent.on(event.support) != event:
        raise ContractViolation(f"decreasing flip on {event.support} does not apply")
    kept = [s for s in t.simplices if s not in set(event.added)]
    return Triangulation(t.spec, tuple(kept) + event.removed)


def _half_dimension(spec: PolytopeSpec) -> int:
    if spec.delta % 2:
        raise ContractViolation(f"{spec} is odd-dimensional")
    return spec.delta // 2


def faces(t: Triangulation, k: int) -> set[VertexTuple]:
    """All k-faces of simplices of ``t``."""
    return {f for s in t.simplices for f in combinations(s, k + 1)}


def upper_set_tuples(t: Triangulation) -> tuple[VertexTuple, ...]:
    """e(T): the d-faces of an even-dimensional triangulation lying in no lower facet."""
    d = _half_dimension(t.spec)
    in_lower = lower_facet_faces(t.spec, d)
    return tuple(sorted(f for f in faces(t, d) if f not in in_lower))


def internal_faces(t: Triangulation, k: int) -> tuple[VertexTuple, ...]:
    if not 0 <= k <= t.spec.delta:
        raise ContractViolation(f"face dimension {k} outside [0, {t.spec.delta}]")
    internal = set(internal_simplices(t.spec, k))
    return tuple(sorted(f for f in faces(t, k) if f in internal))


def tuple_data(t: Triangulation, family: TupleFamily) -> tuple[VertexTuple, ...]:
    if family is TupleFamily.TILTING:
        return upper_set_tuples(t)
    return internal_faces(t, _half_dimension(t.spec))


@lru_cache(maxsize=None)
def _tuple_index(spec: PolytopeSpec, family: TupleFamily) -> dict:
    from .orders import enumerate_triangulations

    index: dict = {}
    for t in enumerate_triangulations(spec):
        index.setdefault(tuple_data(t, family), []).append(t)
    return index


def triangulation_from_tuples(
    tuples: Iterable[Sequence[int]], spec: PolytopeSpec, family: TupleFamily = TupleFamily.TILTING
) -> Triangulation:
    """The unique even-dimensional triangulation with the given e(T) (or internal d-faces)."""
    _half_dimension(spec)
    key = sorted_tuples(tuples)
    matches = _tuple_index(spec, family).get(key, [])
    if len(matches) != 1:
        raise IntegrityError(f"{len(matches)} triangulations of {spec} carry {family.value} data {key}")
    return matches[0]
