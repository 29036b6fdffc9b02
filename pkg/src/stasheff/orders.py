"""All triangulations of a cyclic polytope with the first and second higher Stasheff-Tamari orders."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations

from .combinat import VertexTuple, intertwines
from .errors import ContractViolation, IntegrityError, ResourceGuardError
from .polytope import PolytopeSpec, improperly_intersecting, internal_simplices, simplex_volume, total_volume
from .relation import LatticeReport, Relation, hasse, is_lattice
from .triangulation import (
    Side,
    Triangulation,
    apply_flip,
    boundary_triangulation,
    decreasing_flips,
    increasing_flips,
    internal_faces,
    revert_flip,
    upper_set_tuples,
)

DEFAULT_LIMIT = 10**6

_cache: dict[PolytopeSpec, tuple[Triangulation, ...]] = {}


def enumerate_triangulations(spec: PolytopeSpec, limit: int = DEFAULT_LIMIT) -> tuple[Triangulation, ...]:
    """Every triangulation of ``spec``, in canonical (lexicographic) order.

    Breadth-first closure of the lower triangulation under increasing and
    decreasing flips. Raises ResourceGuardError once more than ``limit``
    triangulations have been found.
    """
    if spec in _cache:
        found = _cache[spec]
        if len(found) > limit:
            raise ResourceGuardError(f"{spec} has {len(found)} triangulations, above limit {limit}")
        return found
    start = boundary_triangulation(spec, Side.LOWER)
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        neighbours = [apply_flip(t, f) for f in increasing_flips(t)]
        neighbours += [revert_flip(t, f) for f in decreasing_flips(t)]
        for u in neighbours:
            if u not in seen:
                seen.add(u)
                if len(seen) > limit:
                    raise ResourceGuardError(f"{spec} has more than {limit} triangulations")
                queue.append(u)
    found = tuple(sorted(seen, key=lambda t: t.simplices))
    _cache[spec] = found
    return found


def brute_force_triangulations(spec: PolytopeSpec) -> list[Triangulation]:
    """Reference enumeration: all sets of pairwise proper simplices with full volume.

    Depth-first over simplices in lexicographic order, pruning on volume
    overflow and improper pairs. Independent of flips.
    """
    simplices = list(combinations(spec.vertices, spec.delta + 1))
    volume = {s: simplex_volume(s) for s in simplices}
    clash = {s: {t for t in simplices if t != s and improperly_intersecting(s, t, spec)} for s in simplices}
    target = total_volume(spec)
    out = []

    def extend(start: int, chosen: list, vol, blocked: set):
        if vol == target:
            out.append(Triangulation(spec, tuple(chosen)))
            return
        for k in range(start, len(simplices)):
            s = simplices[k]
            if s in blocked or vol + volume[s] > target:
                continue
            chosen.append(s)
            extend(k + 1, chosen, vol + volume[s], blocked | clash[s])
            chosen.pop()

    extend(0, [], 0, set())
    return sorted(out, key=lambda t: t.simplices)


@dataclass(frozen=True)
class SubmersionSet:
    """Submerged d-simplices (even dimension) or supermersion d-simplices (odd dimension).

    Supermersion sets are compared by reverse inclusion.
    """

    tuples: tuple[VertexTuple, ...]
    supermersion: bool = False


def submersion_set(t: Triangulation) -> SubmersionSet:
    spec = t.spec
    d = spec.delta // 2
    if spec.delta % 2:
        return SubmersionSet(internal_faces(t, d), supermersion=True)
    upper = upper_set_tuples(t)
    submerged = tuple(a for a in internal_simplices(spec, d) if not any(intertwines(b, a) for b in upper))
    return SubmersionSet(submerged)


def hst2_leq(t: Triangulation, u: Triangulation) -> bool:
    if t.spec != u.spec:
        raise ContractViolation(f"cannot compare triangulations of {t.spec} and {u.spec}")
    a, b = set(submersion_set(t).tuples), set(submersion_set(u).tuples)
    return a >= b if t.spec.delta % 2 else a <= b


@dataclass
class TriangulationPoset:
    spec: PolytopeSpec
    elements: tuple[Triangulation, ...]
    index: dict[Triangulation, int] = field(repr=False)
    flip_covers: dict[tuple[int, int], VertexTuple] = field(repr=False)

    @property
    def covers1(self) -> list[tuple[int, int]]:
        return sorted(self.flip_covers)

    @cached_property
    def hst1(self) -> Relation:
        return Relation.from_covers(len(self.elements), self.flip_covers)

    @cached_property
    def submersion_sets(self) -> tuple[SubmersionSet, ...]:
        return tuple(submersion_set(t) for t in self.elements)

    @cached_property
    def hst2(self) -> Relation:
        universe = internal_simplices(self.spec, self.spec.delta // 2)
        bit = {a: 1 << k for k, a in enumerate(universe)}
        masks = [sum(bit[a] for a in s.tuples) for s in self.submersion_sets]
        return Relation.from_inclusion(masks, reverse=bool(self.spec.delta % 2))

    @cached_property
    def successors(self) -> list[list[tuple[int, VertexTuple]]]:
        succ: list[list] = [[] for _ in self.elements]
        for (i, j), support in self.flip_covers.items():
            succ[i].append((j, support))
        for row in succ:
            row.sort(key=lambda edge: edge[1])
        return succ

    @property
    def bottom(self) -> int:
        return self.index[boundary_triangulation(self.spec, Side.LOWER)]

    @property
    def top(self) -> int:
        return self.index[boundary_triangulation(self.spec, Side.UPPER)]

    def hst1_leq(self, i: int, j: int) -> bool:
        return self.hst1.leq(i, j)

    def hst2_leq(self, i: int, j: int) -> bool:
        return self.hst2.leq(i, j)

    def to_json(self) -> dict:
        return {
            "spec": {"m": self.spec.m, "delta": self.spec.delta},
            "elements": [[list(s) for s in t.simplices] for t in self.elements],
            "hst1_covers": [list(p) for p in self.covers1],
            "hst2_leq": [list(p) for p in self.hst2.pairs()],
        }


@lru_cache(maxsize=None)
def _build_poset(spec: PolytopeSpec) -> TriangulationPoset:
    elements = _cache[spec]
    index = {t: k for k, t in enumerate(elements)}
    covers = {}
    for i, t in enumerate(elements):
        for event in increasing_flips(t):
            covers[(i, index[apply_flip(t, event)])] = event.support
    return TriangulationPoset(spec, elements, index, covers)


def build_poset(spec: PolytopeSpec, limit: int = DEFAULT_LIMIT) -> TriangulationPoset:
    enumerate_triangulations(spec, limit)
    return _build_poset(spec)


@dataclass(frozen=True)
class OrderComparison:
    coincide: bool
    counterexample: tuple[int, int] | None = None


def orders_coincide(spec: PolytopeSpec, limit: int = DEFAULT_LIMIT) -> OrderComparison:
    """Compare the first and second orders on every ordered pair.

    The inclusion of the first order in the second always holds; a failure
    there is reported as an IntegrityError rather than a counterexample.
    """
    poset = build_poset(spec, limit)
    first, second = poset.hst1, poset.hst2
    if not first <= second:
        i, j = next((i, j) for i, j in first.pairs() if not second.leq(i, j))
        raise IntegrityError(f"{spec}: T{i} <=_1 T{j} but not <=_2")
    diff = first.first_difference(second)
    return OrderComparison(diff is None, diff)


__all__ = [
    "DEFAULT_LIMIT",
    "LatticeReport",
    "OrderComparison",
    "Relation",
    "SubmersionSet",
    "TriangulationPoset",
    "brute_force_triangulations",
    "build_poset",
    "enumerate_triangulations",
    "hasse",
    "hst2_leq",
    "is_lattice",
    "orders_coincide",
    "submersion_set",
]
