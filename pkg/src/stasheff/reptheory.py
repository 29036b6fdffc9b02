"""Tilting and cluster-tilting data of A_n^d as tuple collections, and d-maximal green sequences.

Modules and objects are named by their index tuples only. Every homological
predicate used here reduces to the intertwining relation.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Sequence

from .combinat import (
    IndexSetKind,
    VertexTuple,
    enumerate_index_set,
    intertwines,
    is_compatible_collection,
    sorted_tuples,
)
from .errors import ContractViolation, IntegrityError, ResourceGuardError
from .polytope import PolytopeSpec
from .relation import Relation
from .triangulation import Triangulation, TupleFamily, internal_faces, is_triangulation, upper_set_tuples
from .orders import TriangulationPoset, build_poset

DEFAULT_CHAIN_LIMIT = 10**7


class Framework(Enum):
    TILTING = "tilting"
    CLUSTER_TILTING = "cluster_tilting"


def _check_params(d: int, n: int) -> None:
    if d < 1 or n < 1:
        raise ContractViolation(f"need d >= 1 and n >= 1, got d={d}, n={n}")


# -- quiver -----------------------------------------------------------------


@dataclass(frozen=True)
class PathRelation:
    """Relation on the path A -> A+e_i -> A+e_i+e_j.

    ``commute`` means it equals the path through A+e_j (trivially so when
    i == j); otherwise the path is zero.
    """

    start: VertexTuple
    i: int
    j: int
    commute: bool


@dataclass(frozen=True)
class QuiverPresentation:
    d: int
    n: int
    vertices: tuple[VertexTuple, ...]
    arrows: tuple[tuple[VertexTuple, VertexTuple, int], ...]
    relations: tuple[PathRelation, ...]


def _shift(a: VertexTuple, i: int) -> VertexTuple:
    return a[:i] + (a[i] + 1,) + a[i + 1:]


def build_quiver(d: int, n: int) -> QuiverPresentation:
    """Q^(d,n) with the relations defining A_n^d; directions i index tuple entries from 0."""
    _check_params(d, n)
    vertices = tuple(enumerate_index_set(n + 2 * d - 2, d - 1))
    present = set(vertices)
    arrows = tuple(
        (a, _shift(a, i), i) for a in vertices for i in range(d) if _shift(a, i) in present
    )
    relations = []
    for a, b, i in arrows:
        for j in range(d):
            c = _shift(b, j)
            if c in present:
                relations.append(PathRelation(a, i, j, _shift(a, j) in present))
    return QuiverPresentation(d, n, vertices, arrows, tuple(relations))


# -- tilting and cluster-tilting states --------------------------------------


def ext_nonzero(b: Sequence[int], a: Sequence[int]) -> bool:
    """Whether the top extension group from M_B to M_A is nonzero: A intertwines B."""
    return intertwines(a, b)


@lru_cache(maxsize=None)
def universe(framework: Framework, d: int, n: int) -> tuple[VertexTuple, ...]:
    """Index tuples of the indecomposables available to a framework."""
    if framework is Framework.TILTING:
        return tuple(enumerate_index_set(n + 2 * d, d, IndexSetKind.SEPARATED))
    return tuple(enumerate_index_set(n + 2 * d + 1, d, IndexSetKind.CYCLIC_SEPARATED))


def polytope_for(framework: Framework, d: int, n: int) -> PolytopeSpec:
    """The even-dimensional cyclic polytope whose triangulations index the states."""
    return PolytopeSpec(n + 2 * d + (framework is Framework.CLUSTER_TILTING), 2 * d)


@dataclass(frozen=True)
class TiltingState:
    framework: Framework
    d: int
    n: int
    tuples: tuple[VertexTuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "tuples", sorted_tuples(self.tuples))

    def to_json(self) -> list:
        return [list(t) for t in self.tuples]


def is_tilting_state(tuples: Iterable[Sequence[int]], framework: Framework, d: int, n: int) -> bool:
    items = sorted_tuples(tuples)
    if len(items) != comb(n + d - 1, d):
        return False
    if any(len(t) != d + 1 for t in items):
        return False
    if not set(items) <= set(universe(framework, d, n)):
        return False
    return is_compatible_collection(items)


def state_of(t: Triangulation, framework: Framework) -> TiltingState:
    """The state attached to an even-dimensional triangulation."""
    d = t.spec.delta // 2
    n = t.spec.m - 2 * d - (framework is Framework.CLUSTER_TILTING)
    if t.spec != polytope_for(framework, d, n) or n < 1:
        raise ContractViolation(f"{t.spec} does not carry {framework.value} states")
    tuples = upper_set_tuples(t) if framework is Framework.TILTING else internal_faces(t, d)
    return TiltingState(framework, d, n, tuples)


def triangulation_of(state: TiltingState) -> Triangulation:
    from .triangulation import triangulation_from_tuples

    family = TupleFamily.TILTING if state.framework is Framework.TILTING else TupleFamily.CLUSTER
    return triangulation_from_tuples(state.tuples, polytope_for(state.framework, state.d, state.n), family)


def left_mutations(state: TiltingState) -> list[TiltingState]:
    """States obtained by exchanging one summand A for some B with A intertwining B."""
    current = set(state.tuples)
    out = []
    for a in state.tuples:
        rest = current - {a}
        for b in universe(state.framework, state.d, state.n):
            if b in current or not intertwines(a, b):
                continue
            if all(not intertwines(b, c) and not intertwines(c, b) for c in rest):
                candidate = rest | {b}
                if is_tilting_state(candidate, state.framework, state.d, state.n):
                    out.append(TiltingState(state.framework, state.d, state.n, tuple(candidate)))
    return sorted(out, key=lambda s: s.tuples)


def perp(state: TiltingState) -> tuple[VertexTuple, ...]:
    """Left perpendicular category: indecomposables X = M_A with no summand M_B where B intertwines A."""
    return tuple(
        a for a in universe(state.framework, state.d, state.n) if not any(intertwines(b, a) for b in state.tuples)
    )


def hst2_by_perp(state: TiltingState, other: TiltingState) -> bool:
    if (state.framework, state.d, state.n) != (other.framework, other.d, other.n):
        raise ContractViolation("states belong to different algebras or frameworks")
    return set(perp(state)) <= set(perp(other))


# -- green sequences ----------------------------------------------------------


@dataclass(frozen=True)
class GreenSequence:
    d: int
    n: int
    states: tuple[TiltingState, ...]
    flips: tuple[VertexTuple, ...]

    def __len__(self) -> int:
        """Number of mutations."""
        return len(self.flips)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "flips": [list(f) for f in self.flips],
            "states": [s.to_json() for s in self.states],
        }


def summand_set(g: GreenSequence) -> tuple[VertexTuple, ...]:
    """Sigma(G): every summand occurring along the sequence."""
    return sorted_tuples(t for s in g.states for t in s.tuples)


def odd_spec(d: int, n: int) -> PolytopeSpec:
    return PolytopeSpec(n + 2 * d + 1, 2 * d + 1)


def odd_triangulation(g: GreenSequence) -> Triangulation:
    """Triangulation of C(n+2d+1, 2d+1) whose simplices are the flip supports of ``g``."""
    spec = odd_spec(g.d, g.n)
    t = Triangulation(spec, g.flips)
    if len(t) != len(g.flips) or not is_triangulation(t.simplices, spec):
        raise IntegrityError(f"flip supports {g.flips} do not triangulate {spec}")
    return t


def _maximal_chains(poset: TriangulationPoset, limit: int) -> list[tuple[int, ...]]:
    top = poset.top
    succ = poset.successors
    chains: list[tuple[int, ...]] = []
    path = [poset.bottom]

    def walk():
        i = path[-1]
        if i == top:
            if len(chains) >= limit:
                raise ResourceGuardError(f"more than {limit} maximal chains in {poset.spec}")
            chains.append(tuple(path))
            return
        for j, _ in succ[i]:
            path.append(j)
            walk()
            path.pop()

    walk()
    return chains


@dataclass
class GreenData:
    """Maximal green sequences of A_n^d together with their chains in the flip poset."""

    d: int
    n: int
    poset: TriangulationPoset
    chains: list[tuple[int, ...]]

    @cached_property
    def states(self) -> tuple[TiltingState, ...]:
        return tuple(state_of(t, Framework.CLUSTER_TILTING) for t in self.poset.elements)

    def sequence(self, chain: Sequence[int]) -> GreenSequence:
        flips = tuple(self.poset.flip_covers[(a, b)] for a, b in zip(chain, chain[1:]))
        return GreenSequence(self.d, self.n, tuple(self.states[i] for i in chain), flips)

    @cached_property
    def sequences(self) -> list[GreenSequence]:
        return [self.sequence(c) for c in self.chains]


_green_cache: dict[tuple[int, int], GreenData] = {}


def green_data(d: int, n: int, limit: int = DEFAULT_CHAIN_LIMIT) -> GreenData:
    _check_params(d, n)
    key = (d, n)
    if key not in _green_cache:
        poset = build_poset(polytope_for(Framework.CLUSTER_TILTING, d, n))
        _green_cache[key] = GreenData(d, n, poset, _maximal_chains(poset, limit))
    data = _green_cache[key]
    if len(data.chains) > limit:
        raise ResourceGuardError(f"{len(data.chains)} green sequences for (d, n) = {key}, above limit {limit}")
    return data


def enumerate_green_sequences(d: int, n: int, limit: int = DEFAULT_CHAIN_LIMIT) -> list[GreenSequence]:
    """All d-maximal green sequences of A_n^d, in lexicographic order of their flip supports."""
    return green_data(d, n, limit).sequences


def projective_state(d: int, n: int) -> TiltingState:
    data = green_data(d, n)
    return data.states[data.poset.bottom]


def shifted_projective_state(d: int, n: int) -> TiltingState:
    data = green_data(d, n)
    return data.states[data.poset.top]


def is_increasing_polygonal_deformation(g: GreenSequence, h: GreenSequence) -> bool:
    """True iff ``h`` replaces a (d+2)-step stretch of ``g`` by d+1 steps between the same states."""
    if (g.d, g.n) != (h.d, h.n):
        raise ContractViolation("sequences belong to different algebras")
    d = g.d
    if len(g.states) != len(h.states) + 1:
        return False
    for i in range(len(h.states) - d - 1):
        if g.states[: i + 1] != h.states[: i + 1]:
            break
        if g.states[i + d + 2:] != h.states[i + d + 1:]:
            continue
        long_side = set(g.states[i + 1: i + d + 2])
        short_side = set(h.states[i + 1: i + d + 1])
        if not long_side & short_side:
            return True
    return False


@dataclass(frozen=True)
class GreenClass:
    sigma: tuple[VertexTuple, ...]
    representatives: tuple[GreenSequence, ...]

    def to_json(self) -> dict:
        return {
            "sigma": [list(t) for t in self.sigma],
            "size": len(self.representatives),
            "odd_triangulation": [list(s) for s in odd_triangulation(self.representatives[0]).simplices],
        }


def green_leq_2(c: GreenClass, other: GreenClass) -> bool:
    """[G] <= [G'] in the second order: Sigma(G) contains Sigma(G')."""
    return set(c.sigma) >= set(other.sigma)


@dataclass
class GreenPoset:
    """Equivalence classes of green sequences with both orders."""

    d: int
    n: int
    classes: tuple[GreenClass, ...]
    deformations: frozenset[tuple[int, int]]

    @cached_property
    def leq1(self) -> Relation:
        return Relation.from_covers(len(self.classes), self.deformations)

    @cached_property
    def leq2(self) -> Relation:
        return Relation.from_predicate(len(self.classes), lambda i, j: green_leq_2(self.classes[i], self.classes[j]))

    def green_leq_1(self, c: GreenClass, other: GreenClass) -> bool:
        return self.leq1.leq(self.classes.index(c), self.classes.index(other))

    @cached_property
    def odd_triangulations(self) -> tuple[Triangulation, ...]:
        return tuple(odd_triangulation(c.representatives[0]) for c in self.classes)


def green_classes(d: int, n: int, limit: int = DEFAULT_CHAIN_LIMIT) -> list[GreenClass]:
    """Partition of the green sequences by Sigma, sorted by Sigma."""
    grouped: dict[tuple, list[GreenSequence]] = defaultdict(list)
    for g in enumerate_green_sequences(d, n, limit):
        grouped[summand_set(g)].append(g)
    return [GreenClass(sigma, tuple(grouped[sigma])) for sigma in sorted(grouped)]


_green_poset_cache: dict[tuple[int, int], GreenPoset] = {}


def green_poset(d: int, n: int, limit: int = DEFAULT_CHAIN_LIMIT) -> GreenPoset:
    """Classes of green sequences with the deformation relation between them.

    For each representative and each stretch of d+2 mutations, every
    (d+1)-step route between the stretch's ends with no state in common is
    tried; the resulting sequence's class is a deformation target.
    """
    key = (d, n)
    if key in _green_poset_cache:
        return _green_poset_cache[key]
    data = green_data(d, n, limit)
    classes = green_classes(d, n, limit)
    class_of = {c.sigma: k for k, c in enumerate(classes)}
    succ = data.poset.successors
    sigma_of_chain = {}
    for chain, g in zip(data.chains, data.sequences):
        sigma_of_chain[chain] = class_of[summand_set(g)]

    def routes(start: int, end: int, steps: int):
        if steps == 0:
            if start == end:
                yield ()
            return
        for j, _ in succ[start]:
            for rest in routes(j, end, steps - 1):
                yield (j,) + rest

    edges = set()
    for chain, k in sigma_of_chain.items():
        for i in range(len(chain) - d - 2):
            start, end = chain[i], chain[i + d + 2]
            interior = set(chain[i + 1: i + d + 2])
            for route in routes(start, end, d + 1):
                if set(route[:-1]) & interior:
                    continue
                target = chain[: i + 1] + route + chain[i + d + 3:]
                edges.add((k, sigma_of_chain[target]))
    poset = GreenPoset(d, n, tuple(classes), frozenset(edges))
    _green_poset_cache[key] = poset
    return poset
