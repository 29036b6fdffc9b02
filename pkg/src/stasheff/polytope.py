"""Combinatorics of the cyclic polytope C(m, delta) with vertices p(i) = (i, i^2, ..., i^delta)."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Sequence

from .combinat import VertexTuple
from .errors import ContractViolation, ResourceGuardError

ORACLE_MAX_M = 12


class FacetClass(Enum):
    LOWER = "lower"
    UPPER = "upper"
    NOT_FACET = "not_facet"


@dataclass(frozen=True, order=True)
class PolytopeSpec:
    m: int
    delta: int

    def __post_init__(self):
        if not (self.delta >= 1 and self.m >= self.delta + 1):
            raise ContractViolation(f"C({self.m},{self.delta}) needs m >= delta + 1 >= 2")

    @property
    def vertices(self) -> range:
        return range(1, self.m + 1)

    def __str__(self) -> str:
        return f"C({self.m},{self.delta})"


def _check_facet_args(facet: Sequence[int], spec: PolytopeSpec) -> VertexTuple:
    y = tuple(facet)
    if len(y) != spec.delta:
        raise ContractViolation(f"a facet of {spec} has {spec.delta} vertices, got {y}")
    if any(a >= b for a, b in zip(y, y[1:])) or y[0] < 1 or y[-1] > spec.m:
        raise ContractViolation(f"{y} is not an increasing tuple in [1, {spec.m}]")
    return y


def classify_facet(facet: Sequence[int], spec: PolytopeSpec) -> FacetClass:
    """Gale's evenness rule, split by the parity of #{y in facet : y > i}.

    Lower when that count is even for every vertex i outside the facet,
    upper when it is odd for every such i.
    """
    y = _check_facet_args(facet, spec)
    ys = set(y)
    parities = {sum(1 for v in y if v > i) % 2 for i in spec.vertices if i not in ys}
    if parities == {0}:
        return FacetClass.LOWER
    if parities == {1}:
        return FacetClass.UPPER
    return FacetClass.NOT_FACET


def _hyperplane_coefficients(facet: VertexTuple) -> list[int]:
    """Coefficients c_0..c_delta of the monic polynomial prod(t - y).

    The affine functional x -> c_0 + c_1 x_1 + ... + c_delta x_delta then
    vanishes on p(y) for every y in the facet and has positive last coefficient.
    """
    coeffs = [1]
    for root in facet:
        shifted = [0] + coeffs
        for k, c in enumerate(coeffs):
            shifted[k] -= root * c
        coeffs = shifted
    return coeffs


def moment_point(t: int, delta: int) -> tuple[int, ...]:
    return tuple(t ** k for k in range(1, delta + 1))


def geometric_facet_oracle(facet: Sequence[int], spec: PolytopeSpec) -> FacetClass:
    """Classify a facet by evaluating its supporting hyperplane on the other vertices.

    Independent of the parity rule: builds the hyperplane through the lifted
    points and reads off which side every remaining vertex lies on.
    """
    y = _check_facet_args(facet, spec)
    if spec.m > ORACLE_MAX_M:
        raise ResourceGuardError(f"geometric oracle limited to m <= {ORACLE_MAX_M}, got {spec.m}")
    coeffs = _hyperplane_coefficients(y)
    ys = set(y)
    signs = set()
    for i in spec.vertices:
        if i in ys:
            continue
        point = moment_point(i, spec.delta)
        value = coeffs[0] + sum(c * x for c, x in zip(coeffs[1:], point))
        signs.add(value > 0)
    if signs == {True}:
        return FacetClass.LOWER
    if signs == {False}:
        return FacetClass.UPPER
    return FacetClass.NOT_FACET


@lru_cache(maxsize=None)
def enumerate_facets(spec: PolytopeSpec) -> tuple[tuple[VertexTuple, ...], tuple[VertexTuple, ...]]:
    """(lower facets, upper facets) of ``spec``, each lexicographically sorted."""
    lower, upper = [], []
    for y in combinations(spec.vertices, spec.delta):
        cls = classify_facet(y, spec)
        if cls is FacetClass.LOWER:
            lower.append(y)
        elif cls is FacetClass.UPPER:
            upper.append(y)
    return tuple(lower), tuple(upper)


@lru_cache(maxsize=None)
def _facet_sets(spec: PolytopeSpec) -> tuple[frozenset, ...]:
    lower, upper = enumerate_facets(spec)
    return tuple(frozenset(f) for f in lower + upper)


def is_internal_simplex(simplex: Sequence[int], spec: PolytopeSpec) -> bool:
    """True iff the simplex lies in no facet of ``spec``."""
    if len(simplex) > spec.delta + 1:
        raise ContractViolation(f"{tuple(simplex)} has more than delta + 1 vertices")
    s = set(simplex)
    return not any(s <= f for f in _facet_sets(spec))


@lru_cache(maxsize=None)
def internal_simplices(spec: PolytopeSpec, k: int) -> tuple[VertexTuple, ...]:
    """All internal k-simplices of ``spec`` in lexicographic order."""
    return tuple(a for a in combinations(spec.vertices, k + 1) if is_internal_simplex(a, spec))


@lru_cache(maxsize=None)
def lower_facet_faces(spec: PolytopeSpec, k: int) -> frozenset:
    """All k-simplices contained in some lower facet."""
    lower, _ = enumerate_facets(spec)
    return frozenset(face for f in lower for face in combinations(f, k + 1))


def simplex_volume(simplex: Sequence[int]) -> Fraction:
    """Exact volume of conv{p(a_0), ..., p(a_delta)} in dimension delta = len(simplex) - 1."""
    delta = len(simplex) - 1
    vandermonde = prod(b - a for a, b in combinations(simplex, 2))
    return Fraction(abs(vandermonde), factorial(delta))


def improperly_intersecting(s: Sequence[int], t: Sequence[int], spec: PolytopeSpec) -> bool:
    """True iff two full-dimensional simplices meet in more than their common face.

    Circuits of the moment curve are the (delta+2)-subsets, with signs
    alternating along the curve; two simplices overlap improperly exactly
    when one holds the positive part of a circuit and the other the negative.
    """
    n = spec.delta + 1
    if len(s) != n or len(t) != n:
        raise ContractViolation(f"both simplices need {n} vertices in {spec}")
    ss, ts = set(s), set(t)
    common = ss & ts
    for z in combinations(sorted(ss | ts), spec.delta + 2):
        odd, even = set(z[0::2]), set(z[1::2])
        for first, second in ((ss, ts), (ts, ss)):
            if odd <= first and even <= second and not odd <= common and not even <= common:
                return True
    return False


@lru_cache(maxsize=None)
def total_volume(spec: PolytopeSpec) -> Fraction:
    """Volume of C(m, delta), summed over the simplices of its lower triangulation."""
    if spec.m == spec.delta + 1:
        return simplex_volume(tuple(spec.vertices))
    lower_of_lift, _ = enumerate_facets(PolytopeSpec(spec.m, spec.delta + 1))
    return sum((simplex_volume(f) for f in lower_of_lift), Fraction(0))
