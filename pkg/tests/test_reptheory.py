from collections import defaultdict
from functools import lru_cache
from itertools import product
from math import comb

import pytest

from stasheff.errors import ContractViolation
from stasheff.orders import build_poset, enumerate_triangulations
from stasheff.polytope import PolytopeSpec
from stasheff.reptheory import (
    Framework,
    TiltingState,
    build_quiver,
    enumerate_green_sequences,
    ext_nonzero,
    green_classes,
    green_leq_2,
    green_poset,
    hst2_by_perp,
    is_increasing_polygonal_deformation,
    is_tilting_state,
    left_mutations,
    odd_spec,
    odd_triangulation,
    perp,
    projective_state,
    shifted_projective_state,
    state_of,
    summand_set,
    triangulation_of,
)
from stasheff.triangulation import Side, boundary_triangulation, is_triangulation

from conftest import tuples

T = Framework.TILTING
CT = Framework.CLUSTER_TILTING


def state(framework, d, n, *labels):
    return TiltingState(framework, d, n, tuples(*labels))


def test_quiver_path():
    q = build_quiver(1, 3)
    assert q.vertices == ((1,), (2,), (3,))
    assert [(a, b) for a, b, _ in q.arrows] == [((1,), (2,)), ((2,), (3,))]
    assert all(r.commute for r in q.relations)


def test_quiver_23():
    q = build_quiver(2, 3)
    assert q.vertices == tuples("13", "14", "15", "24", "25", "35")
    arrows = {(a, b) for a, b, _ in q.arrows}
    assert arrows == {tuple(tuples(x, y)) for x, y in
                      [("13", "14"), ("14", "15"), ("14", "24"), ("15", "25"), ("24", "25"), ("25", "35")]}
    zero = [r for r in q.relations if not r.commute]
    assert {r.start for r in zero} == set(tuples("13", "24"))


def test_quiver_33():
    q = build_quiver(3, 3)
    assert len(q.vertices) == 10 and q.vertices[0] == (1, 3, 5) and q.vertices[-1] == (3, 5, 7)
    assert len(q.arrows) == 12


@pytest.mark.parametrize("d, n", [(1, 4), (2, 3), (2, 4), (3, 3)])
def test_one_tag_per_two_path(d, n):
    q = build_quiver(d, n)
    out = defaultdict(list)
    for a, b, i in q.arrows:
        out[a].append((b, i))
    paths = {(a, i, j) for a, b, i in q.arrows for c, j in out[b]}
    assert paths == {(r.start, r.i, r.j) for r in q.relations}
    assert len(q.relations) == len(paths)


def test_quiver_rejects_bad_params():
    with pytest.raises(ContractViolation):
        build_quiver(0, 3)


@pytest.mark.parametrize("b, a, expected", [("246", "135", True), ("135", "246", False), ("146", "136", False)])
def test_ext_nonzero(b, a, expected):
    (bb, aa) = tuples(b, a)
    assert ext_nonzero(bb, aa) is expected


def test_is_tilting_state_examples():
    assert is_tilting_state(tuples("13", "14", "15"), T, 1, 3)
    assert not is_tilting_state(tuples("135", "246", "136", "146", "137", "147"), T, 2, 3)
    assert is_tilting_state(tuples("13", "14"), CT, 1, 2)
    assert not is_tilting_state(tuples("13", "14", "24"), CT, 1, 2)
    assert not is_tilting_state(tuples("13", "14", "16"), T, 1, 3)


def test_left_mutation_examples():
    assert state(T, 1, 3, "24", "14", "15") in left_mutations(state(T, 1, 3, "13", "14", "15"))
    s = state(T, 2, 3, "135", "136", "146", "137", "147", "157")
    assert state(T, 2, 3, "246", "136", "146", "137", "147", "157") in left_mutations(s)
    top = state_of(boundary_triangulation(PolytopeSpec(7, 4), Side.UPPER), T)
    assert left_mutations(top) == []


def test_perp_examples():
    assert perp(state(T, 1, 3, "13", "14", "15")) == tuples("13", "14", "15")
    assert perp(state(T, 1, 3, "24", "25", "15")) == tuples("13", "14", "15", "24", "25")
    big = perp(state(T, 2, 3, "135", "257", "357", "137", "147", "157"))
    assert len(big) == 8 and (2, 5, 7) in big and (3, 5, 7) in big


def test_hst2_by_perp_examples():
    assert hst2_by_perp(state(T, 1, 3, "13", "14", "15"), state(T, 1, 3, "24", "25", "15"))
    a = state(T, 2, 3, "135", "136", "146", "137", "147", "157")
    b = state(T, 2, 3, "135", "257", "357", "137", "147", "157")
    assert hst2_by_perp(a, b) and hst2_by_perp(b, b) and not hst2_by_perp(b, a)
    with pytest.raises(ContractViolation):
        hst2_by_perp(a, state(T, 1, 3, "13", "14", "15"))


def _interleaves(b, a):
    merged = [x for pair in zip(b, a) for x in pair]
    return all(x < y for x, y in zip(merged, merged[1:]))


def _perp_oracle(s):
    """Brute force over all separated tuples with interleaving checked directly."""
    m = s.n + 2 * s.d
    cands = [a for a in product(range(1, m + 1), repeat=s.d + 1)
             if all(y - x >= 2 for x, y in zip(a, a[1:]))]
    return tuple(sorted(a for a in cands if not any(_interleaves(b, a) for b in s.tuples)))


@pytest.mark.parametrize("d, n", [(1, 3), (1, 4), (2, 2), (2, 3)])
def test_perp_oracle(d, n):
    for t in enumerate_triangulations(PolytopeSpec(n + 2 * d, 2 * d)):
        s = state_of(t, T)
        assert perp(s) == _perp_oracle(s)


@pytest.mark.parametrize("framework, d, n", [(T, 1, 3), (T, 2, 3), (CT, 1, 3), (CT, 2, 2)])
def test_state_roundtrip(framework, d, n):
    m = n + 2 * d + (framework is CT)
    for t in enumerate_triangulations(PolytopeSpec(m, 2 * d)):
        s = state_of(t, framework)
        assert is_tilting_state(s.tuples, framework, d, n)
        assert triangulation_of(s) == t


def _mutation_graph(d, n):
    """States reachable by left mutation, found without consulting flips."""
    start = projective_state(d, n)
    seen, stack = {start}, [start]
    graph = {}
    while stack:
        s = stack.pop()
        graph[s] = left_mutations(s)
        for u in graph[s]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return graph


@pytest.mark.parametrize("d, n, count", [(1, 2, 2), (1, 3, 9), (1, 4, 98), (2, 2, 2), (2, 3, 42), (3, 2, 2)])
def test_green_counts_against_mutation_dp(d, n, count):
    graph = _mutation_graph(d, n)
    top = shifted_projective_state(d, n)

    @lru_cache(maxsize=None)
    def paths(s):
        return 1 if s == top else sum(paths(u) for u in graph[s])

    assert paths(projective_state(d, n)) == count
    assert len(enumerate_green_sequences(d, n)) == count


def test_a2_sequences():
    longer, shorter = enumerate_green_sequences(1, 2)
    assert longer.flips == tuples("1234", "1245", "2345") and len(longer) == 3
    assert shorter.flips == tuples("1345", "1235") and len(shorter) == 2
    assert summand_set(longer) == tuples("13", "14", "24", "25", "35")
    assert summand_set(shorter) == tuples("13", "14", "25", "35")
    spec = PolytopeSpec(5, 3)
    assert odd_triangulation(longer) == boundary_triangulation(spec, Side.LOWER)
    assert odd_triangulation(shorter) == boundary_triangulation(spec, Side.UPPER)
    assert is_increasing_polygonal_deformation(longer, shorter)
    assert not is_increasing_polygonal_deformation(shorter, longer)
    assert not is_increasing_polygonal_deformation(longer, longer)


def test_a2_classes():
    classes = green_classes(1, 2)
    assert len(classes) == 2 and all(len(c.representatives) == 1 for c in classes)
    gp = green_poset(1, 2)
    big = next(c for c in classes if len(c.sigma) == 5)
    small = next(c for c in classes if len(c.sigma) == 4)
    assert gp.green_leq_1(big, small) and green_leq_2(big, small)
    assert not gp.green_leq_1(small, big) and not green_leq_2(small, big)


GRID = [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3)]


@pytest.mark.parametrize("d, n", GRID)
def test_classes_and_odd_triangulations(d, n):
    classes = green_classes(d, n)
    odd = enumerate_triangulations(odd_spec(d, n))
    assert len(classes) == len(odd)
    ends = set(projective_state(d, n).tuples) | set(shifted_projective_state(d, n).tuples)
    images = set()
    for c in classes:
        tris = {odd_triangulation(g) for g in c.representatives}
        assert len(tris) == 1
        (t,) = tris
        images.add(t)
        for g in c.representatives:
            assert summand_set(g) == c.sigma and ends <= set(c.sigma)
            assert len(g) == len(t)
        if n + 2 * d + 1 <= 7:
            assert is_triangulation(t.simplices, t.spec)
    assert images == set(odd)


@pytest.mark.parametrize("d, n", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_deformation_predicate_matches_poset(d, n):
    gp = green_poset(d, n)
    k = len(gp.classes)
    witnessed = set()
    for a, b in product(range(k), repeat=2):
        if any(is_increasing_polygonal_deformation(g, h)
               for g in gp.classes[a].representatives for h in gp.classes[b].representatives):
            witnessed.add((a, b))
    assert witnessed == set(gp.deformations)


@pytest.mark.parametrize("d, n", GRID)
def test_green_orders_match_odd_orders(d, n):
    gp = green_poset(d, n)
    odd = build_poset(odd_spec(d, n))
    idx = [odd.index[t] for t in gp.odd_triangulations]
    for a, b in product(range(len(idx)), repeat=2):
        assert gp.leq1.leq(a, b) == odd.hst1_leq(idx[a], idx[b])
        assert gp.leq2.leq(a, b) == odd.hst2_leq(idx[a], idx[b])
    for a, b in gp.deformations:
        assert len(gp.classes[b].representatives[0]) == len(gp.classes[a].representatives[0]) - 1


def test_sequence_json():
    g = enumerate_green_sequences(1, 2)[1]
    assert g.to_json() == {
        "d": 1,
        "n": 2,
        "flips": [[1, 3, 4, 5], [1, 2, 3, 5]],
        "states": [[[1, 3], [1, 4]], [[1, 3], [3, 5]], [[2, 5], [3, 5]]],
    }
    assert len(g.states) == 3 and all(len(s.tuples) == comb(2, 1) for s in g.states)
