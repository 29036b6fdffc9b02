from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stasheff.errors import IntegrityError, ResourceGuardError
from stasheff.orders import (
    brute_force_triangulations,
    build_poset,
    enumerate_triangulations,
    hst2_leq,
    orders_coincide,
    submersion_set,
)
from stasheff.polytope import PolytopeSpec, internal_simplices
from stasheff.relation import Relation, hasse, is_lattice
from stasheff.triangulation import Side, Triangulation, boundary_triangulation

from conftest import tuples

COUNTS = [
    (5, 2, 5), (6, 2, 14), (7, 2, 42), (8, 2, 132), (9, 2, 429),
    (5, 3, 2), (6, 3, 6), (7, 3, 25), (8, 3, 138), (9, 3, 972),
    (6, 4, 2), (7, 4, 7), (8, 4, 40), (9, 4, 357),
    (7, 5, 2), (8, 5, 8), (9, 5, 67),
    (4, 1, 4), (6, 1, 16), (4, 3, 1), (3, 2, 1),
]


@pytest.mark.parametrize("m, delta, count", COUNTS)
def test_counts(m, delta, count):
    assert len(enumerate_triangulations(PolytopeSpec(m, delta))) == count


@pytest.mark.parametrize("m, delta", [(5, 2), (6, 2), (7, 2), (5, 3), (6, 3), (6, 4), (5, 1), (6, 1)])
def test_brute_force_agrees(m, delta):
    spec = PolytopeSpec(m, delta)
    assert brute_force_triangulations(spec) == list(enumerate_triangulations(spec))


def test_guard():
    with pytest.raises(ResourceGuardError):
        enumerate_triangulations(PolytopeSpec(9, 3), limit=100)
    with pytest.raises(ResourceGuardError):
        enumerate_triangulations(PolytopeSpec(10, 2), limit=10)


def _tri(spec, *labels):
    return Triangulation(spec, tuples(*labels))


def test_submersion_examples():
    p = PolytopeSpec(5, 2)
    assert submersion_set(_tri(p, "123", "134", "145")).tuples == tuples("13", "14")
    assert submersion_set(_tri(p, "124", "234", "145")).tuples == tuples("13", "14", "24")
    assert submersion_set(_tri(p, "125", "235", "345")).tuples == tuples("13", "14", "24", "25", "35")
    c53 = PolytopeSpec(5, 3)
    assert submersion_set(boundary_triangulation(c53, Side.UPPER)).tuples == ()
    lower = submersion_set(boundary_triangulation(c53, Side.LOWER))
    assert lower.supermersion and lower.tuples == tuples("24")


def test_hst2_examples():
    p = PolytopeSpec(5, 2)
    fan = _tri(p, "123", "134", "145")
    a = _tri(p, "124", "234", "145")
    b = _tri(p, "123", "135", "345")
    assert hst2_leq(fan, a) and hst2_leq(fan, b)
    assert not hst2_leq(a, b) and not hst2_leq(b, a)
    c53 = PolytopeSpec(5, 3)
    lo, hi = boundary_triangulation(c53, Side.LOWER), boundary_triangulation(c53, Side.UPPER)
    assert hst2_leq(lo, hi) and not hst2_leq(hi, lo)


def test_pentagon_poset():
    poset = build_poset(PolytopeSpec(5, 2))
    assert len(poset.covers1) == 5
    assert poset.hst1 == poset.hst2
    assert poset.hst1.minimum() == poset.bottom and poset.hst1.maximum() == poset.top
    assert is_lattice(poset.hst1).is_lattice


def _closure_oracle(n, covers):
    reach = [[i == j for j in range(n)] for i in range(n)]
    for i, j in covers:
        reach[i][j] = True
    for k, i, j in product(range(n), repeat=3):
        if reach[i][k] and reach[k][j]:
            reach[i][j] = True
    return reach


def _lattice_oracle(n, reach):
    for a, b in product(range(n), repeat=2):
        ups = [c for c in range(n) if reach[a][c] and reach[b][c]]
        if not any(all(reach[j][c] for c in ups) for j in ups):
            return False
        downs = [c for c in range(n) if reach[c][a] and reach[c][b]]
        if not any(all(reach[c][j] for c in downs) for j in downs):
            return False
    return True


@st.composite
def dags(draw):
    n = draw(st.integers(1, 8))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return n, edges


@settings(max_examples=150, deadline=None)
@given(dags())
def test_relation_against_oracles(dag):
    n, edges = dag
    rel = Relation.from_covers(n, edges)
    reach = _closure_oracle(n, edges)
    assert all(rel.leq(i, j) == reach[i][j] for i in range(n) for j in range(n))
    assert rel.is_partial_order()
    expected_hasse = sorted(
        (i, j) for i in range(n) for j in range(n)
        if i != j and reach[i][j] and not any(k not in (i, j) and reach[i][k] and reach[k][j] for k in range(n))
    )
    assert hasse(rel) == expected_hasse
    assert Relation.from_covers(n, hasse(rel)) == rel
    assert is_lattice(rel).is_lattice == _lattice_oracle(n, reach)


def test_lattice_examples():
    diamond = Relation.from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert is_lattice(diamond).is_lattice
    bowtie = Relation.from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    report = is_lattice(bowtie)
    assert not report.is_lattice and report.witness is not None


def test_cycle_rejected():
    with pytest.raises(IntegrityError):
        Relation.from_covers(3, [(0, 1), (1, 2), (2, 0)])


@pytest.mark.parametrize("m, delta", [(m, d) for d in (1, 2, 3, 4, 5) for m in range(d + 1, 10) if (m, d) != (9, 3)])
def test_orders_coincide(m, delta):
    assert orders_coincide(PolytopeSpec(m, delta)).coincide


@pytest.mark.parametrize("m, delta", [(6, 2), (7, 3), (7, 4), (8, 3)])
def test_each_cover_is_strictly_monotone(m, delta):
    poset = build_poset(PolytopeSpec(m, delta))
    sets = [set(s.tuples) for s in poset.submersion_sets]
    for i, j in poset.covers1:
        grow, shrink = (sets[j], sets[i]) if delta % 2 == 0 else (sets[i], sets[j])
        assert shrink < grow


def test_one_flip_can_submerge_several_tuples():
    poset = build_poset(PolytopeSpec(6, 2))
    sets = [set(s.tuples) for s in poset.submersion_sets]
    gains = {len(sets[j] - sets[i]) for i, j in poset.covers1}
    assert gains == {1, 2, 3}


def _moment(t, k):
    return np.array([float(t) ** e for e in range(1, k + 1)])


def _section_height(t, x):
    delta = t.spec.delta
    for s in t.simplices:
        a = np.vstack([np.array([_moment(v, delta) for v in s]).T, np.ones(len(s))])
        lam = np.linalg.solve(a, np.append(x, 1.0))
        if (lam > -1e-9).all():
            return lam @ np.array([float(v) ** (delta + 1) for v in s])
    raise AssertionError("point outside the polytope")


def _sampled_submersion(t, rng, samples=200):
    delta = t.spec.delta
    out = []
    for a in internal_simplices(t.spec, delta // 2):
        below = True
        for w in rng.dirichlet(np.ones(len(a)), size=samples):
            x = sum(wi * _moment(v, delta) for wi, v in zip(w, a))
            h = sum(wi * float(v) ** (delta + 1) for wi, v in zip(w, a))
            if h > _section_height(t, x) + 1e-7:
                below = False
                break
        if below:
            out.append(a)
    return tuple(out)


@pytest.mark.parametrize("m, delta", [(5, 2), (6, 2), (7, 4)])
def test_submersion_matches_sampled_section(m, delta):
    rng = np.random.default_rng(7)
    for t in enumerate_triangulations(PolytopeSpec(m, delta)):
        assert submersion_set(t).tuples == _sampled_submersion(t, rng)


@pytest.mark.parametrize("m, delta", [(6, 2), (7, 2), (6, 3), (7, 3)])
def test_small_lattices(m, delta):
    poset = build_poset(PolytopeSpec(m, delta))
    assert is_lattice(poset.hst1).is_lattice and is_lattice(poset.hst2).is_lattice


def test_c94_is_not_a_lattice():
    assert not is_lattice(build_poset(PolytopeSpec(9, 4)).hst1).is_lattice


def test_poset_json():
    data = build_poset(PolytopeSpec(5, 2)).to_json()
    assert data["spec"] == {"m": 5, "delta": 2}
    assert len(data["elements"]) == 5 and len(data["hst1_covers"]) == 5
    assert len(data["hst2_leq"]) == 5 + 5 + 3
