"""Exhaustive cross-checks between the polytope side and the algebra side."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .combinat import IndexSetKind, enumerate_index_set, is_compatible_collection
from .orders import build_poset, hasse, is_lattice, orders_coincide
from .polytope import PolytopeSpec, internal_simplices
from .reptheory import (
    Framework,
    green_data,
    green_poset,
    hst2_by_perp,
    is_tilting_state,
    left_mutations,
    odd_spec,
    perp,
    state_of,
    summand_set,
)
from .triangulation import (
    Side,
    TupleFamily,
    apply_flip,
    boundary_triangulation,
    increasing_flips,
    revert_flip,
    triangulation_from_tuples,
    upper_set_tuples,
)


@dataclass
class Check:
    name: str
    passed: bool | None  # None: informational only
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        status = "info" if self.passed is None else ("pass" if self.passed else "fail")
        return {"check": self.name, "status": status, **self.detail}


def _flip_checks(spec: PolytopeSpec) -> list[Check]:
    poset = build_poset(spec)
    bad = None
    for t in poset.elements:
        for event in increasing_flips(t):
            if revert_flip(apply_flip(t, event), event) != t:
                bad = {"triangulation": poset.index[t], "support": list(event.support)}
                break
        if bad:
            break
    checks = [Check("flip_involution", bad is None, {"counterexample": bad} if bad else {})]
    rel1, rel2 = poset.hst1, poset.hst2
    checks.append(Check("hst1_partial_order", rel1.is_partial_order()))
    checks.append(Check("hst2_partial_order", rel2.is_partial_order()))
    lo, hi = poset.bottom, poset.top
    bounded = (rel1.minimum(), rel1.maximum(), rel2.minimum(), rel2.maximum()) == (lo, hi, lo, hi)
    checks.append(Check("bounds", bounded, {"bottom": lo, "top": hi}))
    return checks


def check_polytope(spec: PolytopeSpec) -> list[Check]:
    """Every applicable check for one cyclic polytope."""
    poset = build_poset(spec)
    checks = [Check("enumeration", True, {"triangulations": len(poset.elements)})]
    checks += _flip_checks(spec)
    comparison = orders_coincide(spec)
    checks.append(Check("first_order_in_second", True))
    detail = {"counterexample": list(comparison.counterexample)} if comparison.counterexample else {}
    checks.append(Check("orders_equal", comparison.coincide, detail))
    lattice_claimed = spec.delta in (2, 3)
    for name, rel in (("hst1_lattice", poset.hst1), ("hst2_lattice", poset.hst2)):
        report = is_lattice(rel)
        detail = {"lattice": report.is_lattice}
        if report.witness:
            detail["witness"] = list(report.witness)
        checks.append(Check(name, report.is_lattice if lattice_claimed else None, detail))
    if spec.delta % 2 == 0:
        d = spec.delta // 2
        sizes = {len(t) for t in poset.elements}
        checks.append(Check("equal_cardinality", len(sizes) == 1, {"sizes": sorted(sizes)}))
        if spec.m - 2 * d >= 1:
            checks += check_tilting(d, spec.m - 2 * d)
        if spec.m - 2 * d - 1 >= 1:
            checks += check_cluster(d, spec.m - 2 * d - 1)
    else:
        d = spec.delta // 2
        if d >= 1 and spec.m - 2 * d - 1 >= 1:
            checks += check_green(d, spec.m - 2 * d - 1)
    return checks


def _mutation_and_perp_checks(framework: Framework, d: int, n: int) -> list[Check]:
    poset = build_poset(PolytopeSpec(n + 2 * d + (framework is Framework.CLUSTER_TILTING), 2 * d))
    states = [state_of(t, framework) for t in poset.elements]
    where = {s: k for k, s in enumerate(states)}
    tag = framework.value
    valid = all(is_tilting_state(s.tuples, framework, d, n) for s in states) and len(where) == len(states)
    checks = [Check(f"{tag}_states_valid", valid, {"states": len(states)})]
    mutation_edges = set()
    for k, s in enumerate(states):
        for s2 in left_mutations(s):
            if s2 not in where:
                checks.append(Check(f"{tag}_mutation_closed", False, {"state": s.to_json()}))
                return checks
            mutation_edges.add((k, where[s2]))
    checks.append(Check(f"{tag}_covers_are_left_mutations", mutation_edges == set(poset.flip_covers)))
    perps = [set(perp(s)) for s in states]
    agree = all(
        (perps[i] <= perps[j]) == poset.hst2_leq(i, j) for i in range(len(states)) for j in range(len(states))
    )
    checks.append(Check(f"{tag}_second_order_is_perp_inclusion", agree))
    return checks


def check_tilting(d: int, n: int) -> list[Check]:
    spec = PolytopeSpec(n + 2 * d, 2 * d)
    poset = build_poset(spec)
    checks = _mutation_and_perp_checks(Framework.TILTING, d, n)
    sizes_ok = all(len(upper_set_tuples(t)) == comb(n + d - 1, d) for t in poset.elements)
    checks.append(Check("upper_set_size", sizes_ok, {"expected": comb(n + d - 1, d)}))
    compatible = all(is_compatible_collection(upper_set_tuples(t)) for t in poset.elements)
    checks.append(Check("upper_set_compatible", compatible))
    roundtrip = all(
        triangulation_from_tuples(upper_set_tuples(t), spec, TupleFamily.TILTING) == t for t in poset.elements
    )
    checks.append(Check("tuples_determine_triangulation", roundtrip))
    internal = internal_simplices(spec, d)
    prop = True
    for t, sub in zip(poset.elements, poset.submersion_sets):
        in_perp = set(perp(state_of(t, Framework.TILTING)))
        if {a for a in internal if a in in_perp} != set(sub.tuples):
            prop = False
            break
    checks.append(Check("submerged_iff_in_perp", prop))
    return checks


def check_cluster(d: int, n: int) -> list[Check]:
    spec = PolytopeSpec(n + 2 * d + 1, 2 * d)
    checks = _mutation_and_perp_checks(Framework.CLUSTER_TILTING, d, n)
    cyclic = enumerate_index_set(spec.m, d, IndexSetKind.CYCLIC_SEPARATED)
    checks.append(Check("internal_simplices_are_cyclic_index_set", list(internal_simplices(spec, d)) == cyclic))
    return checks


def check_green(d: int, n: int) -> list[Check]:
    data = green_data(d, n)
    gp = green_poset(d, n)
    odd = build_poset(odd_spec(d, n))
    checks = [
        Check(
            "green_classes_match_odd_triangulations",
            len(gp.classes) == len(odd.elements),
            {"sequences": len(data.chains), "classes": len(gp.classes), "triangulations": len(odd.elements)},
        )
    ]
    idx = [odd.index[t] for t in gp.odd_triangulations]
    checks.append(Check("odd_triangulation_bijective", sorted(idx) == list(range(len(odd.elements)))))
    bottom, top = data.states[data.poset.bottom], data.states[data.poset.top]
    ends = set(bottom.tuples) | set(top.tuples)
    sigma_ok = all(ends <= set(summand_set(g)) for g in data.sequences)
    sigma_ok &= all(len(g) == len(t) for c, t in zip(gp.classes, gp.odd_triangulations) for g in c.representatives)
    checks.append(Check("sigma_contains_projectives_and_shifts", sigma_ok))
    covers = {(idx[a], idx[b]) for a, b in gp.deformations}
    checks.append(Check("deformations_are_first_order_covers", covers == set(hasse(odd.hst1))))
    lengths_ok = all(
        len(gp.classes[b].representatives[0]) == len(gp.classes[a].representatives[0]) - 1 for a, b in gp.deformations
    )
    checks.append(Check("deformation_shortens_by_one", lengths_ok))
    k = len(idx)
    first = all(gp.leq1.leq(a, b) == odd.hst1_leq(idx[a], idx[b]) for a in range(k) for b in range(k))
    second = all(gp.leq2.leq(a, b) == odd.hst2_leq(idx[a], idx[b]) for a in range(k) for b in range(k))
    checks.append(Check("green_first_order_matches", first))
    checks.append(Check("green_second_order_matches", second))
    if d == 1:
        checks.append(Check("green_orders_equal", gp.leq1 == gp.leq2))
        checks.append(Check("green_order_lattice", is_lattice(gp.leq1).is_lattice))
    return checks


def boundary_summary(spec: PolytopeSpec) -> dict:
    return {
        "lower": [list(s) for s in boundary_triangulation(spec, Side.LOWER).simplices],
        "upper": [list(s) for s in boundary_triangulation(spec, Side.UPPER).simplices],
    }
