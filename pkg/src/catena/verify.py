"""The verification suite: every structural check run over the bundled corpora.

Checks are grouped by topic (lattice, ring, group, tower). Each check
counts the instances it was evaluated on and lists the ones that failed.
An exception raised while checking an instance counts as a failure of the
check that was running, so a corrupted table cannot pass silently.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from catena.analysis import (
    CorpusItem,
    MinimalType,
    analyze_catenarity,
    check_crosswise_exchange,
    check_idealization_transfer,
    check_inert_then_noninert,
    check_product_transfer,
    check_quotient_transfer,
    classify_minimal,
    enumerate_interval,
    inert_then_noninert,
    is_infra_integral,
    is_infra_integral_direct,
    is_pointwise_minimal,
    is_t_closed,
    is_t_closed_direct,
    t_closure,
    t_closure_chainwise,
)
from catena.analysis.corpus import SMALL_ORDER, named_corpus, small_corpus
from catena.errors import CatenaError, HypothesisNotMet
from catena.galois import catalog, check_d_lattice, check_group_lattice, d_lattice, field_tower, subgroup_lattice
from catena.lattice import (
    FiniteLattice,
    diamond,
    dual,
    is_distributive,
    is_distributive_bruteforce,
    is_graded,
    is_graded_bruteforce,
    is_left_modular_lattice,
    is_p_extension,
    is_supersolvable,
    length,
    loewy_series,
    pentagon,
)
from catena.rings.extension import RingExtension, shared_ideals
from catena.small_lattices import all_lattices

TOPICS = ("lattice", "ring", "group", "tower")
ORACLE_SIZE = 12  # corpus lattices up to this size go through the brute-force oracles
SUPERSOLVABLE_SIZE = 10  # corpus lattices up to this size go through the supersolvability check
IDEALIZATION_ORDER = 8  # idealize extensions with |S| up to this order (S(+)S has |S|^2 elements)
PRODUCT_FACTOR_ORDER = 4
PRODUCT_ORDER = 64
TOWERS = [(2, n) for n in range(1, 13)] + [(3, n) for n in range(1, 7)] + [(5, n) for n in range(1, 5)] + [(7, 2), (7, 3), (11, 2), (13, 2)]


@dataclass
class VerifyConfig:
    ring_order: int = SMALL_ORDER  # corpus rings S up to this order
    lattice_size: int = 10  # exhaustive lattice enumeration up to this many elements
    group_order: int = 24
    topics: tuple[str, ...] = TOPICS
    named: bool = True  # include the named larger extensions
    extra: list[tuple[str, Callable[[], RingExtension]]] = field(default_factory=list)


@dataclass
class CheckResult:
    name: str
    topic: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {
            "topic": self.topic,
            "status": "pass" if self.ok else "fail",
            "instances": self.instances,
            "failures": self.failures,
        }


@dataclass
class VerifyReport:
    config: VerifyConfig
    results: dict[str, CheckResult]
    facts: dict[str, Any]
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def failed(self) -> list[str]:
        return [k for k, r in self.results.items() if not r.ok]

    def to_json(self) -> dict[str, Any]:
        return {
            "config": {
                "ring_order": self.config.ring_order,
                "lattice_size": self.config.lattice_size,
                "group_order": self.config.group_order,
                "topics": list(self.config.topics),
                "named": self.config.named,
                "extra": [name for name, _ in self.config.extra],
            },
            "checks": {k: r.to_json() for k, r in self.results.items()},
            "facts": self.facts,
            "summary": {
                "checks": len(self.results),
                "passed": sum(r.ok for r in self.results.values()),
                "failed": self.failed(),
                "status": "pass" if self.ok else "fail",
            },
        }


class _Tally:
    def __init__(self, topic: str, results: dict[str, CheckResult]):
        self.topic = topic
        self.results = results

    def record(self, check: str, instance: str, passed: bool) -> None:
        r = self.results.setdefault(check, CheckResult(check, self.topic))
        r.instances += 1
        if not passed:
            r.failures.append(instance)

    def guard(self, check: str, instance: str, fn: Callable[[], Any]) -> Any:
        """Run fn; an exception is recorded as a failure of ``check`` and returns None."""
        try:
            return fn()
        except (CatenaError, ArithmeticError, ValueError, KeyError, IndexError) as exc:
            self.record(check, f"{instance}: {type(exc).__name__}: {exc}", False)
            return None


# -- lattices ---------------------------------------------------------------------


def _lattice_oracles(t: _Tally, L: FiniteLattice, name: str) -> None:
    g = bool(is_graded(L))
    t.record("rank_gradedness_matches_chain_enumeration", name, g == is_graded_bruteforce(L))
    d = is_distributive(L)
    t.record("distributive_matches_bruteforce", name, d == is_distributive_bruteforce(L))
    t.record("distributive_implies_graded", name, g or not d)
    D = dual(L)
    ln, lD = length(L), length(D)
    t.record(
        "dual_preserves_gradedness_distributivity_length",
        name,
        bool(is_graded(D)) == g and is_distributive(D) == d and (ln.min_maximal, ln.max_maximal) == (lD.min_maximal, lD.max_maximal),
    )
    if len(L) <= SUPERSOLVABLE_SIZE:
        _supersolvable(t, L, name)


def _supersolvable(t: _Tally, L: FiniteLattice, name: str) -> None:
    ss = is_supersolvable(L)
    t.record("supersolvable_iff_graded_and_left_modular", name, ss == (bool(is_graded(L)) and is_left_modular_lattice(L)))


def _reference_lattices(t: _Tally, facts: dict) -> None:
    M3, N5 = diamond(), pentagon()
    m3 = {
        "graded": bool(is_graded(M3)),
        "distributive": is_distributive(M3),
        "length": length(M3).max_maximal,
        "loewy_series": [str(x) for x in loewy_series(M3)],
        "p_extension": is_p_extension(M3),
    }
    facts["diamond"] = m3
    expected = {"graded": True, "distributive": False, "length": 2, "p_extension": True}
    t.record(
        "diamond_is_graded_nondistributive_length_two_p_extension",
        "M3",
        all(m3[k] == v for k, v in expected.items()) and m3["loewy_series"] == [str(M3.bottom), str(M3.top)],
    )
    t.record("pentagon_is_not_graded", "N5", not is_graded(N5))


def run_lattice(cfg: VerifyConfig, results: dict, facts: dict, corpus_lattices: Iterable[tuple[str, FiniteLattice]]) -> None:
    t = _Tally("lattice", results)
    _reference_lattices(t, facts)
    count = 0
    for L in all_lattices(cfg.lattice_size):
        count += 1
        _lattice_oracles(t, L, f"small lattice #{count} ({len(L)} elements)")
    facts["exhaustive_lattices"] = {"max_size": cfg.lattice_size, "count": count}
    seen = 0
    for name, L in corpus_lattices:
        if len(L) <= ORACLE_SIZE:
            seen += 1
            _lattice_oracles(t, L, name)
    facts["corpus_lattices_checked"] = seen


# -- rings --------------------------------------------------------------------------


def _ring_items(cfg: VerifyConfig, t: _Tally) -> list[CorpusItem]:
    items = small_corpus(cfg.ring_order) if cfg.ring_order >= 2 else []
    if cfg.named:
        items = items + named_corpus()
    for name, build in cfg.extra:
        ext = t.guard("ring_axioms", name, build)
        if ext is not None:
            t.record("ring_axioms", name, True)
            items.append(CorpusItem(name, ext))
    return items


def _classify_edges(t: _Tally, EL, name: str) -> None:
    for (a, b) in EL.lattice.covers:
        instance = f"{name} {a}<{b}"
        c = t.guard("cover_edges_have_maximal_conductor", instance, lambda: classify_minimal(EL.subring(a), EL.subring(b)))
        if c is not None:
            t.record("cover_edges_have_maximal_conductor", instance, c.type == EL.edges[a, b].type)


def _closures(t: _Tally, EL, name: str) -> None:
    ext = EL.ext
    t.record("t_closure_fixpoint_matches_chain_types", name, t_closure(EL) == t_closure_chainwise(EL))
    t.record("infra_integral_residues_match_chain_types", name, is_infra_integral(EL) == is_infra_integral_direct(ext))
    t.record("t_closed_definition_matches_chain_types", name, is_t_closed(EL) == is_t_closed_direct(ext))


def _patterns(t: _Tally, EL, name: str, facts: dict) -> None:
    for U, T, V in inert_then_noninert(EL):
        r = check_inert_then_noninert(EL, U, T, V)
        instance = f"{name} {EL.name(U)}<{EL.name(T)}<{EL.name(V)}"
        t.record("inert_then_noninert_interval_shape", instance, r.ok)
        if r.equal_conductors:
            facts.setdefault("equal_conductor_witnesses", []).append({"extension": name, "triple": instance.split()[-1], "length": r.length})
    for a, b in EL.lattice.covers:
        for c in EL.lattice.upper_covers(b):
            R, S, T = EL.subring(a), EL.subring(b), EL.subring(c)
            try:
                r = check_crosswise_exchange(EL, R, S, T)
            except HypothesisNotMet:
                continue
            t.record("crosswise_exchange_of_covers", f"{name} {a}<{b}<{c}", r.ok)


def _pointwise(t: _Tally, EL, name: str, facts: dict) -> None:
    r = is_pointwise_minimal(EL)
    if not r.pointwise_minimal:
        return
    t.record("pointwise_minimal_case_conditions", name, r.case is not None and r.conditions_hold)
    if r.case is not None and not r.non_catenarian_expected:
        t.record("pointwise_minimal_cases_one_to_three_graded", name, bool(is_graded(EL.lattice)))
    cases = facts.setdefault("pointwise_minimal_cases", {})
    cases[str(r.case)] = cases.get(str(r.case), 0) + 1


def _transfers(t: _Tally, items: list[CorpusItem], graded_by_name: dict[str, bool]) -> None:
    for it in items:
        ext = it.ext
        if not ext.is_proper:
            continue
        for J in shared_ideals(ext):
            if J.order > 1:
                inst = f"{it.name} mod {list(J.elements)}"
                r = t.guard("shared_ideal_quotient_preserves_interval", inst, lambda: check_quotient_transfer(ext, J))
                if r is not None:
                    t.record("shared_ideal_quotient_preserves_interval", inst, r.ok)
        if ext.S.order <= IDEALIZATION_ORDER:
            r = t.guard("idealization_preserves_interval", it.name, lambda: check_idealization_transfer(ext))
            if r is not None:
                t.record("idealization_preserves_interval", it.name, r.ok)
    factors = [it for it in items if it.ext.is_proper and it.ext.S.order <= PRODUCT_FACTOR_ORDER]
    partners = factors + [it for it in items if it.ext.is_proper and not graded_by_name.get(it.name, True)]
    for a in factors:
        for b in partners:
            if a.ext.S.order * b.ext.S.order <= PRODUCT_ORDER:
                inst = f"({a.name}) x ({b.name})"
                r = t.guard("product_interval_is_product_lattice", inst, lambda: check_product_transfer([a.ext, b.ext]))
                if r is not None:
                    t.record("product_interval_is_product_lattice", inst, r.ok)


def run_ring(cfg: VerifyConfig, results: dict, facts: dict, lattices: list) -> None:
    t = _Tally("ring", results)
    items = _ring_items(cfg, t)
    graded_by_name: dict[str, bool] = {}
    nongraded = []
    for it in items:
        EL = t.guard("interval_enumeration", it.name, lambda: enumerate_interval(it.ext))
        if EL is None:
            continue
        t.record("interval_enumeration", it.name, True)
        lattices.append((f"[R,S] of {it.name}", EL.lattice))
        _classify_edges(t, EL, it.name)
        rep = t.guard("catenarity_analysis", it.name, lambda: analyze_catenarity(EL))
        if rep is None:
            continue
        t.record("catenarity_analysis", it.name, True)
        for check, passed in rep.checks.items():
            t.record(check, it.name, passed)
        graded_by_name[it.name] = rep.graded
        if not rep.graded:
            nongraded.append(it.name)
        if it.ext.is_proper:
            t.guard("t_closure_fixpoint_matches_chain_types", it.name, lambda: _closures(t, EL, it.name))
            t.guard("inert_then_noninert_interval_shape", it.name, lambda: _patterns(t, EL, it.name, facts))
            t.guard("pointwise_minimal_case_conditions", it.name, lambda: _pointwise(t, EL, it.name, facts))
    _reference_extensions(t, facts)
    _transfers(t, items, graded_by_name)
    facts["extensions"] = len(items)
    facts["non_graded_extensions"] = nongraded


def _reference_extensions(t: _Tally, facts: dict) -> None:
    from catena.rings.spec import build_extension

    gf2 = {"construct": "gf", "p": 2}
    gf4 = {"construct": "gf", "p": 2, "deg": 2}
    dual_numbers = {"construct": "poly_quotient", "base": {"construct": "zmod", "n": 2}, "modulus": [0, 0, 1]}
    expected = {
        "F2 <= F4": ({"S": gf4}, MinimalType.INERT),
        "F2 <= F2^2": ({"S": {"construct": "product", "factors": [gf2, gf2]}}, MinimalType.DECOMPOSED),
        "F2 <= F2[x]/(x^2)": ({"S": dual_numbers}, MinimalType.RAMIFIED),
    }
    for name, (spec, typ) in expected.items():
        ext = build_extension(spec)
        c = classify_minimal(ext.base, ext.top)
        t.record("minimal_type_reference_instances", name, c.type is typ)
    ext = build_extension({"S": {"construct": "product", "factors": [gf2, gf4]}})
    EL = enumerate_interval(ext)
    rep = analyze_catenarity(EL)
    chain = [EL.name(T) for T in EL.first_chain()]
    middle = EL.subring(chain[1]) if len(chain) == 3 else None
    ok = (
        len(EL) == 3
        and len(chain) == 3
        and middle is not None
        and middle.order == 4
        and len(middle.primitive_idempotents) == 2
        and rep.t_closure == chain[1]
        and rep.graded
    )
    facts["F2 <= F2 x F4"] = {
        "chain": chain,
        "edge_types": [str(EL.edges[a, b].type) for a, b in zip(chain, chain[1:])],
        "t_closure": rep.t_closure,
        "graded": rep.graded,
    }
    t.record("three_chain_with_t_closure_in_the_middle", "F2 <= F2 x F4", ok)


# -- groups and towers ----------------------------------------------------------------


def run_group(cfg: VerifyConfig, results: dict, facts: dict, lattices: list) -> None:
    t = _Tally("group", results)
    non_ss = []
    for G in catalog(cfg.group_order):
        rep = t.guard("supersolvable_iff_graded", G.name, lambda: check_group_lattice(G))
        if rep is None:
            continue
        for check, passed in rep.checks.items():
            t.record(check, G.name, passed)
        if not rep.supersolvable_group:
            non_ss.append(G.name)
        lattices.append((f"subgroups of {G.name}", subgroup_lattice(G).lattice))
    facts["groups"] = len(catalog(cfg.group_order))
    facts["non_supersolvable_groups"] = non_ss


def run_tower(cfg: VerifyConfig, results: dict, facts: dict, lattices: list) -> None:
    t = _Tally("tower", results)
    for p, n in TOWERS:
        name = f"F{p}^{n}"
        tower = t.guard("tower_construction", name, lambda: field_tower(p, n))
        if tower is None:
            continue
        t.record("tower_construction", name, True)
        rep = check_d_lattice(tower)
        lattices.append((f"minimal polynomials of {name}", d_lattice(tower)))
        for check, passed in rep.checks.items():
            t.record(check, name, passed)
    facts["towers"] = [f"F{p}^{n}" for p, n in TOWERS]


def run(cfg: VerifyConfig | None = None) -> VerifyReport:
    cfg = cfg or VerifyConfig()
    start = time.perf_counter()
    results: dict[str, CheckResult] = {}
    facts: dict[str, Any] = {}
    lattices: list[tuple[str, FiniteLattice]] = []
    # lattice oracles also run on the lattices produced by the other topics
    if "ring" in cfg.topics:
        run_ring(cfg, results, facts, lattices)
    if "group" in cfg.topics:
        run_group(cfg, results, facts, lattices)
    if "tower" in cfg.topics:
        run_tower(cfg, results, facts, lattices)
    if "lattice" in cfg.topics:
        run_lattice(cfg, results, facts, lattices)
    ordered = dict(sorted(results.items(), key=lambda kv: (TOPICS.index(kv[1].topic), kv[0])))
    return VerifyReport(cfg, ordered, facts, time.perf_counter() - start)
