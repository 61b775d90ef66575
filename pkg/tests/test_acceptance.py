"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line."""
from __future__ import annotations

import pytest

from conftest import GF2, GF4, ext, product
from catena.analysis import (
    MinimalType,
    analyze_catenarity,
    check_idealization_transfer,
    check_product_transfer,
    check_quotient_transfer,
    classify_minimal,
    corpus,
    enumerate_interval,
    is_infra_integral,
    t_closure,
    t_closure_chainwise,
)
from catena.galois import big_omega, catalog, check_d_lattice, cyclic, d_lattice, dihedral, field_tower, is_supersolvable_group, subgroup_lattice, symmetric
from catena.lattice import (
    SUPERSOLVABLE_CAP,
    chain_lengths,
    diamond,
    divisor_lattice,
    dual,
    is_distributive,
    is_graded,
    is_graded_bruteforce,
    is_isomorphic,
    is_left_modular_lattice,
    is_p_extension,
    is_supersolvable,
    length,
    loewy_series,
)
from catena.rings import shared_ideals
from catena.small_lattices import all_lattices


@pytest.fixture
def verdict(capsys):
    """Print one line per criterion straight to the terminal, then assert."""

    def emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            suffix = f" ({detail})" if detail else ""
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}{suffix}")
        assert ok, f"criterion {number} failed: {detail}"

    return emit


def test_criterion_01_diamond_facts(verdict):
    M = diamond()
    ok = (
        is_graded(M).graded
        and not is_distributive(M)
        and length(M).min_maximal == length(M).max_maximal == 2
        and loewy_series(M) == [M.bottom, M.top]
        and is_p_extension(M)
    )
    verdict(1, "M3 graded, non-distributive, length 2, Loewy series [bottom, top], P-extension", ok)


def test_criterion_02_three_chain(verdict):
    EL = enumerate_interval(ext(product(GF2, GF4)))
    S = EL.ext.S
    labels = [sorted(S.labels[x] for x in T.elements) for T in EL]
    f2xf2 = ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]
    ok = (
        len(EL) == 3
        and EL.lattice.covers == [("T0", "T1"), ("T1", "T2")]
        and labels[0] == ["(0,0)", "(1,1)"]
        and labels[1] == f2xf2
        and EL.subrings[2] == EL.ext.top
        and sorted(S.labels[x] for x in t_closure(EL).elements) == f2xf2
        and is_graded(EL.lattice).graded
    )
    verdict(2, "F2 <= F2 x F4 is the chain {R, F2 x F2, S}, t-closure F2 x F2, graded", ok)


def test_criterion_03_trichotomy(verdict, corpus_intervals):
    expected = {"F4": (GF4, MinimalType.INERT), "F2^2": (product(GF2, GF2), MinimalType.DECOMPOSED)}
    expected["F2[x]/(x^2)"] = (
        {"construct": "poly_quotient", "base": {"construct": "zmod", "n": 2}, "modulus": [0, 0, 1]},
        MinimalType.RAMIFIED,
    )
    types_ok = all(classify_minimal(ext(S).base, ext(S).top).type is kind for S, kind in expected.values())
    edges = violations = 0
    for _, EL in corpus_intervals:
        for (a, b), c in EL.edges.items():
            edges += 1
            T = EL.subring(a)
            if c.crucial not in T.maximal_ideals or c.crucial.mask & T.mask != c.crucial.mask:
                violations += 1
    verdict(3, "inert / decomposed / ramified examples and conductor maximal on every corpus edge",
            types_ok and violations == 0 and edges > 0, f"{edges} edges, {violations} violations")


def test_criterion_04_infra_integral_graded(verdict, corpus_intervals):
    infra = [EL for _, EL in corpus_intervals if is_infra_integral(EL)]
    bad = [EL for EL in infra if not is_graded(EL.lattice).graded]
    powers = [enumerate_interval(ext(product(*[GF2] * n))) for n in (2, 3)]
    ok = not bad and all(is_graded(EL.lattice).graded for EL in powers) and len(infra) > 0
    verdict(4, "every infra-integral corpus extension is graded; F2 <= F2^n graded for n = 2, 3", ok,
            f"{len(infra)} infra-integral, {len(bad)} counterexamples")


CRITERION_5_CHECKS = (
    "graded_iff_upper_graded_and_2_catenarian",
    "split_and_upper_graded_implies_graded",
    "disjoint_max_ideal_sets_imply_graded",
    "chains_through_t_closure_have_length_m_plus_r",
    "length_is_sum_over_support",
)


def test_criterion_05_catenarity_checks(verdict, corpus_intervals):
    failures = []
    for name, EL in corpus_intervals:
        rep = analyze_catenarity(EL)
        failures += [(name, c) for c in CRITERION_5_CHECKS if not rep.checks.get(c, False)]
    verdict(5, "2-catenarian biconditional, split sufficiency, disjoint ideal sets, chain length identity, support additivity",
            not failures, f"{len(corpus_intervals)} extensions, {len(failures)} failures")


def test_criterion_06_transfer(verdict):
    items = [it for it in corpus() if it.ext.is_proper]
    counts = {"quotient": 0, "idealization": 0, "product": 0}
    bad = []
    for it in items:
        for J in shared_ideals(it.ext):
            if J.order > 1:
                counts["quotient"] += 1
                if not check_quotient_transfer(it.ext, J).ok:
                    bad.append(("quotient", it.name))
        if it.ext.S.order <= 8:
            counts["idealization"] += 1
            if not check_idealization_transfer(it.ext).ok:
                bad.append(("idealization", it.name))
    small = [it for it in items if it.ext.S.order <= 4]
    non_graded = [it for it in items if not is_graded(enumerate_interval(it.ext).lattice).graded]
    for a in small:
        for b in small + non_graded:
            if a.ext.S.order * b.ext.S.order <= 64:
                counts["product"] += 1
                if not check_product_transfer([a.ext, b.ext]).ok:
                    bad.append(("product", f"{a.name} x {b.name}"))
    ok = not bad and all(counts.values())
    detail = ", ".join(f"{v} {k}" for k, v in counts.items()) + f", {len(bad)} failures"
    verdict(6, "gradedness and lengths transfer through quotients, idealizations and products", ok, detail)


def test_criterion_07_groups(verdict):
    groups = catalog()
    mismatch = [G.name for G in groups if is_supersolvable_group(G) != is_graded(subgroup_lattice(G).lattice).graded]
    s4, d4 = symmetric(4), dihedral(4)
    pinned = (
        (is_supersolvable_group(s4), is_graded(subgroup_lattice(s4).lattice).graded) == (False, False)
        and (is_supersolvable_group(d4), is_graded(subgroup_lattice(d4).lattice).graded) == (True, True)
        and length(subgroup_lattice(cyclic(12)).lattice).max_maximal == 3 == big_omega(12)
    )
    verdict(7, "supersolvable group iff graded subgroup lattice; S4 false/false, D4 true/true, Z/12 length 3",
            not mismatch and pinned and len(groups) == 74, f"{len(groups)} groups, {len(mismatch)} mismatches")


def test_criterion_08_supersolvable_lattices(verdict, corpus_intervals):
    checked = bad = 0
    sources = list(all_lattices(10))
    sources += [EL.lattice for _, EL in corpus_intervals if len(EL) <= 10]
    sources += [SL.lattice for SL in (subgroup_lattice(G) for G in catalog()) if len(SL.lattice) <= SUPERSOLVABLE_CAP]
    for L in sources:
        checked += 1
        if is_supersolvable(L) != (is_graded(L).graded and is_left_modular_lattice(L)):
            bad += 1
    verdict(8, "graded and left-modular iff supersolvable, all lattices <= 10 elements plus corpus and subgroup lattices",
            bad == 0, f"{checked} lattices, {bad} mismatches")


def test_criterion_09_field_towers(verdict):
    ok = True
    for n in (4, 6, 12):
        T = field_tower(2, n)
        D = d_lattice(T)
        rep = check_d_lattice(T)
        ok &= rep.ok
        ok &= is_isomorphic(D, dual(divisor_lattice(n)))
        ok &= rep.checks["covers_match_maximal_divisors"]
        ok &= chain_lengths(D) == {big_omega(n)}
    verdict(9, "p = 2, n in {4, 6, 12}: D reverses the divisor lattice, covers are maximal divisors, chains have length Omega(n)", ok)


def test_criterion_10_oracle_equivalence(verdict, corpus_intervals):
    lattices = disagree = 0
    for L in all_lattices(12):
        lattices += 1
        if is_graded(L).graded != is_graded_bruteforce(L):
            disagree += 1
    closures_bad = sum(1 for _, EL in corpus_intervals if t_closure(EL) != t_closure_chainwise(EL))
    verdict(10, "rank gradedness matches chain enumeration on every lattice <= 12 elements; t-closure fixpoint matches chain computation",
            disagree == 0 and closures_bad == 0 and lattices == 307770,
            f"{lattices} lattices, {disagree} disagreements, {len(corpus_intervals)} extensions, {closures_bad} closure mismatches")
