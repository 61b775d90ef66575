"""Catenarity of [R, S]: direct answer plus the structural criteria around the t-closure.

Every criterion is a check that must pass on every extension; when its
hypothesis fails the check passes vacuously. A failing check is a bug in the
tables, the enumeration or the classifier.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from catena.analysis.closure import (
    NON_INERT,
    is_infra_integral,
    is_t_closed,
    seminormalization_chainwise,
    t_closure,
    t_closure_chainwise,
)
from catena.analysis.interval import ExtensionLattice, enumerate_interval
from catena.analysis.minimal import MinimalType
from catena.errors import HypothesisNotMet, TypePatternMismatch
from catena.lattice import chain_lengths, interval, is_2_catenarian, is_graded, length
from catena.rings.extension import RingExtension, localize_at, msupp, support
from catena.rings.ring import Ideal, Subring, ideal_generated

CHAIN_LIMIT = 5000  # cap on per-chain checks; lattices in practice have far fewer

# every check analyze_catenarity can report, in report order
CHECKS = (
    "t_closure_definition_matches_cover_types",
    "t_closure_contains_seminormalization",
    "infra_integral_implies_graded",
    "t_closed_implies_graded",
    "below_t_closure_graded",
    "graded_iff_upper_graded_and_2_catenarian",
    "split_and_upper_graded_implies_graded",
    "chains_through_t_closure_have_length_m_plus_r",
    "some_chain_through_t_closure_is_longest",
    "chain_shorter_iff_inert_noninert_pattern",
    "max_ideal_sets_cover_support",
    "disjoint_max_ideal_sets_imply_graded",
    "graded_iff_no_shared_max_ideal_on_inert_noninert_triple",
    "unbranched_every_subring_local",
    "unbranched_graded_iff_split_and_upper_graded",
    "support_equals_crucial_traces",
    "graded_iff_locally_graded",
    "length_is_sum_over_support",
)


@dataclass
class CatenarityReport:
    graded: bool
    length: tuple[int, int]
    size: int
    t_closure: str
    seminormalization: str
    infra_integral: bool
    t_closed: bool
    upper_graded: bool
    two_catenarian: bool
    split: bool
    unbranched: bool
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_json(self) -> dict[str, Any]:
        return {
            "graded": self.graded,
            "length": {"min": self.length[0], "max": self.length[1]},
            "size": self.size,
            "t_closure": self.t_closure,
            "seminormalization": self.seminormalization,
            "infra_integral": self.infra_integral,
            "t_closed": self.t_closed,
            "upper_graded": self.upper_graded,
            "two_catenarian": self.two_catenarian,
            "split": self.split,
            "unbranched": self.unbranched,
            "checks": {k: "pass" if v else "fail" for k, v in self.checks.items()},
        }


def _implies(a: bool, b: bool) -> bool:
    return b or not a


def inert_then_noninert(EL: ExtensionLattice) -> list[tuple[Subring, Subring, Subring]]:
    """All U < T < V of covers with U < T inert and T < V decomposed or ramified."""
    out = []
    for (u, t), c in EL.edges.items():
        if c.type is not MinimalType.INERT:
            continue
        for v in EL.lattice.upper_covers(t):
            if EL.edges[t, v].type in NON_INERT:
                out.append((EL.subring(u), EL.subring(t), EL.subring(v)))
    return out


def _equal_conductors(EL: ExtensionLattice, U: Subring, T: Subring, V: Subring) -> bool:
    return EL.edge(U, T).crucial.mask == EL.edge(T, V).crucial.mask


def _chains(EL: ExtensionLattice, a=None, b=None) -> list[list[Subring]]:
    return list(itertools.islice(EL.maximal_chains(a, b), CHAIN_LIMIT))


def _lengths(EL: ExtensionLattice, a: Subring, b: Subring) -> set[int]:
    return chain_lengths(EL.lattice, EL.name(a), EL.name(b))


def analyze_catenarity(x: RingExtension | ExtensionLattice) -> CatenarityReport:
    EL = x if isinstance(x, ExtensionLattice) else enumerate_interval(x)
    ext = EL.ext
    L = EL.lattice
    R, S = EL.bottom, EL.top
    graded = bool(is_graded(L))
    ln = length(L)
    tR = t_closure(EL)
    tR_chain = t_closure_chainwise(EL)
    plusR = seminormalization_chainwise(EL)
    infra = is_infra_integral(EL)
    tclosed = is_t_closed(EL)
    upper = interval(L, EL.name(tR), EL.name(S))
    lower = interval(L, EL.name(R), EL.name(tR))
    upper_graded = bool(is_graded(upper))
    two_cat = is_2_catenarian(L)
    split = all(T <= tR or tR <= T for T in EL.subrings)
    unbranched = S.is_local
    m = length(lower).max_maximal
    r = length(upper).max_maximal
    checks: dict[str, bool] = {}

    checks["t_closure_definition_matches_cover_types"] = tR == tR_chain
    checks["t_closure_contains_seminormalization"] = plusR <= tR
    checks["infra_integral_implies_graded"] = _implies(infra, graded)
    checks["t_closed_implies_graded"] = _implies(tclosed, graded)
    checks["below_t_closure_graded"] = bool(is_graded(lower))
    checks["graded_iff_upper_graded_and_2_catenarian"] = graded == (upper_graded and two_cat)
    checks["split_and_upper_graded_implies_graded"] = _implies(split and upper_graded, graded)

    # chains through the t-closure
    through = {a + b for a in _lengths(EL, R, tR) for b in _lengths(EL, tR, S)}
    checks["chains_through_t_closure_have_length_m_plus_r"] = _implies(upper_graded, through == {m + r})
    best_through = max(through)
    checks["some_chain_through_t_closure_is_longest"] = best_through >= ln.max_maximal
    triples = inert_then_noninert(EL)
    if upper_graded:
        ok = True
        for ch in _chains(EL):
            pattern = any(
                EL.edge(a, b).type is MinimalType.INERT
                and EL.edge(b, c).type in NON_INERT
                and _equal_conductors(EL, a, b, c)
                for a, b, c in zip(ch, ch[1:], ch[2:])
            )
            ok &= (len(ch) - 1 < m + r) == pattern
        checks["chain_shorter_iff_inert_noninert_pattern"] = ok

    # maximal ideals of S split by where their traces on R lie in the support
    supp_all = set(support(ext))
    supp_lower = set(msupp(R, R, tR))
    supp_upper = set(msupp(R, tR, S))
    maxS = S.maximal_ideals
    M1 = {N for N in maxS if Ideal(R, N.mask & R.mask) in supp_lower}
    M2 = {N for N in maxS if Ideal(R, N.mask & R.mask) in supp_upper}
    if upper_graded:
        checks["max_ideal_sets_cover_support"] = M1 | M2 == {
            N for N in maxS if Ideal(R, N.mask & R.mask) in supp_all
        }
        checks["disjoint_max_ideal_sets_imply_graded"] = _implies(not (M1 & M2), graded)
        no_shared = True
        for U, T, V in triples:
            for N in M1:
                for N2 in M2:
                    if (
                        EL.edge(U, T).crucial.mask == N2.mask & T.mask
                        and EL.edge(T, V).crucial.mask == N.mask & T.mask
                        and N == N2
                    ):
                        no_shared = False
        checks["graded_iff_no_shared_max_ideal_on_inert_noninert_triple"] = graded == no_shared

    if unbranched:
        checks["unbranched_every_subring_local"] = all(T.is_local for T in EL.subrings)
        checks["unbranched_graded_iff_split_and_upper_graded"] = graded == (split and upper_graded)

    checks["support_equals_crucial_traces"] = all(
        {Ideal(R, EL.edge(a, b).crucial.mask & R.mask) for a, b in zip(ch, ch[1:])} == supp_all
        for ch in _chains(EL)
    )

    # local pieces
    local_graded, local_len = [], 0
    for M in supp_all:
        LEL = enumerate_interval(localize_at(ext, M))
        local_graded.append(bool(is_graded(LEL.lattice)))
        local_len += length(LEL.lattice).max_maximal
    checks["graded_iff_locally_graded"] = graded == all(local_graded)
    checks["length_is_sum_over_support"] = ln.max_maximal == local_len

    return CatenarityReport(
        graded=graded,
        length=(ln.min_maximal, ln.max_maximal),
        size=len(EL),
        t_closure=EL.name(tR),
        seminormalization=EL.name(plusR),
        infra_integral=infra,
        t_closed=tclosed,
        upper_graded=upper_graded,
        two_catenarian=two_cat,
        split=split,
        unbranched=unbranched,
        checks=checks,
    )


# -- exchange and length-two patterns ------------------------------------------


@dataclass
class ExchangeReport:
    other: Subring  # S' with [R, T] = {R, S, S', T}
    interval_size: int
    types: tuple[MinimalType, MinimalType, MinimalType, MinimalType]  # R<S, S<T, R<S', S'<T
    ok: bool


def check_crosswise_exchange(EL: ExtensionLattice, R: Subring, S: Subring, T: Subring) -> ExchangeReport:
    """Two covers R < S < T whose crucial ideals have different traces on R.

    Verifies that [R, T] has exactly one more element S', that R < S' has the
    type of S < T with crucial ideal N n R, and that S' < T has the type of
    R < S with crucial ideal M S'.
    """
    c1, c2 = EL.edge(R, S), EL.edge(S, T)
    M, N = c1.crucial, c2.crucial
    P_mask = N.mask & R.mask
    if P_mask & M.mask == P_mask:
        raise HypothesisNotMet("the trace of (S:T) on R lies inside (R:S)")
    inside = [U for U in EL.subrings if R <= U <= T]
    others = [U for U in inside if U not in (R, S, T)]
    if len(inside) != 4 or len(others) != 1:
        return ExchangeReport(others[0] if others else R, len(inside), (c1.type, c2.type, c1.type, c2.type), False)
    S2 = others[0]
    d1, d2 = EL.edge(R, S2), EL.edge(S2, T)
    ok = (
        d1.type is c2.type
        and d2.type is c1.type
        and d1.crucial.mask == P_mask
        and d2.crucial.mask == ideal_generated(S2, M.elements).mask
    )
    return ExchangeReport(S2, 4, (c1.type, c2.type, d1.type, d2.type), ok)


@dataclass
class InertPairReport:
    equal_conductors: bool
    interval_size: int
    length: int
    ok: bool


def check_inert_then_noninert(EL: ExtensionLattice, U: Subring, T: Subring, V: Subring) -> InertPairReport:
    """U < T inert followed by T < V non-inert.

    Distinct conductors force [U, V] to have exactly four elements; equal
    conductors force its length above 2.
    """
    if EL.edge(U, T).type is not MinimalType.INERT or EL.edge(T, V).type not in NON_INERT:
        raise TypePatternMismatch("need an inert cover followed by a decomposed or ramified one")
    equal = _equal_conductors(EL, U, T, V)
    size = sum(1 for W in EL.subrings if U <= W <= V)
    ln = length(EL.lattice, EL.name(U), EL.name(V)).max_maximal
    ok = ln > 2 if equal else size == 4
    return InertPairReport(equal, size, ln, ok)
