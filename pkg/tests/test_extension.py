from __future__ import annotations

import pytest

import oracles
from conftest import DUAL, GF2, GF4, ext, product
from catena.analysis import (
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
    is_minimal_pair,
    is_pointwise_minimal,
    is_subintegral_chainwise,
    is_t_closed,
    is_t_closed_direct,
    seminormalization_chainwise,
    t_closure,
    t_closure_chainwise,
)
from catena.errors import HypothesisNotMet, NotMinimal, TypePatternMismatch
from catena.lattice import is_graded
from catena.rings import RingExtension, Subring, ring_zmod, shared_ideals

INERT, DECOMPOSED, RAMIFIED = MinimalType.INERT, MinimalType.DECOMPOSED, MinimalType.RAMIFIED


def _coords(S, x) -> tuple[str, ...]:
    return tuple(S.labels[x].strip("()").split(","))


def _find(EL, pred) -> Subring:
    """The unique subring of the interval whose elements are exactly those satisfying ``pred``."""
    S = EL.ext.S
    want = {x for x in range(S.order) if pred(_coords(S, x))}
    (T,) = [T for T in EL if set(T.elements) == want]
    return T


# -- minimal extensions ------------------------------------------------------------------------


@pytest.mark.parametrize(
    "S, kind", [(GF4, INERT), (product(GF2, GF2), DECOMPOSED), (DUAL, RAMIFIED)], ids=["F4", "F2^2", "dual"]
)
def test_trichotomy_examples(S, kind):
    e = ext(S)
    c = classify_minimal(e.base, e.top)
    assert c.type is kind
    assert c.crucial.order == 1  # the zero ideal of F2
    if kind is RAMIFIED:
        (Q,) = c.over
        assert sorted(e.S.labels[x] for x in Q.elements) == ["0", "x"]


def test_classify_rejects_non_minimal():
    e = ext(product(GF2, GF4))
    with pytest.raises(NotMinimal):
        classify_minimal(e.base, e.top)
    assert not is_minimal_pair(e.base, e.top)


# -- the three-element chain F2 < F2 x F2 < F2 x F4 ------------------------------------------------


def test_f2_in_f2xf4_is_three_chain():
    EL = enumerate_interval(ext(product(GF2, GF4)))
    assert len(EL) == 3
    assert [T.order for T in EL] == [2, 4, 8]
    assert list(EL.edge_types.values()) == [DECOMPOSED, INERT]
    assert t_closure(EL) == EL.subrings[1] == t_closure_chainwise(EL)
    assert is_graded(EL.lattice).graded
    rep = analyze_catenarity(EL)
    assert rep.graded and rep.split and rep.two_catenarian and rep.ok


# -- closures ----------------------------------------------------------------------------------------


def test_closure_examples():
    f4 = ext(GF4)
    assert t_closure(f4) == f4.base and is_t_closed(f4) and is_t_closed_direct(f4)
    sq = ext(product(GF2, GF2))
    assert t_closure(sq) == sq.top
    assert is_infra_integral(sq) and is_infra_integral_direct(sq)
    assert not is_t_closed(sq) and not is_t_closed_direct(sq)
    ident = RingExtension.identity(ring_zmod(2))
    assert is_infra_integral_direct(ident) and is_t_closed_direct(ident)


def test_subintegral_examples():
    dual = ext(DUAL)
    assert is_subintegral_chainwise(dual) and seminormalization_chainwise(dual) == dual.top
    assert not is_subintegral_chainwise(ext(product(GF2, GF2)))
    assert is_subintegral_chainwise(RingExtension.identity(ring_zmod(3)))


# -- pointwise minimal ---------------------------------------------------------------------------------


def test_pointwise_examples():
    r = is_pointwise_minimal(ext(product(GF2, GF2)))
    assert r.pointwise_minimal and r.case == 1 and r.conditions_hold
    r = is_pointwise_minimal(ext(DUAL))
    assert r.pointwise_minimal and r.case == 2 and r.conditions_hold
    assert not is_pointwise_minimal(ext(product(GF2, GF4))).pointwise_minimal


# -- exchange of covers ------------------------------------------------------------------------------------


def test_crosswise_exchange_both_inert():
    EL = enumerate_interval(ext(product(GF4, GF4), gens=[4]))  # R = F2 x F2
    R = EL.bottom
    S = _find(EL, lambda c: c[1] in ("0", "1"))
    T = EL.top
    rep = check_crosswise_exchange(EL, R, S, T)
    assert rep.ok and rep.interval_size == 4
    assert set(rep.other.elements) == set(_find(EL, lambda c: c[0] in ("0", "1")).elements)
    assert rep.types == (INERT, INERT, INERT, INERT)


def test_crosswise_exchange_with_decomposed_step():
    # R = {(a, b, b)}, S = {(y, b, b)}, T = F4 x F2 x F2
    EL = enumerate_interval(ext(product(GF4, GF2, GF2), gens=[4, 3]))
    assert EL.bottom.order == 4
    S = _find(EL, lambda c: c[1] == c[2])
    rep = check_crosswise_exchange(EL, EL.bottom, S, EL.top)
    assert rep.ok and rep.types == (INERT, DECOMPOSED, DECOMPOSED, INERT)


def test_crosswise_exchange_needs_distinct_traces():
    EL = enumerate_interval(ext(product(GF2, GF4)))
    R, S, T = EL.subrings
    with pytest.raises(HypothesisNotMet):
        check_crosswise_exchange(EL, R, S, T)


# -- inert followed by non-inert -------------------------------------------------------------------------------


def test_inert_then_noninert_both_cases(corpus_intervals):
    seen = {True: 0, False: 0}
    for _, EL in corpus_intervals:
        for U, T, V in inert_then_noninert(EL):
            rep = check_inert_then_noninert(EL, U, T, V)
            assert rep.ok
            seen[rep.equal_conductors] += 1
    assert seen[True] > 0 and seen[False] > 0


def test_inert_then_noninert_equal_conductor_witness():
    EL = enumerate_interval(ext(product(GF4, GF4)))
    U, T, V = EL.subring("T0"), EL.subring("T2"), EL.subring("T6")
    rep = check_inert_then_noninert(EL, U, T, V)
    assert rep.equal_conductors and rep.length == 3 and rep.ok


def test_inert_then_noninert_pattern_mismatch():
    EL = enumerate_interval(ext(product(GF2, GF4)))
    with pytest.raises(TypePatternMismatch):
        check_inert_then_noninert(EL, *EL.subrings)


# -- transfer -------------------------------------------------------------------------------------------------------


def test_quotient_transfer_on_shared_ideals():
    e = ext({"construct": "poly_quotient", "base": {"construct": "zmod", "n": 2}, "modulus": [0, 0, 0, 1]}, gens=[4])
    for J in shared_ideals(e):
        assert check_quotient_transfer(e, J).ok


def test_idealization_transfer():
    assert check_idealization_transfer(ext(product(GF2, GF4))).ok
    assert check_idealization_transfer(ext(DUAL)).ok


def test_product_transfer():
    rep = check_product_transfer([ext(product(GF2, GF4)), ext(GF4)])
    assert rep.ok and rep.lengths == ((2, 2), (1, 1), (3, 3))


# -- corpus-wide agreement with the brute-force oracles ---------------------------------------------------------------


def test_covers_classify_like_definitions(corpus_intervals):
    """Every cover edge is of exactly one type and the type agrees with the residue definitions."""
    checked = 0
    for _, EL in corpus_intervals:
        S = EL.ext.S
        if S.order > 8:
            continue
        for (a, b), c in EL.edges.items():
            T, V = set(EL.subring(a).elements), set(EL.subring(b).elements)
            assert oracles.classify(S, T, V) == c.type.value
            assert set(c.crucial.elements) == oracles.conductor(S, T, V)
            checked += 1
    assert checked > 40


def test_interval_matches_subset_search(corpus_intervals):
    for _, EL in corpus_intervals:
        S = EL.ext.S
        if S.order > 8:
            continue
        expected = oracles.subsets_closed(S, set(EL.bottom.elements))
        assert {frozenset(T.elements) for T in EL} == set(expected)
        assert len(EL) == len(expected)


def test_t_closure_matches_definition(corpus_intervals):
    for _, EL in corpus_intervals:
        S = EL.ext.S
        expected = oracles.t_closure(S, set(EL.bottom.elements))
        assert set(t_closure(EL).elements) == expected
        assert set(t_closure_chainwise(EL).elements) == expected


def test_catenarity_checks_hold_on_corpus(corpus_intervals):
    failures = [(name, analyze_catenarity(EL).failed()) for name, EL in corpus_intervals]
    assert [f for f in failures if f[1]] == []


def test_infra_integral_definitions_agree(corpus_intervals):
    for _, EL in corpus_intervals:
        assert is_infra_integral(EL) == is_infra_integral_direct(EL.ext)
        assert is_t_closed(EL) == is_t_closed_direct(EL.ext)
