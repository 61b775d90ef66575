from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings

import oracles
from conftest import lattices
from catena.errors import CycleDetected, NotALattice, RedundantCover, SizeLimitExceeded
from catena.lattice import (
    FiniteLattice,
    atoms,
    chain_lattice,
    chain_lengths,
    diamond,
    divisor_lattice,
    dual,
    from_json,
    interval,
    is_2_catenarian,
    is_distributive,
    is_distributive_bruteforce,
    is_graded,
    is_graded_bruteforce,
    is_isomorphic,
    is_left_modular_element,
    is_left_modular_lattice,
    is_p_extension,
    is_supersolvable,
    left_modular_elements,
    length,
    loewy_series,
    maximal_chains,
    parse_dot,
    pentagon,
    product_lattice,
    sublattice_generated,
    to_dot,
    to_json,
)


def _oracle_args(L: FiniteLattice):
    return list(L.elements), list(L.covers)


# -- construction ----------------------------------------------------------------------


def test_chain_is_a_lattice_of_length_2():
    L = FiniteLattice([0, 1, 2], [(0, 1), (1, 2)])
    assert len(L) == 3 and length(L).max_maximal == 2


def test_diamond_and_pentagon_are_lattices():
    assert len(diamond()) == 5 and len(pentagon()) == 5
    assert diamond().bottom == "k" and diamond().top == "L"


def test_rejects_two_maximal_elements():
    with pytest.raises(NotALattice):
        FiniteLattice(["0", "a", "b"], [("0", "a"), ("0", "b")])


def test_rejects_missing_join():
    # two atoms with two incomparable upper bounds
    els = ["0", "a", "b", "c", "d", "1"]
    covers = [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d"), ("c", "1"), ("d", "1")]
    with pytest.raises(NotALattice):
        FiniteLattice(els, covers)


def test_rejects_cycle():
    with pytest.raises(CycleDetected):
        FiniteLattice(["a", "b"], [("a", "b"), ("b", "a")])


def test_rejects_redundant_cover():
    with pytest.raises(RedundantCover):
        FiniteLattice([0, 1, 2], [(0, 1), (1, 2), (0, 2)])


# -- gradedness and length -----------------------------------------------------------


def test_diamond_graded_with_ranks():
    res = is_graded(diamond())
    assert res.graded
    assert [res.rank[e] for e in diamond().elements] == [0, 1, 1, 1, 2]


def test_pentagon_not_graded():
    assert not is_graded(pentagon())
    assert chain_lengths(pentagon()) == {2, 3}


@pytest.mark.parametrize("n", range(6))
def test_chains_graded(n):
    assert is_graded(chain_lattice(n)).graded


def test_lengths():
    assert (length(diamond()).min_maximal, length(diamond()).max_maximal) == (2, 2)
    assert (length(pentagon()).min_maximal, length(pentagon()).max_maximal) == (2, 3)
    single = FiniteLattice(["x"], [])
    assert (length(single).min_maximal, length(single).max_maximal) == (0, 0)


def test_intervals():
    M = diamond()
    assert is_isomorphic(interval(M, "k", "k1"), chain_lattice(1))
    assert len(interval(M, "k2", "k2")) == 1
    assert len(interval(pentagon(), "0", "b")) == 3


def test_maximal_chains_of_pentagon():
    got = sorted(c.elements for c in maximal_chains(pentagon()))
    assert got == [("0", "a", "b", "1"), ("0", "c", "1")]


# -- distributivity and socles ------------------------------------------------------------


def test_distributivity_examples():
    assert not is_distributive(diamond())
    assert not is_distributive(pentagon())
    assert is_distributive(divisor_lattice(12))
    assert all(is_distributive(chain_lattice(n)) for n in range(5))


def test_loewy_series():
    assert loewy_series(diamond()) == ["k", "L"]
    assert loewy_series(chain_lattice(2)) == [0, 1, 2]
    # the two atoms a, c of N5 already join to the top
    assert loewy_series(pentagon()) == ["0", "1"]


def test_p_extension():
    assert is_p_extension(diamond())
    assert is_p_extension(chain_lattice(3))
    assert is_p_extension(pentagon())


def test_atoms():
    assert sorted(atoms(diamond())) == ["k1", "k2", "k3"]
    assert atoms(pentagon(), "a", "1") == ["b"]


# -- left modularity and supersolvability ---------------------------------------------------


def test_left_modular_examples():
    assert left_modular_elements(chain_lattice(3)) == [0, 1, 2, 3]
    assert left_modular_elements(diamond()) == list(diamond().elements)
    # only the short-side element c of N5 fails
    assert sorted(left_modular_elements(pentagon())) == ["0", "1", "a", "b"]
    assert is_left_modular_lattice(pentagon())
    assert not is_left_modular_element(pentagon(), "c")


def test_sublattice_generated():
    M = diamond()
    assert sorted(sublattice_generated(M, ["k1", "k2"]).elements) == ["L", "k", "k1", "k2"]
    assert len(sublattice_generated(chain_lattice(4), [1, 3])) == 2
    assert len(sublattice_generated(M, list(M.elements))) == 5


def test_supersolvable_examples():
    assert is_supersolvable(chain_lattice(4))
    assert is_supersolvable(diamond())
    assert not is_supersolvable(pentagon())


def test_supersolvable_cap():
    with pytest.raises(SizeLimitExceeded):
        is_supersolvable(divisor_lattice(720), cap=10)


def test_two_catenarian():
    assert is_2_catenarian(diamond())
    assert not is_2_catenarian(pentagon())


# -- products, duals, isomorphism, serialization -------------------------------------------


def test_product_grid():
    P = product_lattice(chain_lattice(2), chain_lattice(1))
    assert len(P) == 6 and is_graded(P).graded and length(P).max_maximal == 3


def test_product_with_singleton():
    single = FiniteLattice(["*"], [])
    assert is_isomorphic(product_lattice(pentagon(), single), pentagon())


def test_dual_of_pentagon_is_pentagon():
    assert is_isomorphic(dual(pentagon()), pentagon())
    assert dual(diamond()).bottom == "L"


def test_json_round_trip():
    L = divisor_lattice(30)
    back = from_json(to_json(L))
    assert is_isomorphic(L, back)


def test_dot_round_trip_with_awkward_labels():
    L = FiniteLattice(['a"b', "c\\d", "x y"], [('a"b', "c\\d"), ("c\\d", "x y")])
    back = parse_dot(to_dot(L))
    assert list(back.elements) == list(L.elements) and back.covers == L.covers


# -- agreement with the brute-force oracles ---------------------------------------------------


NAMED = [diamond(), pentagon(), divisor_lattice(12), divisor_lattice(30), chain_lattice(3)]


@pytest.mark.parametrize("L", NAMED, ids=["M3", "N5", "div12", "div30", "chain3"])
def test_named_lattices_agree_with_oracles(L):
    els, covers = _oracle_args(L)
    assert is_graded(L).graded == oracles.graded(els, covers)
    assert is_distributive(L) == oracles.distributive(els, covers)
    assert sorted(map(str, left_modular_elements(L))) == sorted(map(str, oracles.left_modular_elements(els, covers)))
    assert is_supersolvable(L) == oracles.supersolvable(els, covers)


@settings(max_examples=150, deadline=None)
@given(lattices())
def test_graded_matches_oracle(L):
    els, covers = _oracle_args(L)
    assert is_graded(L).graded == oracles.graded(els, covers) == is_graded_bruteforce(L)


@settings(max_examples=100, deadline=None)
@given(lattices())
def test_distributive_matches_oracle(L):
    els, covers = _oracle_args(L)
    assert is_distributive(L) == oracles.distributive(els, covers) == is_distributive_bruteforce(L)


@settings(max_examples=60, deadline=None)
@given(lattices(max_ground=4, max_sets=6))
def test_left_modular_matches_oracle(L):
    els, covers = _oracle_args(L)
    assert set(left_modular_elements(L)) == set(oracles.left_modular_elements(els, covers))


@settings(max_examples=40, deadline=None)
@given(lattices(max_ground=4, max_sets=5))
def test_supersolvable_matches_literal_definition(L):
    els, covers = _oracle_args(L)
    assert is_supersolvable(L) == oracles.supersolvable(els, covers)


# -- invariants ----------------------------------------------------------------------------------


@settings(max_examples=100, deadline=None)
@given(lattices())
def test_distributive_implies_graded(L):
    if is_distributive(L):
        assert is_graded(L).graded


@settings(max_examples=100, deadline=None)
@given(lattices())
def test_dual_preserves_properties(L):
    D = dual(L)
    assert is_graded(D).graded == is_graded(L).graded
    assert is_distributive(D) == is_distributive(L)
    assert length(D) == length(L)


@settings(max_examples=100, deadline=None)
@given(lattices())
def test_graded_implies_two_catenarian(L):
    if is_graded(L).graded:
        assert is_2_catenarian(L)


@settings(max_examples=60, deadline=None)
@given(lattices(max_ground=3, max_sets=4), lattices(max_ground=3, max_sets=4))
def test_product_lengths_add(A, B):
    P = product_lattice(A, B)
    assert is_graded(P).graded == (is_graded(A).graded and is_graded(B).graded)
    assert length(P).max_maximal == length(A).max_maximal + length(B).max_maximal
    assert length(P).min_maximal == length(A).min_maximal + length(B).min_maximal


@settings(max_examples=60, deadline=None)
@given(lattices(max_ground=4, max_sets=6))
def test_supersolvable_iff_graded_and_left_modular(L):
    assert is_supersolvable(L) == (is_graded(L).graded and is_left_modular_lattice(L))


@settings(max_examples=100, deadline=None)
@given(lattices())
def test_join_meet_tables_are_bounds(L):
    n = len(L)
    leq = L.leq.astype(bool)
    for a in range(n):
        for b in range(n):
            j, m = L.join_table[a, b], L.meet_table[a, b]
            assert leq[a, j] and leq[b, j] and leq[m, a] and leq[m, b]
    assert np.array_equal(L.join_table, L.join_table.T)


@settings(max_examples=50, deadline=None)
@given(lattices())
def test_dot_round_trip_is_isomorphic(L):
    assert is_isomorphic(parse_dot(to_dot(L)), L)
